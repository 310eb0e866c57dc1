#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "nonfree/rational.hpp"
#include "nonfree/unipoly.hpp"
#include "nonfree/word.hpp"

namespace nonfree {

/// Exponent tuple (a_1, ..., a_l) of the alternating word g^{a_1} h^{a_2} ...
struct HalfRelCandidate {
  std::vector<BigInt> a;

  HalfRelCandidate() = default;
  explicit HalfRelCandidate(std::vector<BigInt> v) : a(std::move(v)) {}
  HalfRelCandidate(std::initializer_list<long> v) {
    for (long x : v) a.emplace_back(x);
  }

  std::size_t length() const { return a.size(); }
  ExpWord word() const { return ExpWord(Gen::G, a); }
  std::string str() const;

  friend bool operator==(const HalfRelCandidate&, const HalfRelCandidate&) = default;
};

/// Shortlex: shorter first, then lexicographic on exponents.
bool shortlex_less(const HalfRelCandidate& x, const HalfRelCandidate& y);

enum class RelationKind { GroupNontrivial, SemigroupAtTau, SemigroupAtMinusTau, Trivial };

std::string to_string(RelationKind k);

/// A pair of words with equal matrix value.
///
/// `tau` is the parameter the half-relation holds for; `eval_tau` is where
/// lhs and rhs are evaluated. They differ only for witnesses moved through
/// the diag(1,-1) conjugation (Γ(1,τ) and Γ(1,-τ) are conjugate).
struct RelationWitness {
  Rational tau;
  Rational eval_tau;
  ExpWord lhs;
  ExpWord rhs;
  /// lhs * rhs^{-1}; evaluates to the identity.
  ExpWord relator;
  RelationKind kind = RelationKind::Trivial;
  bool verified = false;

  Mat2 value() const { return eval_word(lhs, eval_tau); }
};

/// tau*c12(M) - c21(M) for odd l, c11(M) - c22(M) for even l.
Rational defect(const HalfRelCandidate& c, const Rational& tau);

/// Symbolic defect divided by tau. Throws std::logic_error if the division
/// is not exact.
UniPoly poly_hr(const HalfRelCandidate& c);

bool is_half_relation(const HalfRelCandidate& c, const Rational& tau);

HalfRelCandidate negate(const HalfRelCandidate& c);

RelationKind classify_signs(const HalfRelCandidate& c);

/// The symmetric relation g^{a_1} h^{a_2} ... = h^{a_l} g^{a_{l-1}} ...
/// Throws std::invalid_argument unless c is a half-relation for tau
/// (tau != 0 when l is odd).
RelationWitness build_relation(const HalfRelCandidate& c, const Rational& tau);

/// Two positive words with equal value: at tau for all-positive tuples, at
/// -tau (after conjugation by diag(1,-1)) for alternating-sign tuples.
/// Throws std::invalid_argument for other sign patterns.
RelationWitness build_semigroup_witness(const HalfRelCandidate& c, const Rational& tau);

/// Splits a relator R (R = Id at tau) into an equal-value pair
/// (first half, inverse of second half).
RelationWitness witness_from_relator(const ExpWord& relator, const Rational& tau,
                                     RelationKind kind);

/// Conjugates every word by diag(1,-1), moving the witness from eval_tau to
/// -eval_tau. The result is tagged GroupNontrivial (sign patterns do not
/// survive the conjugation).
RelationWitness flip_witness(const RelationWitness& w);

/// Re-evaluates the witness from its words alone.
bool recheck(const RelationWitness& w);

}  // namespace nonfree
