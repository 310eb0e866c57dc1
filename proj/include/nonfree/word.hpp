#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "nonfree/mat2.hpp"
#include "nonfree/rational.hpp"
#include "nonfree/unipoly.hpp"

namespace nonfree {

/// The two generators: g = (1 1; 0 1) and h_tau = (1 0; tau 1).
enum class Gen { G, H };

inline Gen other(Gen x) { return x == Gen::G ? Gen::H : Gen::G; }
inline char letter(Gen x) { return x == Gen::G ? 'g' : 'h'; }

/// Alternating word x^{a_1} y^{a_2} x^{a_3} ... where x is `start` and y is
/// the other generator. Letters are implied by position.
struct ExpWord {
  Gen start = Gen::G;
  std::vector<BigInt> exponents;

  ExpWord() = default;
  ExpWord(Gen s, std::vector<BigInt> e) : start(s), exponents(std::move(e)) {}
  ExpWord(Gen s, std::initializer_list<long> e) : start(s) {
    for (long a : e) exponents.emplace_back(a);
  }

  std::size_t length() const { return exponents.size(); }
  Gen letter_at(std::size_t i) const { return i % 2 == 0 ? start : other(start); }

  bool is_reduced() const;
  bool is_positive() const;
  /// (-1)^i a_i > 0 for all 1-indexed i.
  bool is_alternating_sign() const;

  /// Formal inverse: reversed letters, negated exponents.
  ExpWord inverse() const;
  /// Conjugation by diag(1,-1): g^a -> g^-a, h_tau^b -> h_{-tau}^b.
  ExpWord flip_g() const;
  /// e.g. "g^2 h^-1 g".
  std::string str() const;

  friend bool operator==(const ExpWord&, const ExpWord&) = default;
};

/// Concatenation; adjacent equal letters are merged so the result alternates.
ExpWord concat(const ExpWord& a, const ExpWord& b);

Mat2 gen_power(Gen tag, const BigInt& a, const Rational& tau);
Mat2 eval_word(const ExpWord& w, const Rational& tau);
MatPoly eval_word_symbolic(const ExpWord& w);

}  // namespace nonfree
