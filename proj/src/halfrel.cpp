#include "nonfree/halfrel.hpp"

#include <algorithm>
#include <stdexcept>

namespace nonfree {

std::string HalfRelCandidate::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ",";
    out += a[i].get_str();
  }
  return out + ")";
}

bool shortlex_less(const HalfRelCandidate& x, const HalfRelCandidate& y) {
  if (x.a.size() != y.a.size()) return x.a.size() < y.a.size();
  return std::lexicographical_compare(x.a.begin(), x.a.end(), y.a.begin(), y.a.end());
}

std::string to_string(RelationKind k) {
  switch (k) {
    case RelationKind::GroupNontrivial: return "GroupNontrivial";
    case RelationKind::SemigroupAtTau: return "SemigroupAtTau";
    case RelationKind::SemigroupAtMinusTau: return "SemigroupAtMinusTau";
    case RelationKind::Trivial: return "Trivial";
  }
  return "Trivial";
}

Rational defect(const HalfRelCandidate& c, const Rational& tau) {
  Mat2 m = eval_word(c.word(), tau);
  if (c.length() % 2 == 1) return tau * m.e12 - m.e21;
  return m.e11 - m.e22;
}

UniPoly poly_hr(const HalfRelCandidate& c) {
  MatPoly m = eval_word_symbolic(c.word());
  UniPoly d = c.length() % 2 == 1 ? UniPoly{0, 1} * m.e12 - m.e21 : m.e11 - m.e22;
  return d.divide_by_tau();
}

bool is_half_relation(const HalfRelCandidate& c, const Rational& tau) {
  return defect(c, tau).is_zero();
}

HalfRelCandidate negate(const HalfRelCandidate& c) {
  HalfRelCandidate r = c;
  for (auto& x : r.a) x = -x;
  return r;
}

RelationKind classify_signs(const HalfRelCandidate& c) {
  ExpWord w = c.word();
  if (!w.is_reduced()) return RelationKind::Trivial;
  if (w.is_positive() || negate(c).word().is_positive()) return RelationKind::SemigroupAtTau;
  if (w.is_alternating_sign() || negate(c).word().is_alternating_sign()) {
    return RelationKind::SemigroupAtMinusTau;
  }
  return RelationKind::GroupNontrivial;
}

namespace {

void require_half_relation(const HalfRelCandidate& c, const Rational& tau) {
  if (c.length() == 0) throw std::invalid_argument("empty candidate");
  // The odd-length involution conjugates by diag(1, tau).
  if (tau.is_zero() && c.length() % 2 == 1) {
    throw std::invalid_argument("tau = 0 is degenerate for odd length (h_0 = Id)");
  }
  if (!is_half_relation(c, tau)) {
    throw std::invalid_argument(c.str() + " is not a half-relation for tau = " + tau.str());
  }
}

bool verify_pair(const ExpWord& lhs, const ExpWord& rhs, const ExpWord& relator,
                 const Rational& tau) {
  Mat2 l = eval_word(lhs, tau);
  return l == eval_word(rhs, tau) && eval_word(relator, tau).is_identity() && l.det() == 1;
}

}  // namespace

RelationWitness build_relation(const HalfRelCandidate& c, const Rational& tau) {
  require_half_relation(c, tau);
  RelationWitness w;
  w.tau = tau;
  w.eval_tau = tau;
  w.lhs = c.word();
  std::vector<BigInt> reversed(c.a.rbegin(), c.a.rend());
  w.rhs = ExpWord(Gen::H, std::move(reversed));
  w.relator = concat(w.lhs, w.rhs.inverse());
  w.kind = classify_signs(c);
  w.verified = verify_pair(w.lhs, w.rhs, w.relator, tau);
  return w;
}

RelationWitness build_semigroup_witness(const HalfRelCandidate& c, const Rational& tau) {
  RelationKind kind = classify_signs(c);
  if (kind != RelationKind::SemigroupAtTau && kind != RelationKind::SemigroupAtMinusTau) {
    throw std::invalid_argument(c.str() + " has no semigroup sign pattern (" + to_string(kind) +
                                ")");
  }
  require_half_relation(c, tau);

  if (kind == RelationKind::SemigroupAtTau) {
    HalfRelCandidate pos = c.word().is_positive() ? c : negate(c);
    RelationWitness w = build_relation(pos, tau);
    w.verified = w.verified && w.lhs.is_positive() && w.rhs.is_positive();
    return w;
  }

  // Normalize so that a_1 < 0, a_2 > 0, ...; conjugation then makes the
  // even-length pair positive, and the odd-length relator positive.
  HalfRelCandidate alt = c.word().is_alternating_sign() ? c : negate(c);
  RelationWitness base = build_relation(alt, tau);
  RelationWitness w;
  w.tau = tau;
  w.eval_tau = -tau;
  w.kind = RelationKind::SemigroupAtMinusTau;
  if (alt.length() % 2 == 0) {
    w.lhs = base.lhs.flip_g();
    w.rhs = base.rhs.flip_g();
  } else {
    ExpWord relator = base.relator.flip_g();
    w.lhs = concat(relator, ExpWord(Gen::G, {1}));
    w.rhs = ExpWord(Gen::G, {1});
  }
  w.relator = concat(w.lhs, w.rhs.inverse());
  w.verified = base.verified && w.lhs.is_positive() && w.rhs.is_positive() &&
               verify_pair(w.lhs, w.rhs, w.relator, w.eval_tau);
  return w;
}

RelationWitness witness_from_relator(const ExpWord& relator, const Rational& tau,
                                     RelationKind kind) {
  std::size_t half = (relator.length() + 1) / 2;
  ExpWord first(relator.start, std::vector<BigInt>(relator.exponents.begin(),
                                                   relator.exponents.begin() + half));
  ExpWord second(relator.letter_at(half),
                 std::vector<BigInt>(relator.exponents.begin() + half, relator.exponents.end()));
  RelationWitness w;
  w.tau = tau;
  w.eval_tau = tau;
  w.lhs = first;
  w.rhs = second.length() ? second.inverse() : ExpWord(Gen::G, {0});
  w.relator = relator;
  w.kind = kind;
  w.verified = verify_pair(w.lhs, w.rhs, w.relator, tau);
  return w;
}

RelationWitness flip_witness(const RelationWitness& w) {
  RelationWitness r = w;
  r.eval_tau = -w.eval_tau;
  r.lhs = w.lhs.flip_g();
  r.rhs = w.rhs.flip_g();
  r.relator = w.relator.flip_g();
  if (r.kind != RelationKind::Trivial) r.kind = RelationKind::GroupNontrivial;
  r.verified = w.verified && verify_pair(r.lhs, r.rhs, r.relator, r.eval_tau);
  return r;
}

bool recheck(const RelationWitness& w) {
  if (w.lhs == w.rhs) return false;
  if (!verify_pair(w.lhs, w.rhs, w.relator, w.eval_tau)) return false;
  if (w.relator != concat(w.lhs, w.rhs.inverse())) return false;
  bool positive = w.lhs.is_positive() && w.rhs.is_positive();
  if (w.kind == RelationKind::SemigroupAtTau && !positive) return false;
  if (w.kind == RelationKind::SemigroupAtMinusTau && w.eval_tau == -w.tau && !positive) {
    return false;
  }
  return true;
}

}  // namespace nonfree
