#include "nonfree/accumulation.hpp"

#include <map>

namespace nonfree {

namespace {

BigInt pow10(int d) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(d));
  return r;
}

// floor(sqrt(n) * 10^digits)
BigInt sqrt_scaled(unsigned long n, int digits) {
  BigInt big = BigInt(n) * pow10(2 * digits);
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), big.get_mpz_t());
  return r;
}

}  // namespace

std::string Decimal::str(int frac) const {
  BigInt mag = abs(scaled);
  if (frac < digits) mag /= pow10(digits - frac);
  int shown = frac < digits ? frac : digits;
  std::string s = mag.get_str();
  if (static_cast<int>(s.size()) <= shown) s.insert(0, static_cast<std::size_t>(shown) + 1 - s.size(), '0');
  if (shown > 0) s.insert(s.size() - static_cast<std::size_t>(shown), ".");
  return (sgn(scaled) < 0 ? "-" : "") + s;
}

Decimal to_decimal(const Rational& x, int digits) {
  BigInt scaled = x.num() * pow10(digits);
  mpz_tdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), x.den().get_mpz_t());
  return {scaled, digits};
}

AccumulationTarget accumulation_target(Family family, int direction) {
  const int d = kAccumulationDigits;
  AccumulationTarget t;
  t.family = family;
  t.direction = direction >= 0 ? 1 : -1;
  BigInt one = pow10(d);
  switch (family) {
    case Family::A:
    case Family::B:
      t.description = "1";
      t.negated = "-1";
      t.value = {one, d};
      break;
    case Family::C_general:
    case Family::C_even:
    case Family::C_quad:
      t.description = "2";
      t.negated = "-2";
      t.value = {2 * one, d};
      break;
    case Family::D: {
      // phi^{±2} = (3 ± sqrt5) / 2
      BigInt s5 = sqrt_scaled(5, d + 2) / 100;
      t.description = t.direction > 0 ? "phi^2" : "phi^-2";
      t.negated = t.direction > 0 ? "-phi^2" : "-phi^-2";
      t.value = {t.direction > 0 ? BigInt((3 * one + s5) / 2) : BigInt((3 * one - s5) / 2), d};
      break;
    }
    case Family::E: {
      BigInt s2 = sqrt_scaled(2, d + 2) / 100;
      t.description = t.direction > 0 ? "2+sqrt2" : "2-sqrt2";
      t.negated = t.direction > 0 ? "-2-sqrt2" : "-2+sqrt2";
      t.value = {t.direction > 0 ? BigInt(2 * one + s2) : BigInt(2 * one - s2), d};
      break;
    }
  }
  return t;
}

std::vector<AccumulationRow> accumulation_report(Family family, long k_from, long k_to,
                                                 std::optional<SigmaPair> sigma) {
  std::vector<AccumulationRow> rows;
  for (long k = k_from; k <= k_to; ++k) {
    if (family_excluded(family, k, sigma)) continue;
    FamilyInstance inst = family_instance(family, k, family == Family::B ? sigma : std::nullopt);
    AccumulationTarget target = accumulation_target(family, k > 0 ? 1 : -1);
    Decimal tau = to_decimal(inst.tau);
    BigInt dist = abs(tau.scaled - target.value.scaled);
    rows.push_back({k, inst.tau, {dist, kAccumulationDigits}});
  }
  return rows;
}

bool distances_strictly_decreasing(const std::vector<AccumulationRow>& rows) {
  // branch -> (|k| -> distance)
  std::map<int, std::map<long, Decimal>> branches;
  for (const auto& r : rows) {
    int branch = r.k > 0 ? 1 : -1;
    branches[branch][r.k < 0 ? -r.k : r.k] = r.distance;
  }
  for (const auto& [branch, by_k] : branches) {
    const Decimal* prev = nullptr;
    for (const auto& [absk, dist] : by_k) {
      if (prev && !(dist < *prev)) return false;
      prev = &dist;
    }
  }
  return true;
}

}  // namespace nonfree
