#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nonfree/families.hpp"
#include "nonfree/rational.hpp"

namespace nonfree {

/// Fixed-point decimal: value = scaled / 10^digits (truncated toward zero).
struct Decimal {
  BigInt scaled;
  int digits = 0;

  /// Rounds toward zero to `frac` fractional digits.
  std::string str(int frac = 50) const;
  friend auto operator<=>(const Decimal& a, const Decimal& b) { return cmp(a.scaled, b.scaled) <=> 0; }
  friend bool operator==(const Decimal& a, const Decimal& b) { return a.scaled == b.scaled; }
};

/// Working precision of the accumulation module (fractional digits).
inline constexpr int kAccumulationDigits = 60;

Decimal to_decimal(const Rational& x, int digits = kAccumulationDigits);

/// Limit of a family's tau values along one sign branch of k.
struct AccumulationTarget {
  Family family = Family::A;
  int direction = 1;  // sign of k
  /// Algebraic form of the limit, e.g. "phi^2" or "2+sqrt2".
  std::string description;
  /// The matching accumulation point of the negated values -tau.
  std::string negated;
  Decimal value;
  std::string numeric() const { return value.str(50); }
};

AccumulationTarget accumulation_target(Family family, int direction);

struct AccumulationRow {
  long k = 0;
  Rational tau;
  Decimal distance;
};

/// |tau_k - target| for each admissible k in [k_from, k_to]; excluded k are
/// skipped. `sigma` is required for family B.
std::vector<AccumulationRow> accumulation_report(Family family, long k_from, long k_to,
                                                 std::optional<SigmaPair> sigma = std::nullopt);

/// Distances strictly decrease as |k| grows, separately for k > 0 and k <= 0.
bool distances_strictly_decreasing(const std::vector<AccumulationRow>& rows);

}  // namespace nonfree
