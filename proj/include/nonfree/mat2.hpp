#pragma once

#include <string>

#include "nonfree/rational.hpp"

namespace nonfree {

/// 2x2 matrix over the rationals, entries named by (row, column).
struct Mat2 {
  Rational e11{1}, e12{0}, e21{0}, e22{1};

  static Mat2 identity() { return {}; }
  static Mat2 diag(const Rational& a, const Rational& d) { return {a, 0, 0, d}; }

  Rational det() const { return e11 * e22 - e12 * e21; }
  Mat2 transpose() const { return {e11, e21, e12, e22}; }
  /// Throws std::domain_error for a singular matrix.
  Mat2 inverse() const;
  bool is_identity() const { return *this == identity(); }
  std::string str() const;

  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.e11 * b.e11 + a.e12 * b.e21, a.e11 * b.e12 + a.e12 * b.e22,
            a.e21 * b.e11 + a.e22 * b.e21, a.e21 * b.e12 + a.e22 * b.e22};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

}  // namespace nonfree
