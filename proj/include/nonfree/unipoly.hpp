#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "nonfree/mat2.hpp"
#include "nonfree/rational.hpp"

namespace nonfree {

/// Dense univariate polynomial in tau with integer coefficients, lowest
/// degree first. The zero polynomial has no coefficients; otherwise the
/// leading coefficient is nonzero.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(std::initializer_list<long> coeffs);
  explicit UniPoly(std::vector<BigInt> coeffs);

  static UniPoly constant(const BigInt& c) { return UniPoly(std::vector<BigInt>{c}); }
  /// The monomial c * tau^power.
  static UniPoly monomial(const BigInt& c, std::size_t power);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

  Rational evaluate(const Rational& tau) const;

  /// Exact division by tau. Throws std::logic_error if the constant term
  /// is nonzero.
  UniPoly divide_by_tau() const;

  /// Human-readable form, e.g. "7τ² − 23τ + 11".
  std::string str(const std::string& var = "τ") const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const BigInt& s, const UniPoly& p);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

/// 2x2 matrix of polynomials in tau; symbolic counterpart of Mat2.
struct MatPoly {
  UniPoly e11{1}, e12{}, e21{}, e22{1};

  UniPoly det() const { return e11 * e22 - e12 * e21; }
  Mat2 specialize(const Rational& tau) const;

  friend MatPoly operator*(const MatPoly& a, const MatPoly& b) {
    return {a.e11 * b.e11 + a.e12 * b.e21, a.e11 * b.e12 + a.e12 * b.e22,
            a.e21 * b.e11 + a.e22 * b.e21, a.e21 * b.e12 + a.e22 * b.e22};
  }
  friend bool operator==(const MatPoly&, const MatPoly&) = default;
};

}  // namespace nonfree
