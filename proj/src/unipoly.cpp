#include "nonfree/unipoly.hpp"

#include <stdexcept>

namespace nonfree {

UniPoly::UniPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

UniPoly::UniPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

UniPoly UniPoly::monomial(const BigInt& c, std::size_t power) {
  std::vector<BigInt> v(power + 1, BigInt(0));
  v[power] = c;
  return UniPoly(std::move(v));
}

void UniPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::evaluate(const Rational& tau) const {
  // Horner
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= tau;
    acc += Rational(*it);
  }
  return acc;
}

UniPoly UniPoly::divide_by_tau() const {
  if (is_zero()) return {};
  if (coeffs_.front() != 0) {
    throw std::logic_error("polynomial not divisible by tau (constant term " +
                           coeffs_.front().get_str() + ")");
  }
  return UniPoly(std::vector<BigInt>(coeffs_.begin() + 1, coeffs_.end()));
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigInt(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigInt(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

UniPoly operator*(const BigInt& s, const UniPoly& p) {
  UniPoly r = p;
  for (auto& c : r.coeffs_) c *= s;
  r.normalize();
  return r;
}

namespace {

std::string superscript(std::size_t n) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s;
  for (char c : std::to_string(n)) s += digits[c - '0'];
  return s;
}

}  // namespace

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "−";
    } else {
      out += c < 0 ? " − " : " + ";
    }
    if (i == 0 || mag != 1) out += mag.get_str();
    if (i >= 1) out += var;
    if (i >= 2) out += superscript(i);
  }
  return out;
}

Mat2 MatPoly::specialize(const Rational& tau) const {
  return {e11.evaluate(tau), e12.evaluate(tau), e21.evaluate(tau), e22.evaluate(tau)};
}

}  // namespace nonfree
