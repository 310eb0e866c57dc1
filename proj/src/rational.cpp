#include "nonfree/rational.hpp"

#include <stdexcept>

namespace nonfree {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational");
  value_ /= o.value_;
  return *this;
}

Rational Rational::inverse() const { return Rational(1) / *this; }

std::string Rational::str() const { return value_.get_str(); }

BigInt parse_bigint(std::string_view text) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (digits.empty()) throw std::invalid_argument("empty integer");
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
    }
  }
  BigInt v(std::string(digits), 10);
  return negative ? BigInt(-v) : v;
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  std::string_view den = text.substr(slash + 1);
  if (!den.empty() && (den.front() == '-' || den.front() == '+')) {
    throw std::invalid_argument("sign belongs on the numerator: '" + std::string(text) + "'");
  }
  return Rational(parse_bigint(text.substr(0, slash)), parse_bigint(den));
}

bool rational_sqrt(const Rational& x, Rational& root) {
  if (x.sign() < 0) return false;
  BigInt n = x.num();
  BigInt d = x.den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) {
    return false;
  }
  BigInt rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  root = Rational(rn, rd);
  return true;
}

}  // namespace nonfree
