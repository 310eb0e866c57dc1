#include "nonfree/word.hpp"

#include <algorithm>

namespace nonfree {

bool ExpWord::is_reduced() const {
  return std::none_of(exponents.begin(), exponents.end(), [](const BigInt& a) { return a == 0; });
}

bool ExpWord::is_positive() const {
  return std::all_of(exponents.begin(), exponents.end(), [](const BigInt& a) { return a > 0; });
}

bool ExpWord::is_alternating_sign() const {
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    int s = sgn(exponents[i]);
    // 1-indexed position i+1 is odd when i is even
    if (i % 2 == 0 ? s >= 0 : s <= 0) return false;
  }
  return true;
}

ExpWord ExpWord::inverse() const {
  ExpWord r;
  if (exponents.empty()) return r;
  r.start = letter_at(exponents.size() - 1);
  r.exponents.reserve(exponents.size());
  for (auto it = exponents.rbegin(); it != exponents.rend(); ++it) r.exponents.push_back(-*it);
  return r;
}

ExpWord ExpWord::flip_g() const {
  ExpWord r = *this;
  for (std::size_t i = 0; i < r.exponents.size(); ++i) {
    if (letter_at(i) == Gen::G) r.exponents[i] = -r.exponents[i];
  }
  return r;
}

std::string ExpWord::str() const {
  std::string out;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (i) out += ' ';
    out += letter(letter_at(i));
    if (exponents[i] != 1) out += "^" + exponents[i].get_str();
  }
  return out.empty() ? "1" : out;
}

ExpWord concat(const ExpWord& a, const ExpWord& b) {
  if (a.exponents.empty()) return b;
  if (b.exponents.empty()) return a;
  ExpWord r = a;
  std::size_t skip = 0;
  if (a.letter_at(a.length() - 1) == b.start) {
    r.exponents.back() += b.exponents.front();
    skip = 1;
  }
  r.exponents.insert(r.exponents.end(), b.exponents.begin() + static_cast<long>(skip),
                     b.exponents.end());
  return r;
}

Mat2 gen_power(Gen tag, const BigInt& a, const Rational& tau) {
  if (tag == Gen::G) return {1, Rational(a), 0, 1};
  return {1, 0, Rational(a) * tau, 1};
}

Mat2 eval_word(const ExpWord& w, const Rational& tau) {
  Mat2 m;
  for (std::size_t i = 0; i < w.length(); ++i) {
    Rational a(w.exponents[i]);
    if (w.letter_at(i) == Gen::G) {
      // M * (1 a; 0 1)
      m.e12 += a * m.e11;
      m.e22 += a * m.e21;
    } else {
      // M * (1 0; a tau 1)
      Rational at = a * tau;
      m.e11 += at * m.e12;
      m.e21 += at * m.e22;
    }
  }
  return m;
}

MatPoly eval_word_symbolic(const ExpWord& w) {
  MatPoly m;
  for (std::size_t i = 0; i < w.length(); ++i) {
    const BigInt& a = w.exponents[i];
    if (w.letter_at(i) == Gen::G) {
      m.e12 += a * m.e11;
      m.e22 += a * m.e21;
    } else {
      UniPoly at = UniPoly::monomial(a, 1);
      m.e11 += at * m.e12;
      m.e21 += at * m.e22;
    }
  }
  return m;
}

}  // namespace nonfree
