#include "nonfree/families.hpp"

#include <algorithm>
#include <cctype>

namespace nonfree {

std::string to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C_general: return "C_general";
    case Family::C_even: return "C_even";
    case Family::C_quad: return "C_quad";
    case Family::D: return "D";
    case Family::E: return "E";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
    return c == '_' ? '-' : static_cast<char>(std::tolower(c));
  });
  if (s == "a") return Family::A;
  if (s == "b") return Family::B;
  if (s == "c" || s == "c-general" || s == "general") return Family::C_general;
  if (s == "c-even" || s == "even") return Family::C_even;
  if (s == "c-quad" || s == "quad") return Family::C_quad;
  if (s == "d") return Family::D;
  if (s == "e") return Family::E;
  return std::nullopt;
}

bool is_family_c(Family f) {
  return f == Family::C_general || f == Family::C_even || f == Family::C_quad;
}

bool SigmaPair::valid() const {
  auto ok = [](int s) { return s >= 1 && s <= 3; };
  return ok(sigma0) && ok(sigma1) && sigma0 != sigma1;
}

std::string SigmaPair::str() const {
  return "(" + std::to_string(sigma0) + "," + std::to_string(sigma1) + ")";
}

std::vector<SigmaPair> all_sigma_pairs() {
  return {{1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 3}, {3, 2}};
}

BigInt u_seq(const SigmaPair& sigma, long k) {
  BigInt prev = 1, cur = 1;  // u_0, u_1
  if (k == 0 || k == 1) return 1;
  if (k > 1) {
    for (long i = 1; i < k; ++i) {
      BigInt next = 2 * sigma.at(i) * cur - prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    return cur;
  }
  // Backwards: u_{i-1} = 2 sigma_i u_i - u_{i+1}, starting from (u_0, u_1).
  BigInt hi = 1, lo = 1;  // u_{i+1}, u_i with i = 0
  for (long i = 0; i > k; --i) {
    BigInt below = 2 * sigma.at(i) * lo - hi;
    hi = std::move(lo);
    lo = std::move(below);
  }
  return lo;
}

BigInt fib(long k) {
  BigInt f;
  mpz_fib_ui(f.get_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k));
  // F_{-k} = (-1)^{k+1} F_k
  if (k < 0 && (-k) % 2 == 0) f = -f;
  return f;
}

std::pair<BigInt, BigInt> pell(long k) {
  BigInt h = 1, p = 0;
  if (k >= 0) {
    for (long i = 0; i < k; ++i) {
      BigInt nh = h + 2 * p;
      p = h + p;
      h = std::move(nh);
    }
  } else {
    // (1 2; 1 1)^{-1} = (-1 2; 1 -1)
    for (long i = 0; i > k; --i) {
      BigInt nh = -h + 2 * p;
      p = h - p;
      h = std::move(nh);
    }
  }
  return {h, p};
}

Rational markov_poly(const SigmaPair& sigma, const BigInt& x, const BigInt& y) {
  Rational s0(sigma.sigma0), s1(sigma.sigma1);
  Rational rx(x), ry(y);
  return Rational(1) + s0 * s1 + Rational(6) / s1 * rx * rx + Rational(6) / s0 * ry * ry -
         Rational(12) * rx * ry;
}

BigInt n_value(const SigmaPair& sigma, long k) {
  BigInt prod = 6 * u_seq(sigma, k) * u_seq(sigma, k + 1);
  BigInt q = prod / (sigma.sigma0 * sigma.sigma1);
  return q;
}

std::vector<BigInt> enumerate_n_values(const SigmaPair& sigma, long k_from, long k_to) {
  std::vector<BigInt> out;
  for (long k = k_from; k <= k_to; ++k) out.push_back(n_value(sigma, k));
  return out;
}

namespace {

int sign_of(const BigInt& v) { return sgn(v); }

BigInt minus_one_pow(long k) { return k % 2 == 0 ? BigInt(1) : BigInt(-1); }

// t >= 0 with t(t+1)/2 = k+1, if any.
std::optional<BigInt> triangular_root(long k) {
  BigInt disc = 8 * (BigInt(k) + 1) + 1;
  if (disc < 0 || !mpz_perfect_square_p(disc.get_mpz_t())) return std::nullopt;
  BigInt s;
  mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
  return BigInt((s - 1) / 2);
}

}  // namespace

BigInt default_x(Family family, long k) {
  BigInt prev;  // a_{l-1}
  if (family == Family::C_general) {
    prev = k;
  } else if (family == Family::E) {
    prev = minus_one_pow(k) * pell(k - 1).second * pell(k).second;
  } else {
    return 1;
  }
  return sign_of(prev) == 0 ? BigInt(1) : BigInt(-sign_of(prev));
}

bool family_excluded(Family family, long k, const std::optional<SigmaPair>& sigma,
                     std::string* why) {
  auto fail = [&](const char* rule) {
    if (why) *why = rule;
    return true;
  };
  if (family == Family::B) {
    if (!sigma || !sigma->valid()) return fail("sigma must be two distinct values in {1,2,3}");
    return false;
  }
  if (k == 0) return fail("k must be nonzero");
  if (family == Family::C_even && k % 2 != 0) return fail("C_even requires k even");
  if (family == Family::C_quad && !triangular_root(k)) {
    return fail("C_quad requires k = t(t+1)/2 - 1 for an integer t");
  }
  if (family == Family::D && k == -2) return fail("degenerate tau=0");
  return false;
}

FamilyInstance family_instance(Family family, long k, std::optional<SigmaPair> sigma,
                               std::optional<BigInt> x) {
  std::string rule;
  if (family_excluded(family, k, sigma, &rule)) throw FamilyError(rule);
  if (family != Family::B && sigma) throw FamilyError("sigma only applies to family B");
  bool takes_x = family == Family::C_general || family == Family::E;
  if (x && !takes_x) throw FamilyError("x only applies to families C_general and E");
  if (x && *x == 0) throw FamilyError("x must be nonzero");

  FamilyInstance inst;
  inst.family = family;
  inst.k = k;
  inst.sigma = sigma;
  if (takes_x) inst.x = x ? *x : default_x(family, k);

  const BigInt bk(k);
  switch (family) {
    case Family::A: {
      if (k == -1) {
        inst.tau = Rational(9, 4);
        inst.candidate = {1, -1, 1, 14, 2};
        inst.exceptional = true;
      } else {
        Rational r(2 * bk - 1, 2 * bk);
        inst.tau = r * r;
        inst.candidate = HalfRelCandidate(std::vector<BigInt>{1, -1, -bk, bk * (4 * bk + 4)});
      }
      break;
    }
    case Family::B: {
      const SigmaPair& s = *sigma;
      BigInt uk = u_seq(s, k), uk1 = u_seq(s, k + 1);
      BigInt n = n_value(s, k);
      inst.n = n;
      Rational r(n - 1, n);
      inst.tau = r * r;
      inst.candidate = HalfRelCandidate(std::vector<BigInt>{
          1, BigInt(6 / s.at(k + 1)) * uk * uk, BigInt(6 / s.at(k)) * uk1 * uk1, 1});
      break;
    }
    case Family::C_general:
      inst.tau = Rational(2 * bk + 1, bk);
      inst.candidate = HalfRelCandidate(std::vector<BigInt>{bk, -1, 1, -1, bk, *inst.x});
      break;
    case Family::C_even: {
      BigInt t = bk / 2;
      inst.t = t;
      inst.tau = Rational(2 * bk + 1, bk);
      inst.candidate =
          HalfRelCandidate(std::vector<BigInt>{1, -1, 1, -t, -4 * t * t + 2 * t - 2});
      break;
    }
    case Family::C_quad: {
      BigInt t = *triangular_root(k);
      inst.t = t;
      inst.tau = Rational(2 * bk + 1, bk);
      inst.candidate = HalfRelCandidate(std::vector<BigInt>{1, -1, 1, -t + 1, -t - 2});
      break;
    }
    case Family::D: {
      inst.tau = Rational(fib(k + 2), fib(k));
      BigInt big_n = 2 * minus_one_pow(k) * fib(k - 1) * fib(k);
      inst.candidate = HalfRelCandidate(std::vector<BigInt>{1, -1, 1, -1, big_n});
      if (k == 1) {
        inst.exceptional = true;
        inst.relator = ExpWord(Gen::G, {2, -1, 1, -2, 1, -1});
      }
      break;
    }
    case Family::E: {
      auto [h_next, unused] = pell(k + 1);
      BigInt p_k = pell(k).second;
      inst.tau = Rational(h_next, p_k);
      BigInt big_n = minus_one_pow(k) * pell(k - 1).second * p_k;
      inst.candidate =
          HalfRelCandidate(std::vector<BigInt>{big_n, -1, 1, -1, 1, -1, 1, -1, big_n, *inst.x});
      if (k == 1) {
        inst.exceptional = true;
        inst.relator = ExpWord(Gen::G, {1, -1, 1, -1, 1, -1});
      }
      break;
    }
  }

  inst.verified = is_half_relation(inst.candidate, inst.tau);
  if (inst.relator) {
    inst.verified = inst.verified && inst.relator->is_reduced() &&
                    eval_word(*inst.relator, inst.tau).is_identity();
  }
  if (inst.exceptional && family == Family::A) {
    inst.verified = inst.verified && classify_signs(inst.candidate) != RelationKind::Trivial;
  }
  return inst;
}

}  // namespace nonfree
