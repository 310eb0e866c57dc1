#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nonfree/halfrel.hpp"
#include "nonfree/rational.hpp"
#include "nonfree/word.hpp"

namespace nonfree {

enum class Family { A, B, C_general, C_even, C_quad, D, E };

std::string to_string(Family f);
/// Accepts "a", "b", "c", "c-general", "c-even", "c-quad", "d", "e" (any case).
std::optional<Family> parse_family(std::string_view name);
bool is_family_c(Family f);

/// Distinct pair from {1, 2, 3}.
struct SigmaPair {
  int sigma0 = 1;
  int sigma1 = 2;

  /// sigma_{k mod 2}
  int at(long k) const { return (k % 2 + 2) % 2 == 0 ? sigma0 : sigma1; }
  bool valid() const;
  std::string str() const;
  friend bool operator==(const SigmaPair&, const SigmaPair&) = default;
};

/// All six ordered pairs.
std::vector<SigmaPair> all_sigma_pairs();

/// Violated family precondition; `rule` names it.
class FamilyError : public std::invalid_argument {
 public:
  explicit FamilyError(const std::string& rule)
      : std::invalid_argument(rule), rule_(rule) {}
  const std::string& rule() const { return rule_; }

 private:
  std::string rule_;
};

struct FamilyInstance {
  Family family = Family::A;
  long k = 0;
  std::optional<SigmaPair> sigma;
  std::optional<BigInt> x;
  /// Auxiliary parameter t of the C_even / C_quad half-relations.
  std::optional<BigInt> t;
  /// n with tau = ((n-1)/n)^2, family B only.
  std::optional<BigInt> n;
  Rational tau;
  HalfRelCandidate candidate;
  bool exceptional = false;
  /// Explicit relator (= Id) for the tau = 2 and tau = 3 exceptions.
  std::optional<ExpWord> relator;
  bool verified = false;
};

/// u^sigma_k: u_0 = u_1 = 1, u_{k-1} - 2 sigma_{k mod 2} u_k + u_{k+1} = 0.
BigInt u_seq(const SigmaPair& sigma, long k);

/// Doubly infinite Fibonacci numbers, F_1 = F_2 = 1.
BigInt fib(long k);

/// (H_k, P_k) = (1 2; 1 1)^k (1, 0).
std::pair<BigInt, BigInt> pell(long k);

/// 1 + s0 s1 + (6/s1) x^2 + (6/s0) y^2 - 12 x y
Rational markov_poly(const SigmaPair& sigma, const BigInt& x, const BigInt& y);

/// n = 6/(s0 s1) u_k u_{k+1}.
BigInt n_value(const SigmaPair& sigma, long k);

/// n values for k in [k_from, k_to], in k order.
std::vector<BigInt> enumerate_n_values(const SigmaPair& sigma, long k_from, long k_to);

/// Builds and verifies one member of a family. `sigma` is required for B;
/// `x` applies to C_general and E (default: -sign(a_{l-1}), or 1).
/// Throws FamilyError when a precondition is violated.
FamilyInstance family_instance(Family family, long k,
                               std::optional<SigmaPair> sigma = std::nullopt,
                               std::optional<BigInt> x = std::nullopt);

/// Default x used when none is given.
BigInt default_x(Family family, long k);

/// True when the (family, k) pair is excluded from the family's domain.
/// `why` receives the rule.
bool family_excluded(Family family, long k, const std::optional<SigmaPair>& sigma,
                     std::string* why = nullptr);

}  // namespace nonfree
