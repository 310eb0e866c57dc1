#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nonfree/halfrel.hpp"
#include "nonfree/rational.hpp"

namespace nonfree {

enum class SignMode { NonzeroAny, AllPositive, Alternating };

std::string to_string(SignMode m);
/// "any", "positive", "alternating" (also the enum names).
std::optional<SignMode> parse_sign_mode(std::string_view s);

inline constexpr int kMaxSearchLength = 12;

struct SearchQuery {
  Rational tau;
  int max_len = 5;
  long bound = 10;  // |a_i| <= bound
  SignMode sign_mode = SignMode::NonzeroAny;
  /// nullopt: unlimited.
  std::optional<std::size_t> result_limit = 1000;
};

/// Throws std::invalid_argument for an oversize or malformed query.
void validate(const SearchQuery& q);

struct SearchReport {
  SearchQuery query;
  /// Shortlex order; Alternating hits are normalized to a_1 < 0.
  std::vector<HalfRelCandidate> hits;
  /// False when the result limit truncated the hit list.
  bool exhausted = true;
};

/// OpenMP search split over (length, a_1). `workers` <= 0 uses the OpenMP
/// default. Output is independent of the worker count.
SearchReport search_half_relations(const SearchQuery& q, int workers = 0);

/// Single-threaded reference implementation of the same contract.
SearchReport search_half_relations_serial(const SearchQuery& q);

/// Positive length-4 half-relations for tau = ((n-1)/n)^2.
struct Len4Report {
  long n_from = 2;
  long n_to = 2;
  long bound = 1;
  /// Only n with at least one hit; each list in lexicographic order.
  std::map<long, std::vector<HalfRelCandidate>> hits;
};

/// Throws std::invalid_argument unless 2 <= n_from <= n_to <= 10^9 and
/// 1 <= bound <= 10^9.
Len4Report search_len4_positive(long n_from, long n_to, long bound, int workers = 0);
Len4Report search_len4_positive_serial(long n_from, long n_to, long bound);

}  // namespace nonfree
