#pragma once

// Shared pieces of the serial and OpenMP search kernels.

#include <vector>

#include "nonfree/search.hpp"

namespace nonfree::detail {

/// Allowed exponents at 0-indexed position i, ascending.
std::vector<long> allowed_values(const SearchQuery& q, std::size_t i);

/// Candidate in canonical orientation for the query's sign mode.
bool value_allowed(const SearchQuery& q, std::size_t i, const BigInt& a);

void finalize(SearchReport& report, std::vector<HalfRelCandidate> hits);

void validate_len4(long n_from, long n_to, long bound);

/// All positive (a1..a4) <= bound with P_4 = 0 at tau = r/s, lexicographic.
std::vector<HalfRelCandidate> solve_len4(long n, long bound);

}  // namespace nonfree::detail
