#include <algorithm>
#include <stdexcept>

#include "search_detail.hpp"

namespace nonfree {

std::string to_string(SignMode m) {
  switch (m) {
    case SignMode::NonzeroAny: return "any";
    case SignMode::AllPositive: return "positive";
    case SignMode::Alternating: return "alternating";
  }
  return "any";
}

std::optional<SignMode> parse_sign_mode(std::string_view s) {
  if (s == "any" || s == "NonzeroAny" || s == "nonzero") return SignMode::NonzeroAny;
  if (s == "positive" || s == "AllPositive") return SignMode::AllPositive;
  if (s == "alternating" || s == "Alternating") return SignMode::Alternating;
  return std::nullopt;
}

void validate(const SearchQuery& q) {
  if (q.max_len < 1) throw std::invalid_argument("max_len must be >= 1");
  if (q.max_len > kMaxSearchLength) {
    throw std::invalid_argument("max_len must be <= " + std::to_string(kMaxSearchLength));
  }
  if (q.bound < 1) throw std::invalid_argument("bound must be >= 1");
  if (q.bound > 1000000) throw std::invalid_argument("bound must be <= 1000000");
  if (q.result_limit && *q.result_limit == 0) {
    throw std::invalid_argument("result limit must be positive");
  }
}

namespace detail {

std::vector<long> allowed_values(const SearchQuery& q, std::size_t i) {
  std::vector<long> v;
  bool neg = q.sign_mode == SignMode::NonzeroAny ||
             (q.sign_mode == SignMode::Alternating && i % 2 == 0);
  bool pos = q.sign_mode != SignMode::Alternating || i % 2 == 1;
  if (neg) {
    for (long a = -q.bound; a <= -1; ++a) v.push_back(a);
  }
  if (pos) {
    for (long a = 1; a <= q.bound; ++a) v.push_back(a);
  }
  return v;
}

bool value_allowed(const SearchQuery& q, std::size_t i, const BigInt& a) {
  if (a == 0 || abs(a) > q.bound) return false;
  switch (q.sign_mode) {
    case SignMode::NonzeroAny: return true;
    case SignMode::AllPositive: return a > 0;
    case SignMode::Alternating: return i % 2 == 0 ? a < 0 : a > 0;
  }
  return false;
}

void finalize(SearchReport& report, std::vector<HalfRelCandidate> hits) {
  std::sort(hits.begin(), hits.end(), shortlex_less);
  hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
  report.exhausted = true;
  if (report.query.result_limit && hits.size() > *report.query.result_limit) {
    hits.resize(*report.query.result_limit);
    report.exhausted = false;
  }
  report.hits = std::move(hits);
}

void validate_len4(long n_from, long n_to, long bound) {
  if (n_from < 2) throw std::invalid_argument("n_from must be >= 2");
  if (n_to < n_from) throw std::invalid_argument("n_to must be >= n_from");
  if (n_to > 1000000000L) throw std::invalid_argument("n_to must be <= 10^9");
  if (bound < 1 || bound > 1000000000L) throw std::invalid_argument("bound must be in [1, 10^9]");
}

std::vector<HalfRelCandidate> solve_len4(long n, long bound) {
  // tau = r/s. Positivity forces a1*a4*tau < 1, i.e. a1*a4*r < s; for fixed
  // (a1, a2, a4) the defect is affine in a3:
  //   a3 = a1*s*(a2 + a4) / (s*(a2 - a4) - a1*a2*a4*r).
  using i128 = __int128;
  const i128 r = static_cast<i128>(n - 1) * (n - 1);
  const i128 s = static_cast<i128>(n) * n;
  std::vector<HalfRelCandidate> out;
  for (long a1 = 1; a1 <= bound && a1 * r < s; ++a1) {
    for (long a2 = 1; a2 <= bound; ++a2) {
      for (long a4 = 1; a4 <= bound && a1 * a4 * r < s; ++a4) {
        i128 den = s * (a2 - a4) - static_cast<i128>(a1) * a2 * a4 * r;
        if (den <= 0) continue;
        i128 num = static_cast<i128>(a1) * s * (a2 + a4);
        if (num % den != 0) continue;
        i128 a3 = num / den;
        if (a3 < 1 || a3 > bound) continue;
        out.push_back(HalfRelCandidate{a1, a2, static_cast<long>(a3), a4});
      }
    }
  }
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

}  // namespace detail
}  // namespace nonfree
