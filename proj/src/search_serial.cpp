#include "search_detail.hpp"

namespace nonfree {

namespace {

// Integer kernel: h_tau is replaced by q * h_tau = (q 0; a*p q), which
// scales the product without changing whether the defect vanishes.
struct SerialSearch {
  const SearchQuery& query;
  BigInt p, q;
  std::vector<std::vector<long>> values;
  std::vector<HalfRelCandidate>& hits;
  std::vector<long> prefix;

  void solve_last(const BigInt (&m)[4], std::size_t len) {
    BigInt num, den;
    if (len % 2 == 1) {
      num = q * m[2] - p * m[1];
      den = p * m[0];
    } else {
      num = q * (m[3] - m[0]);
      den = p * m[1];
    }
    auto emit = [&](long a) {
      HalfRelCandidate c;
      for (long x : prefix) c.a.emplace_back(x);
      c.a.emplace_back(a);
      hits.push_back(std::move(c));
    };
    if (den == 0) {
      if (num == 0) {
        for (long a : values[len - 1]) emit(a);
      }
      return;
    }
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) return;
    BigInt a = num / den;
    if (detail::value_allowed(query, len - 1, a)) emit(a.get_si());
  }

  void extend(const BigInt (&m)[4], std::size_t len) {
    std::size_t pos = prefix.size();
    if (pos + 1 == len) {
      solve_last(m, len);
      return;
    }
    for (long a : values[pos]) {
      BigInt next[4];
      if (pos % 2 == 0) {
        next[0] = m[0];
        next[1] = m[1] + a * m[0];
        next[2] = m[2];
        next[3] = m[3] + a * m[2];
      } else {
        BigInt ap = a * p;
        next[0] = q * m[0] + ap * m[1];
        next[1] = q * m[1];
        next[2] = q * m[2] + ap * m[3];
        next[3] = q * m[3];
      }
      prefix.push_back(a);
      extend(next, len);
      prefix.pop_back();
    }
  }
};

}  // namespace

SearchReport search_half_relations_serial(const SearchQuery& q) {
  validate(q);
  SearchReport report;
  report.query = q;
  std::vector<HalfRelCandidate> hits;
  SerialSearch s{q, q.tau.num(), q.tau.den(), {}, hits, {}};
  for (int i = 0; i < q.max_len; ++i) s.values.push_back(detail::allowed_values(q, i));
  const BigInt identity[4] = {1, 0, 0, 1};
  for (int len = 1; len <= q.max_len; ++len) s.extend(identity, static_cast<std::size_t>(len));
  detail::finalize(report, std::move(hits));
  return report;
}

Len4Report search_len4_positive_serial(long n_from, long n_to, long bound) {
  detail::validate_len4(n_from, n_to, bound);
  Len4Report report{n_from, n_to, bound, {}};
  for (long n = n_from; n <= n_to; ++n) {
    auto hits = detail::solve_len4(n, bound);
    if (!hits.empty()) report.hits.emplace(n, std::move(hits));
  }
  return report;
}

}  // namespace nonfree
