#include <omp.h>

#include <array>

#include "search_detail.hpp"

namespace nonfree {

namespace {

using IntMat = std::array<BigInt, 4>;

struct Task {
  int length;
  long first;  // a_1; unused for length 1
};

class Kernel {
 public:
  explicit Kernel(const SearchQuery& q) : query_(q), p_(q.tau.num()), q_(q.tau.den()) {
    for (int i = 0; i < q.max_len; ++i) values_.push_back(detail::allowed_values(q, i));
  }

  std::vector<Task> tasks() const {
    std::vector<Task> out{{1, 0}};
    for (int len = 2; len <= query_.max_len; ++len) {
      for (long a : values_[0]) out.push_back({len, a});
    }
    return out;
  }

  // Hits of one task in canonical order; stops once `cap` hits are found.
  std::vector<HalfRelCandidate> run(const Task& t, std::size_t cap) const {
    std::vector<HalfRelCandidate> out;
    const auto len = static_cast<std::size_t>(t.length);
    std::vector<IntMat> stack(len);
    std::vector<long> prefix(len, 0);
    stack[0] = {1, 0, 0, 1};
    if (len == 1) {
      solve_last(stack[0], prefix, len, cap, out);
      return out;
    }
    prefix[0] = t.first;
    apply(stack[0], 0, t.first, stack[1]);
    if (len == 2) {
      solve_last(stack[1], prefix, len, cap, out);
      return out;
    }
    // Iterative DFS over positions 1 .. len-2; idx[i] indexes values_[i].
    std::vector<std::size_t> idx(len, 0);
    std::size_t pos = 1;
    while (pos >= 1) {
      if (out.size() >= cap) break;
      if (idx[pos] == values_[pos].size()) {
        idx[pos] = 0;
        --pos;
        if (pos >= 1) ++idx[pos];
        continue;
      }
      long a = values_[pos][idx[pos]];
      prefix[pos] = a;
      apply(stack[pos], pos, a, stack[pos + 1]);
      if (pos + 2 == len) {
        solve_last(stack[pos + 1], prefix, len, cap, out);
        ++idx[pos];
      } else {
        ++pos;
      }
    }
    return out;
  }

 private:
  void apply(const IntMat& m, std::size_t pos, long a, IntMat& next) const {
    if (pos % 2 == 0) {
      next[0] = m[0];
      next[1] = m[1] + a * m[0];
      next[2] = m[2];
      next[3] = m[3] + a * m[2];
    } else {
      BigInt ap = a * p_;
      next[0] = q_ * m[0] + ap * m[1];
      next[1] = q_ * m[1];
      next[2] = q_ * m[2] + ap * m[3];
      next[3] = q_ * m[3];
    }
  }

  void solve_last(const IntMat& m, std::vector<long>& prefix, std::size_t len, std::size_t cap,
                  std::vector<HalfRelCandidate>& out) const {
    BigInt num, den;
    if (len % 2 == 1) {
      num = q_ * m[2] - p_ * m[1];
      den = p_ * m[0];
    } else {
      num = q_ * (m[3] - m[0]);
      den = p_ * m[1];
    }
    auto emit = [&](long a) {
      if (out.size() >= cap) return;
      HalfRelCandidate c;
      c.a.reserve(len);
      for (std::size_t i = 0; i + 1 < len; ++i) c.a.emplace_back(prefix[i]);
      c.a.emplace_back(a);
      out.push_back(std::move(c));
    };
    if (den == 0) {
      if (num == 0) {
        for (long a : values_[len - 1]) emit(a);
      }
      return;
    }
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) return;
    BigInt a = num / den;
    if (detail::value_allowed(query_, len - 1, a)) emit(a.get_si());
  }

  const SearchQuery& query_;
  BigInt p_, q_;
  std::vector<std::vector<long>> values_;
};

int resolve_workers(int workers) { return workers > 0 ? workers : omp_get_max_threads(); }

}  // namespace

SearchReport search_half_relations(const SearchQuery& q, int workers) {
  validate(q);
  Kernel kernel(q);
  const std::vector<Task> tasks = kernel.tasks();
  // One hit past the limit per task is enough to detect truncation.
  const std::size_t cap = q.result_limit ? *q.result_limit + 1 : SIZE_MAX;
  std::vector<std::vector<HalfRelCandidate>> per_task(tasks.size());
  const long n_tasks = static_cast<long>(tasks.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(resolve_workers(workers))
  for (long i = 0; i < n_tasks; ++i) {
    per_task[static_cast<std::size_t>(i)] = kernel.run(tasks[static_cast<std::size_t>(i)], cap);
  }

  std::vector<HalfRelCandidate> hits;
  for (auto& part : per_task) {
    for (auto& c : part) hits.push_back(std::move(c));
  }
  SearchReport report;
  report.query = q;
  detail::finalize(report, std::move(hits));
  return report;
}

Len4Report search_len4_positive(long n_from, long n_to, long bound, int workers) {
  detail::validate_len4(n_from, n_to, bound);
  const long count = n_to - n_from + 1;
  std::vector<std::vector<HalfRelCandidate>> per_n(static_cast<std::size_t>(count));

#pragma omp parallel for schedule(dynamic, 4) num_threads(resolve_workers(workers))
  for (long i = 0; i < count; ++i) {
    per_n[static_cast<std::size_t>(i)] = detail::solve_len4(n_from + i, bound);
  }

  Len4Report report{n_from, n_to, bound, {}};
  for (long i = 0; i < count; ++i) {
    auto& h = per_n[static_cast<std::size_t>(i)];
    if (!h.empty()) report.hits.emplace(n_from + i, std::move(h));
  }
  return report;
}

}  // namespace nonfree
