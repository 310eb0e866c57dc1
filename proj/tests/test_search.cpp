#include <algorithm>
#include <set>

#include "doctest.h"
#include "nonfree/families.hpp"
#include "nonfree/search.hpp"
#include "oracles.hpp"

using namespace nonfree;

namespace {

bool contains(const std::vector<HalfRelCandidate>& v, const HalfRelCandidate& c) {
  return std::find(v.begin(), v.end(), c) != v.end();
}

SearchQuery query(const Rational& tau, int max_len, long bound,
                  SignMode mode = SignMode::NonzeroAny) {
  SearchQuery q;
  q.tau = tau;
  q.max_len = max_len;
  q.bound = bound;
  q.sign_mode = mode;
  q.result_limit = std::nullopt;
  return q;
}

std::vector<HalfRelCandidate> sorted(std::vector<HalfRelCandidate> v) {
  std::sort(v.begin(), v.end(), shortlex_less);
  return v;
}

}  // namespace

TEST_CASE("search examples") {
  SearchReport r = search_half_relations(query(Rational(9, 4), 5, 14));
  CHECK(contains(r.hits, {1, -1, 1, 14, 2}));
  CHECK(r.exhausted);

  r = search_half_relations(query(2, 3, 2));
  CHECK(contains(r.hits, {1, -2, 1}));

  r = search_half_relations(query(5, 4, 6));
  CHECK(r.hits.empty());
  CHECK(r.exhausted);
}

TEST_CASE("pruned search equals the naive oracle") {
  auto any = [](std::size_t, long) { return true; };
  for (const Rational& tau : {Rational(2), Rational(1, 4), Rational(9, 4)}) {
    for (int len = 1; len <= 4; ++len) {
      for (long bound : {3L, 8L}) {
        CAPTURE(tau.str());
        CAPTURE(len);
        CAPTURE(bound);
        auto expected = oracle::naive_search(tau, len, bound, any);
        CHECK(search_half_relations_serial(query(tau, len, bound)).hits == sorted(expected));
        CHECK(search_half_relations(query(tau, len, bound), 4).hits == sorted(expected));
      }
    }
  }
}

TEST_CASE("sign modes against the oracle") {
  auto positive = [](std::size_t, long a) { return a > 0; };
  auto alternating = [](std::size_t pos, long a) { return pos % 2 == 0 ? a < 0 : a > 0; };
  for (const Rational& tau : {Rational(1, 4), Rational(64, 81), Rational(-3), Rational(-5, 2)}) {
    CAPTURE(tau.str());
    CHECK(search_half_relations(query(tau, 4, 8, SignMode::AllPositive)).hits ==
          sorted(oracle::naive_search(tau, 4, 8, positive)));
    CHECK(search_half_relations(query(tau, 5, 5, SignMode::Alternating)).hits ==
          sorted(oracle::naive_search(tau, 5, 5, alternating)));
  }
  // family D, k = 2, normalized so that a_1 < 0
  CHECK(contains(search_half_relations(query(3, 5, 4, SignMode::Alternating)).hits,
                 {-1, 1, -1, 1, -2}));
}

TEST_CASE("serial and parallel agree across worker counts") {
  for (const Rational& tau : {Rational(9, 4), Rational(5, 2), Rational(1, 4), Rational(-7, 3)}) {
    SearchQuery q = query(tau, 5, 7);
    SearchReport serial = search_half_relations_serial(q);
    for (int w : {1, 2, 8}) {
      SearchReport par = search_half_relations(q, w);
      CHECK(par.hits == serial.hits);
      CHECK(par.exhausted == serial.exhausted);
    }
  }
}

TEST_CASE("soundness and negation pairs") {
  for (const Rational& tau : {Rational(2), Rational(9, 4), Rational(8, 3), Rational(1, 2)}) {
    SearchReport r = search_half_relations(query(tau, 5, 6));
    std::set<std::vector<BigInt>> seen;
    for (const auto& c : r.hits) {
      CHECK(oracle::naive_defect(std::vector<long>([&] {
                                   std::vector<long> v;
                                   for (const BigInt& a : c.a) v.push_back(a.get_si());
                                   return v;
                                 }()),
                                 tau)
                .is_zero());
      for (const BigInt& a : c.a) CHECK(a != 0);
      seen.insert(c.a);
    }
    CHECK(seen.size() == r.hits.size());
    for (const auto& c : r.hits) CHECK(seen.count(negate(c).a) == 1);
  }
}

TEST_CASE("result limit") {
  SearchQuery q = query(2, 4, 6);
  std::size_t total = search_half_relations(q).hits.size();
  REQUIRE(total > 3);
  q.result_limit = 3;
  SearchReport r = search_half_relations(q, 8);
  CHECK(r.hits.size() == 3);
  CHECK_FALSE(r.exhausted);
  CHECK(r.hits == search_half_relations_serial(q).hits);
  q.result_limit = total;
  CHECK(search_half_relations(q).exhausted);
}

TEST_CASE("query validation") {
  CHECK_THROWS_AS(validate(query(2, 0, 3)), std::invalid_argument);
  CHECK_THROWS_AS(validate(query(2, 13, 3)), std::invalid_argument);
  CHECK_THROWS_AS(validate(query(2, 3, 0)), std::invalid_argument);
  SearchQuery q = query(2, 3, 3);
  q.result_limit = 0;
  CHECK_THROWS_AS(validate(q), std::invalid_argument);
  CHECK(parse_sign_mode("positive") == SignMode::AllPositive);
  CHECK_FALSE(parse_sign_mode("nope").has_value());
}

TEST_CASE("length-4 solver against brute force") {
  for (long bound : {6L, 15L, 40L}) {
    Len4Report r = search_len4_positive(2, 40, bound, 4);
    Len4Report s = search_len4_positive_serial(2, 40, bound);
    CHECK(r.hits == s.hits);
    for (long n = 2; n <= 40; ++n) {
      auto brute = oracle::brute_len4(n, bound);
      std::sort(brute.begin(), brute.end(), shortlex_less);
      auto it = r.hits.find(n);
      if (brute.empty()) {
        CHECK(it == r.hits.end());
      } else {
        REQUIRE(it != r.hits.end());
        CHECK(it->second == brute);
      }
    }
  }
}

TEST_CASE("length-4 keys match the n-value oracle") {
  const long n_max = 3000;
  std::set<long> expected;
  for (const SigmaPair& s : all_sigma_pairs()) {
    for (BigInt n : enumerate_n_values(s, -12, 12)) {
      if (n >= 2 && n <= n_max) expected.insert(n.get_si());
    }
  }
  // 1105 and 2071 need a coefficient above 10^4
  Len4Report r = search_len4_positive(2, n_max, 25000);
  std::set<long> keys;
  for (const auto& [n, hits] : r.hits) keys.insert(n);
  CHECK(keys == expected);
  CHECK(r.hits.count(4) == 0);
  REQUIRE(r.hits.count(9) == 1);
  CHECK(contains(r.hits.at(9), {1, 6, 27, 1}));
  CHECK(contains(r.hits.at(1105), {1, 12675, 578, 1}));
  CHECK(contains(r.hits.at(2071), {1, 1083, 23762, 1}));
  for (const auto& [n, hits] : r.hits) {
    Rational tau = Rational(n - 1, n) * Rational(n - 1, n);
    for (const auto& c : hits) CHECK(is_half_relation(c, tau));
  }
}

TEST_CASE("length-4 validation") {
  CHECK_THROWS_AS(search_len4_positive(1, 5, 10), std::invalid_argument);
  CHECK_THROWS_AS(search_len4_positive(6, 5, 10), std::invalid_argument);
  CHECK_THROWS_AS(search_len4_positive(2, 5, 0), std::invalid_argument);
}
