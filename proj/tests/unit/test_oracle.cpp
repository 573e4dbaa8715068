#include "ap5/errors.hpp"
#include "ap5/oracle.hpp"

#include <doctest.h>

#include "../support/oracles.hpp"

#include <algorithm>

using namespace ap5;

namespace {

/// Straight double loop over the box; records sorted like search_solutions output is compared as sets.
std::vector<SolutionRecord> naive_search(long box, unsigned nmax) {
  std::vector<SolutionRecord> out;
  for (long x = -box; x <= box; ++x) {
    for (long d = -box; d <= box; ++d) {
      if (oracle::gcd(Int(x), Int(d)) != 1) continue;
      const Int v = oracle::equation_lhs(Int(x), Int(d));
      for (unsigned n = 2; n <= nmax; ++n) {
        Int y;
        if (oracle::perfect_power(v, n, y)) out.push_back({Int(x), Int(d), y, n});
      }
    }
  }
  return out;
}

bool record_less(const SolutionRecord& a, const SolutionRecord& b) {
  if (a.x != b.x) return a.x < b.x;
  if (a.d != b.d) return a.d < b.d;
  return a.n < b.n;
}

}  // namespace

TEST_CASE("main form factorization") {
  for (long x = -12; x <= 12; ++x) {
    for (long d = -12; d <= 12; ++d) {
      const Int X(x), D(d);
      CHECK(main_form(X, D) == oracle::equation_lhs(X, D));
      CHECK(main_form(X, D) == X * (3 * X * X * X * X + 20 * X * X * D * D + 10 * D * D * D * D));
    }
  }
}

TEST_CASE("search agrees with a naive double loop") {
  auto fast = search_solutions(25, 25, 9, 3);
  auto slow = naive_search(25, 9);
  std::sort(fast.begin(), fast.end(), record_less);
  std::sort(slow.begin(), slow.end(), record_less);
  CHECK(fast == slow);
  for (const auto& s : fast) {
    CHECK(check_record(s));
    const bool family = (s.x == 0 && abs(s.d) == 1) || (abs(s.x) == 1 && abs(s.d) == 2);
    CHECK(family);
  }
}

TEST_CASE("search output does not depend on the thread count") {
  CHECK(search_solutions(40, 30, 7, 1) == search_solutions(40, 30, 7, 4));
}

TEST_CASE("witness for the n = 5 solutions") {
  const auto w = derive_witness({Int(1), Int(2), Int(3), 5});
  CHECK(w.kappa == 1);
  CHECK(w.a == 1);
  CHECK(w.T == 5);
  // 3 + 80 + 160 = 243 = b^5.
  CHECK(w.b == 3);
  CHECK(Int(3) * w.a * w.b % 3 == 0);
  CHECK_THROWS_AS((void)derive_witness({Int(0), Int(1), Int(0), 7}), PreconditionError);
  CHECK_THROWS_AS((void)derive_witness({Int(1), Int(2), Int(3), 4}), PreconditionError);
}

TEST_CASE("identity fuzzing") {
  const auto f = identity_fuzz(2000, 17);
  CHECK(f.trials == 2000);
  CHECK(f.failures == 0);
}

TEST_CASE("3 divides y") {
  const auto r = three_divides_ab_check(20);
  CHECK(r.d_coprime_to_3);
  CHECK(r.x_or_b_divisible);
  CHECK(r.x_divisible_iff_a);
  CHECK(r.search_records_ok);
  CHECK(r.records_checked > 0);
}

TEST_CASE("sums of j consecutive fifth powers") {
  for (unsigned j : {3U, 15U, 21U, 33U, 39U}) {
    const auto r = sj_three_divides(j);
    CHECK(r.ok());
  }
  const auto off = sj_three_divides(5);
  CHECK_FALSE(off.applicable);
}
