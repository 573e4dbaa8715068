#include "ap5/errors.hpp"
#include "ap5/int_poly.hpp"
#include "ap5/integer.hpp"
#include "ap5/number_field.hpp"
#include "ap5/prime_field.hpp"
#include "ap5/quotient_ring.hpp"

#include <doctest.h>

#include "../support/oracles.hpp"

#include <random>

using namespace ap5;

namespace {

IntPoly random_poly(std::mt19937_64& rng, int max_deg, long bound) {
  std::uniform_int_distribution<int> deg(1, max_deg);
  std::uniform_int_distribution<long> c(-bound, bound);
  std::vector<Int> v(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : v) x = c(rng);
  if (v.back() == 0) v.back() = 1;
  return IntPoly(v);
}

}  // namespace

TEST_CASE("primality agrees with trial division") {
  for (std::uint64_t n = 0; n < 5000; ++n) {
    bool trial = n >= 2;
    for (std::uint64_t d = 2; d * d <= n && trial; ++d) trial = n % d != 0;
    CHECK(is_prime_u64(n) == trial);
  }
  CHECK(is_prime_u64(18446744073709551557ULL));
  CHECK_FALSE(is_prime_u64(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
  CHECK(primes_between(11, 30) == std::vector<std::uint64_t>{11, 13, 17, 19, 23, 29});
}

TEST_CASE("exact roots and prime divisors") {
  CHECK(*exact_root(Int(243), 5) == 3);
  CHECK(*exact_root(Int(-243), 5) == -3);
  CHECK_FALSE(exact_root(Int(-16), 4).has_value());
  CHECK(*exact_root(Int(16), 4) == 2);
  CHECK_FALSE(exact_root(Int(17), 2).has_value());
  CHECK(prime_divisors(Int(44800)) == std::vector<Int>{2, 5, 7});
  const Int big = Int("1000000007") * Int("998244353") * 49;
  CHECK(prime_divisors(big) == std::vector<Int>{7, Int("998244353"), Int("1000000007")});
  CHECK_THROWS_AS((void)to_i64(Int("100000000000000000000")), Error);
}

TEST_CASE("prime field arithmetic and square roots against brute force") {
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 13ULL, 17ULL, 41ULL, 89ULL, 97ULL, 113ULL}) {
    const PrimeField F(p);
    for (Residue x = 0; x < p; ++x) {
      const auto expected = oracle::square_roots(x, p);
      const auto got = mod_sqrt(x, F);
      if (expected.empty()) {
        CHECK_FALSE(got.has_value());
        CHECK(F.legendre(x) == -1);
      } else {
        REQUIRE(got.has_value());
        CHECK(*got == expected);
      }
      if (x != 0) CHECK(F.mul(x, F.inv(x)) == 1);
    }
    const Residue g = F.primitive_root();
    std::set<Residue> seen;
    for (std::uint64_t k = 0; k + 1 < p; ++k) seen.insert(F.pow(g, k));
    CHECK(seen.size() == p - 1);
  }
  CHECK_THROWS_AS(PrimeField(91), PreconditionError);
  CHECK_THROWS_AS((void)PrimeField(7).inv(0), PreconditionError);
}

TEST_CASE("nth power residues match exhaustive powering") {
  for (auto [n, p] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
           {7, 29}, {7, 43}, {11, 23}, {11, 89}, {13, 53}, {13, 79}, {13, 157}, {5, 11}}) {
    const auto got = nth_power_residues(n, PrimeField(p));
    const auto want = oracle::nth_powers(n, p);
    CHECK(std::set<Residue>(got.begin(), got.end()) == want);
    CHECK(std::is_sorted(got.begin(), got.end()));
  }
  CHECK_THROWS_AS((void)nth_power_residues(11, PrimeField(29)), PreconditionError);
}

TEST_CASE("resultant agrees with the Sylvester determinant") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const IntPoly f = random_poly(rng, 6, 20);
    const IntPoly g = random_poly(rng, 6, 20);
    CHECK(resultant(f, g) == oracle::sylvester_resultant(f, g));
  }
  CHECK(resultant(IntPoly{-2, 0, 1}, IntPoly{-3, 0, 1}) == 1);
  CHECK(discriminant(IntPoly{14, 0, 0, 1}) == -27 * 14 * 14);
  CHECK_THROWS_AS((void)resultant(IntPoly(), IntPoly{1, 1}), PreconditionError);
}

TEST_CASE("norm is multiplicative and matches the charpoly constant term") {
  const IntPoly m{-3, 1, 0, 1};  // x^3 + x - 3
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> c(-9, 9);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rat> u(3), v(3);
    for (auto& x : u) x = Rat(c(rng), 1 + trial % 3);
    for (auto& x : v) x = c(rng);
    const NumberFieldElem a(m, u), b(m, v);
    CHECK(nf_norm(a * b) == nf_norm(a) * nf_norm(b));
    const auto cp = nf_charpoly(a);
    REQUIRE(cp.size() == 4);
    CHECK(cp.back() == 1);
    CHECK(cp[0] == -nf_norm(a));  // degree 3: constant term is -Norm
  }
  const auto x = NumberFieldElem::generator(m);
  CHECK(nf_norm(x) == 3);
  CHECK(nf_charpoly(x) == std::vector<Rat>{-3, 1, 0, 1});
  CHECK(nf_norm(NumberFieldElem::from_int(m, Int(5))) == 125);
}

TEST_CASE("Berkowitz characteristic polynomial") {
  const std::vector<std::vector<Int>> M{{2, 1, 0}, {0, 3, 4}, {1, 0, -1}};
  // det(xI - M) by cofactor expansion: x^3 - 4x^2 + x + 2.
  CHECK(int_charpoly(M) == IntPoly{2, 1, -4, 1});
}

TEST_CASE("quotient ring products, norms and square classes") {
  const IntPoly f{14, 0, 0, 1};
  const auto th = QuotientRingElem::theta(f);
  CHECK(qring_pow(th, 3) == QuotientRingElem::from_int(f, Int(-14)));
  const QuotientRingElem g(f, {5, -1, 1});
  CHECK(qring_norm(g) == oracle::sylvester_resultant(f, g.as_poly()));
  const auto sq = qring_mul(g, g);
  CHECK(square_class_test(sq, 40) == SquareVerdict::ProbablySquare);
  CHECK(square_class_test(th, 40) == SquareVerdict::NonSquare);
  // eval_mod is a ring homomorphism at a root of f mod q.
  const std::uint64_t q = 13;
  std::uint64_t r = 0;
  while ((r * r * r + 14) % q != 0) ++r;
  CHECK(sq.eval_mod(r, q) == g.eval_mod(r, q) * g.eval_mod(r, q) % q);
}
