#include "ap5/errors.hpp"
#include "ap5/prime_field.hpp"
#include "ap5/small_exponents.hpp"

#include <doctest.h>

#include "../support/oracles.hpp"

#include <random>

using namespace ap5;

namespace {

const SmallCaseFixtures& fixtures() {
  static const SmallCaseFixtures fx = load_small_fixtures(std::string(AP5_DATA_DIR) + "/fixtures/small_exponents.json");
  return fx;
}

/// Coefficients of a polynomial in theta reduced modulo theta^3 + 14, by hand.
std::array<Int, 3> reduce_cubic(std::vector<Int> c) {
  for (std::size_t k = c.size(); k-- > 3;) {
    c[k - 3] -= 14 * c[k];
    c[k] = 0;
  }
  c.resize(3);
  return {c[0], c[1], c[2]};
}

std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> out(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Int eval_quad(const QuadForm& q, const Int& s, const Int& t, const Int& u) {
  return q[0] * s * s + q[1] * s * t + q[2] * t * t + q[3] * s * u + q[4] * t * u + q[5] * u * u;
}

}  // namespace

TEST_CASE("n = 2: curve map identity holds over F_q at random points") {
  CHECK(n2_curve_map_identity());
  std::mt19937_64 rng(2);
  for (std::uint64_t q : {101ULL, 103ULL, 107ULL, 109ULL}) {
    const PrimeField F(q);
    std::uniform_int_distribution<std::uint64_t> pick(1, q - 1);
    int tested = 0;
    for (int trial = 0; trial < 400 && tested < 60; ++trial) {
      const std::uint64_t a = pick(rng), d = pick(rng);
      const std::uint64_t a4 = F.pow(a, 4);
      const std::uint64_t rhs = F.add(F.add(F.pow(d, 4), F.mul(200 % q, F.mul(F.mul(d, d), a4))),
                                      F.mul(3000 % q, F.mul(a4, a4)));
      for (std::uint64_t b : oracle::square_roots(rhs, q)) {
        const std::uint64_t B = F.add(F.add(b, F.mul(d, d)), F.mul(100, a4));
        const std::uint64_t x = F.div(F.mul(2, B), a4);
        const std::uint64_t y = F.div(F.mul(F.mul(4, d), B), F.mul(a4, F.mul(a, a)));
        const std::uint64_t lhs = F.mul(y, y);
        const std::uint64_t x2 = F.mul(x, x);
        const std::uint64_t cubic = F.add(F.sub(F.mul(x2, x), F.mul(400, x2)), F.mul(28000 % q, x));
        CHECK(lhs == cubic);
        ++tested;
      }
    }
    CHECK(tested > 0);
  }
}

TEST_CASE("n = 2: branch residual and local obstructions") {
  CHECK(n2_branch_residual().to_string({"a", "d", "b"}) == "7000a^8");
  CHECK(n2_branch_forces_a_zero());
  const auto ob = n2_local_obstructions();
  CHECK(ob.obstructed(1, 5));
  CHECK(ob.obstructed(2, 16));
  CHECK(ob.obstructed(5, 16));
  CHECK_FALSE(ob.obstructed(10, 5));
  CHECK_FALSE(ob.obstructed(10, 16));
  CHECK(ob.sixteen_congruence);
  CHECK(ob.ok());
}

TEST_CASE("n = 2: no small integer solutions for obstructed kappa") {
  // 3x^4 + 20x^2d^2 + 10d^4 = kappa b^2 with x = kappa a^2, kappa = gcd(x, 10), gcd(x, d) = 1.
  for (int kappa : {1, 2, 5}) {
    for (long a = 1; a <= 30; ++a) {
      const Int x = Int(kappa) * a * a;
      if (oracle::gcd(x, Int(10)) != kappa) continue;
      for (long d = 1; d <= 60; ++d) {
        if (oracle::gcd(x, Int(d)) != 1) continue;
        const Int lhs = 3 * x * x * x * x + 20 * x * x * d * d + 10 * Int(d) * d * d * d;
        if (lhs % kappa != 0) continue;
        Int r;
        CHECK_FALSE(oracle::perfect_power(lhs / kappa, 2, r));
      }
    }
  }
}

TEST_CASE("n = 3: Picard and elliptic maps") {
  for (int kappa : {1, 2, 5, 10}) {
    const auto e = n3_ellie_map_identity(kappa);
    CHECK(e.holds);
    CHECK(e.picard_to_square);
    CHECK(e.curve_constant == 7 * kappa * (10 / kappa) * (10 / kappa) * (10 / kappa));
  }
  CHECK_THROWS_AS((void)n3_ellie_map_identity(3), PreconditionError);
  CHECK(n3_picard_point_check());
}

TEST_CASE("n = 3: kappa = 2 systems against hand multiplication") {
  const auto& fx = fixtures();
  const std::vector<Int> r = fx.unit_r;
  const std::vector<Int> g = fx.p5_cube_generator;
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> c(-9, 9);
  for (unsigned i = 0; i < 2; ++i) {
    const CubicSystem sys = n3_kappa2_systems(i, fx);
    CHECK(sys == fx.kappa2_systems[i]);
    for (int trial = 0; trial < 50; ++trial) {
      const Int s = c(rng), t = c(rng), u = c(rng);
      const std::vector<Int> v{s, t, u};
      std::vector<Int> prod = poly_mul(g, poly_mul(v, v));
      if (i == 1) prod = poly_mul(r, prod);
      const auto coords = reduce_cubic(prod);
      for (std::size_t k = 0; k < 3; ++k) CHECK(eval_quad(sys[k], s, t, u) == coords[k]);
    }
  }
}

TEST_CASE("n = 3: descent norms and parity") {
  const auto& fx = fixtures();
  const auto dn = n3_descent_norms(fx);
  CHECK(dn.unit_norm * dn.unit_norm == 1);
  CHECK(dn.generator_norm == 125);
  CHECK(dn.generator_norm == oracle::sylvester_resultant(IntPoly{14, 0, 0, 1}, IntPoly(fx.p5_cube_generator)));
  const auto pc = n3_parity_eliminate({fx.kappa2_systems[0], fx.kappa2_systems[1]});
  CHECK(pc.ok());
}

TEST_CASE("n = 5: factorization, norm and points") {
  CHECK(n5_factor_check());
  CHECK(n5_norm_at_30() == 25000000);
  CHECK(n5_norm_at_30() == oracle::sylvester_resultant(IntPoly{7, 0, 0, 0, 0, 1}, IntPoly{30, -10}));
  const auto kp = n5_known_points_check(fixtures(), 2000);
  CHECK(kp.listed_ok);
  // Independent scan of Y^2 = X^5 + 700000.
  std::vector<std::pair<Int, Int>> scan;
  for (long X = -2000; X <= 2000; ++X) {
    const Int v = Int(X) * X * X * X * X + 700000;
    Int y;
    if (v >= 0 && oracle::perfect_power(v, 2, y)) scan.emplace_back(Int(X), y);
  }
  CHECK(kp.integral_points == scan);
}

TEST_CASE("n = 5: back substitution") {
  const auto at30 = back_substitute(Rat(30));
  REQUIRE(at30.size() == 1);
  CHECK(at30[0] == SolutionRecord{Int(1), Int(2), Int(3), 5});
  CHECK(oracle::equation_lhs(at30[0].x, at30[0].d) == 243);
  CHECK(back_substitute(Rat(-6)).empty());
  CHECK(back_substitute(std::nullopt).empty());
  CHECK(back_substitute_bound(Rat(30)) == 1);
  CHECK(back_substitute_bound(Rat(1, 1000)) == 10);
}

TEST_CASE("n = 5: delta table") {
  const auto rep = n5_delta_table_check(fixtures());
  CHECK(rep.literal_ok);
  CHECK(rep.distinct);
  REQUIRE(rep.rows.size() == 8);
  CHECK(rep.rows[0].square_class == "1");
}
