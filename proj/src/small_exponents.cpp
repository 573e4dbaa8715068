#include "ap5/small_exponents.hpp"

#include "ap5/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ap5 {

namespace {

std::vector<Int> int_vector(const json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected an array");
  std::vector<Int> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(json_to_int(j[k], where + "[" + std::to_string(k) + "]"));
  return out;
}

CubicSystem cubic_system(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3) throw SchemaError(where + ": expected three quadratic forms");
  CubicSystem out;
  for (std::size_t c = 0; c < 3; ++c) {
    const auto v = int_vector(j[c], where);
    if (v.size() != 6) throw SchemaError(where + ": quadratic form needs six coefficients");
    std::copy(v.begin(), v.end(), out[c].begin());
  }
  return out;
}

}  // namespace

SmallCaseFixtures load_small_fixtures(const std::string& path) {
  const json doc = parse_json_exact(read_text_file(path));
  SmallCaseFixtures fx;
  try {
    const json& cubic = doc.at("cubic_field");
    fx.cubic_modulus = IntPoly(int_vector(cubic.at("modulus"), "cubic_field.modulus"));
    fx.unit_r = int_vector(cubic.at("unit_r"), "cubic_field.unit_r");
    fx.p5_cube_generator = int_vector(cubic.at("p5_cube_generator"), "cubic_field.p5_cube_generator");
    fx.kappa2_systems[0] = cubic_system(doc.at("kappa2_systems").at("0"), "kappa2_systems.0");
    fx.kappa2_systems[1] = cubic_system(doc.at("kappa2_systems").at("1"), "kappa2_systems.1");
    const json& quintic = doc.at("quintic_field");
    fx.quintic_modulus = IntPoly(int_vector(quintic.at("modulus"), "quintic_field.modulus"));
    const json& gens = quintic.at("selmer_generators");
    fx.selmer_generators = {int_vector(gens.at("a1"), "a1"), int_vector(gens.at("a2"), "a2"),
                            int_vector(gens.at("a3"), "a3")};
    for (const auto& d : quintic.at("deltas")) fx.deltas.push_back(int_vector(d, "quintic_field.deltas"));
    for (const auto& r : quintic.at("jacobian_ranks")) fx.jacobian_ranks.push_back(r.get<int>());
    for (const auto& p : quintic.at("rational_points")) {
      const auto v = int_vector(p, "quintic_field.rational_points");
      if (v.size() != 2) throw SchemaError("quintic_field.rational_points: expected [X, Y]");
      fx.rational_points.emplace_back(v[0], v[1]);
    }
    fx.reference = doc.value("reference", json::object());
  } catch (const json::exception& e) {
    throw SchemaError(path + ": " + e.what());
  }
  if (!fx.cubic_modulus.is_monic() || !fx.quintic_modulus.is_monic()) {
    throw SchemaError(path + ": field moduli must be monic");
  }
  for (const auto& d : fx.deltas) {
    if (d.size() != 5) throw SchemaError(path + ": delta entries need five coordinates");
  }
  return fx;
}

// ---------------------------------------------------------------- n = 2

bool N2Obstructions::obstructed(int kappa, unsigned modulus) const {
  for (const auto& c : checks) {
    if (c.kappa == kappa && c.modulus == modulus) return c.obstructed;
  }
  throw PreconditionError("N2Obstructions: no check recorded for this kappa and modulus");
}

bool N2Obstructions::ok() const {
  return obstructed(1, 5) && obstructed(2, 16) && obstructed(5, 16) && !obstructed(10, 5) &&
         !obstructed(10, 16) && sixteen_congruence;
}

N2Obstructions n2_local_obstructions() {
  N2Obstructions out;
  for (unsigned m : {5U, 16U}) {
    const long q = m == 5 ? 5 : 2;  // the prime under the modulus
    for (int kappa : {1, 2, 5, 10}) {
      bool solvable = false;
      for (long a = 0; a < static_cast<long>(m) && !solvable; ++a) {
        const long x = kappa * a * a % m;
        if (kappa % q != 0 && a % q == 0) continue;  // kappa = gcd(x, 10) at q
        for (long d = 0; d < static_cast<long>(m) && !solvable; ++d) {
          if (x % q == 0 && d % q == 0) continue;  // gcd(x, d) = 1
          const long lhs = (3 * x * x % m * x % m * x + 20 * x * x % m * d % m * d + 10 * d * d % m * d % m * d) % m;
          for (long b = 0; b < static_cast<long>(m); ++b) {
            if ((kappa * a) % q == 0 && b % q == 0) continue;  // gcd(kappa a, b) = 1
            if (lhs == kappa * b * b % m) {
              solvable = true;
              break;
            }
          }
        }
      }
      out.checks.push_back({kappa, m, !solvable});
    }
  }
  out.sixteen_congruence = true;
  for (long x = 0; x < 16; x += 2) {
    for (long d = 1; d < 16; d += 2) {
      const long lhs = (3 * x * x * x * x + 20 * x * x * d * d + 10 * d * d * d * d) % 16;
      if (lhs != 10) out.sixteen_congruence = false;
    }
  }
  return out;
}

namespace {

enum : std::size_t { kA = 0, kD = 1, kB = 2 };

MPoly v3(std::size_t i) { return MPoly::var(3, i); }

MPoly fix_rhs() {
  const MPoly a = v3(kA), d = v3(kD);
  return d.pow(4) + Int(200) * d.pow(2) * a.pow(4) + Int(3000) * a.pow(8);
}

}  // namespace

MPoly n2_curve_map_residual() {
  const MPoly a = v3(kA), d = v3(kD), b = v3(kB);
  const MPoly B = b + d.pow(2) + Int(100) * a.pow(4);
  // a^12 y^2 = 16 d^2 B^2, a^12 x^3 = 8 B^3, a^12 x^2 = 4 a^4 B^2, a^12 x = 2 a^8 B.
  const MPoly lhs = Int(16) * d.pow(2) * B.pow(2);
  const MPoly rhs = Int(8) * B.pow(3) - Int(400 * 4) * a.pow(4) * B.pow(2) + Int(28000 * 2) * a.pow(8) * B;
  return (lhs - rhs).reduce_power(kB, 2, fix_rhs());
}

bool n2_curve_map_identity() { return n2_curve_map_residual().is_zero(); }

MPoly n2_branch_residual() {
  const MPoly a = v3(kA), d = v3(kD);
  const MPoly b = -(d.pow(2) + Int(100) * a.pow(4));
  return b.pow(2) - fix_rhs();
}

bool n2_branch_forces_a_zero() {
  const MPoly r = n2_branch_residual();
  if (r.terms().size() != 1) return false;
  const auto& [e, c] = *r.terms().begin();
  return c != 0 && e[kA] > 0 && e[kD] == 0 && e[kB] == 0;
}

// ---------------------------------------------------------------- n = 3

EllieCheck n3_ellie_map_identity(int kappa) {
  if (kappa != 1 && kappa != 2 && kappa != 5 && kappa != 10) {
    throw PreconditionError("n3_ellie_map_identity: kappa must be 1, 2, 5 or 10");
  }
  const Int k(kappa);
  const Int q(10 / kappa);
  const MPoly a = v3(kA), d = v3(kD), b = v3(kB);
  const MPoly W = d.pow(2) + ipow(k, 4) * a.pow(6);
  const MPoly picard = q * d.pow(4) + Int(20) * ipow(k, 3) * d.pow(2) * a.pow(6) + Int(3) * ipow(k, 7) * a.pow(12);
  const MPoly square_form = q * W.pow(2) - Int(7) * ipow(k, 7) * a.pow(12);
  EllieCheck out;
  out.picard_to_square = picard == square_form;
  out.curve_constant = 7 * k * q * q * q;
  // kappa^10 a^12 (Y^2 - X^3 - c) with Y = 100 W/(kappa^5 a^6), X = 10b/(kappa^3 a^4).
  const MPoly cleared = Int(10000) * W.pow(2) - Int(1000) * k * b.pow(3) -
                        out.curve_constant * ipow(k, 10) * a.pow(12);
  out.holds = cleared.reduce_power(kB, 3, square_form).is_zero();
  return out;
}

CubicSystem n3_kappa2_systems(unsigned i, const SmallCaseFixtures& fx) {
  if (i > 1) throw PreconditionError("n3_kappa2_systems: i must be 0 or 1");
  const IntPoly& f = fx.cubic_modulus;
  const QuotientRingElem r(f, fx.unit_r);
  const QuotientRingElem g5(f, fx.p5_cube_generator);
  const QuotientRingElem c = qring_mul(qring_pow(r, i), g5);
  const QuotientRingElem th = QuotientRingElem::theta(f);
  // (s + t th + u th^2)^2 = s^2 + 2st th + t^2 th^2 + 2su th^2 + 2tu th^3 + u^2 th^4
  const std::array<std::pair<unsigned, long>, 6> mono = {
      {{0, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 2}, {4, 1}}};
  CubicSystem out;
  for (std::size_t m = 0; m < mono.size(); ++m) {
    const QuotientRingElem term = qring_mul(c, qring_pow(th, mono[m].first));
    for (std::size_t k = 0; k < 3; ++k) out[k][m] = term.coords()[k] * mono[m].second;
  }
  return out;
}

bool DescentNorms::ok() const {
  return abs(unit_norm) == 1 && abs(generator_norm) == 125;
}

DescentNorms n3_descent_norms(const SmallCaseFixtures& fx) {
  return {qring_norm(QuotientRingElem(fx.cubic_modulus, fx.unit_r)),
          qring_norm(QuotientRingElem(fx.cubic_modulus, fx.p5_cube_generator))};
}

bool ParityCheck::ok() const { return contradiction[0] && contradiction[1] && relaxed[0] && relaxed[1]; }

ParityCheck n3_parity_eliminate(const std::array<CubicSystem, 2>& systems) {
  ParityCheck out;
  auto form2 = [](const QuadForm& q, int s, int t, int u) {
    const int mono[6] = {s * s, s * t, t * t, s * u, t * u, u * u};
    int v = 0;
    for (int k = 0; k < 6; ++k) {
      Int c = q[static_cast<std::size_t>(k)] % 2;
      v += (c != 0 ? 1 : 0) * mono[k];
    }
    return v & 1;
  };
  for (std::size_t i = 0; i < 2; ++i) {
    bool strict = false;
    bool relaxed = false;
    for (int bits = 0; bits < 32; ++bits) {
      const int s = bits & 1, t = (bits >> 1) & 1, u = (bits >> 2) & 1, X = (bits >> 3) & 1, Y = (bits >> 4) & 1;
      // Mod 2: X^3 + 14Y^3 = X, -3X^2Y = XY, 3XY^2 = XY.
      const bool sat = form2(systems[i][0], s, t, u) == X && form2(systems[i][1], s, t, u) == (X & Y) &&
                       form2(systems[i][2], s, t, u) == (X & Y);
      if (!sat) continue;
      if (Y == 0 && X == 1) strict = true;
      if (Y == 1) relaxed = true;
    }
    out.contradiction[i] = !strict;
    out.relaxed[i] = relaxed;
  }
  return out;
}

bool on_picard_curve(const QuotientRingElem& X1, const QuotientRingElem& Y1) {
  const IntPoly& f = X1.modpoly();
  const QuotientRingElem y2 = qring_mul(Y1, Y1);
  const QuotientRingElem rhs =
      qring_mul(y2, y2) + y2 * Int(200 * 25) + QuotientRingElem::from_int(f, Int(3000) * 625);
  return qring_pow(X1, 3) == rhs;
}

bool n3_picard_point_check() {
  const IntPoly f({1500, 0, 1});  // w^2 + 1500
  const QuotientRingElem X1 = QuotientRingElem::from_int(f, -150);
  const QuotientRingElem w = QuotientRingElem::theta(f);
  return on_picard_curve(X1, w) && !on_picard_curve(X1, w + QuotientRingElem::from_int(f, 1));
}

// ---------------------------------------------------------------- n = 5

namespace {

// Polynomials in X with coefficients in Z[theta]/(theta^5 + 7), ascending.
using QPoly = std::vector<QuotientRingElem>;

QPoly qpoly_mul(const QPoly& a, const QPoly& b, const IntPoly& f) {
  QPoly out(a.size() + b.size() - 1, QuotientRingElem::from_int(f, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += qring_mul(a[i], b[j]);
  }
  return out;
}

IntPoly quintic() { return IntPoly({7, 0, 0, 0, 0, 1}); }

}  // namespace

bool n5_factor_check() {
  const IntPoly f = quintic();
  const QuotientRingElem alpha = QuotientRingElem::theta(f) * Int(10);
  const QuotientRingElem one = QuotientRingElem::from_int(f, 1);
  const QPoly linear = {alpha * Int(-1), one};
  QPoly quartic;
  for (unsigned k = 0; k <= 4; ++k) quartic.push_back(qring_pow(alpha, 4 - k));
  const QPoly prod = qpoly_mul(linear, quartic, f);
  QPoly want(6, QuotientRingElem::from_int(f, 0));
  want[0] = QuotientRingElem::from_int(f, 700000);
  want[5] = one;
  return prod == want;
}

Int n5_norm_at_30() {
  const IntPoly f = quintic();
  return qring_norm(QuotientRingElem(f, {Int(30), Int(-10)}));
}

DeltaReport n5_delta_table_check(const SmallCaseFixtures& fx, unsigned prime_budget) {
  const IntPoly& f = fx.quintic_modulus;
  auto elem = [&f](const std::vector<Int>& v) { return QuotientRingElem(f, v); };
  const std::array<QuotientRingElem, 3> gens = {elem(fx.selmer_generators[0]), elem(fx.selmer_generators[1]),
                                                elem(fx.selmer_generators[2])};
  const char* names[3] = {"a1", "a2", "a3"};
  DeltaReport out;
  std::set<std::string> classes;
  for (std::size_t j = 0; j < fx.deltas.size(); ++j) {
    DeltaRow row;
    row.j = j + 1;
    const QuotientRingElem d = elem(fx.deltas[j]);
    if (d == QuotientRingElem::from_int(f, 1)) row.literal_match = "1";
    for (std::size_t g = 0; g < 3; ++g) {
      if (d == gens[g]) row.literal_match = names[g];
    }
    for (unsigned mask = 0; mask < 8 && row.square_class.empty(); ++mask) {
      QuotientRingElem prod = d;
      std::string label;
      for (unsigned g = 0; g < 3; ++g) {
        if ((mask >> g) & 1U) {
          prod = qring_mul(prod, gens[g]);
          label += names[g];
        }
      }
      if (square_class_test(prod, prime_budget) == SquareVerdict::ProbablySquare) {
        row.square_class = label.empty() ? "1" : label;
      }
    }
    row.consistent = !row.square_class.empty();
    if (row.consistent) classes.insert(row.square_class);
    out.rows.push_back(row);
  }
  auto lit = [&out](std::size_t j, const char* want) {
    return out.rows.size() >= j && out.rows[j - 1].literal_match == want;
  };
  out.literal_ok = lit(1, "1") && lit(5, "a1") && lit(3, "a2") && lit(2, "a3");
  out.distinct = classes.size() == fx.deltas.size();
  return out;
}

KnownPoints n5_known_points_check(const SmallCaseFixtures& fx, long bound) {
  KnownPoints out;
  const Int c = 700000;
  out.listed_ok = !fx.rational_points.empty();
  for (const auto& [X, Y] : fx.rational_points) {
    if (Y * Y != ipow(X, 5) + c) out.listed_ok = false;
  }
  for (long x = -bound; x <= bound; ++x) {
    const Int v = ipow(Int(x), 5) + c;
    if (v < 0) continue;
    if (auto y = exact_root(v, 2)) out.integral_points.emplace_back(Int(x), *y);
  }
  return out;
}

long back_substitute_bound(const Rat& X) {
  // X = 10b/(kappa^3 a^4) with gcd(a, b) = 1 forces a^4 | 10 den(X).
  const Int limit = 10 * abs(X.get_den());
  long a = 1;
  while (a < 100 && ipow(Int(a + 1), 4) <= limit) ++a;
  return a;
}

std::vector<SolutionRecord> back_substitute(const std::optional<Rat>& X) {
  std::vector<SolutionRecord> out;
  if (!X) return out;
  const long amax = back_substitute_bound(*X);
  for (int kappa : {1, 2, 5, 10}) {
    const Int k(kappa);
    for (long av = -amax; av <= amax; ++av) {
      if (av == 0) continue;
      const Int a(av);
      Rat bq = *X * Rat(ipow(k, 3) * ipow(a, 4), 10);
      bq.canonicalize();
      if (bq.get_den() != 1) continue;
      const Int b = bq.get_num();
      Int g;
      const Int ka = k * a;
      mpz_gcd(g.get_mpz_t(), ka.get_mpz_t(), b.get_mpz_t());
      if (g != 1) continue;
      const Int x = ipow(k, 4) * ipow(a, 5);
      mpz_gcd_ui(g.get_mpz_t(), x.get_mpz_t(), 10);
      if (g != k) continue;
      // 10 D^2 + 20 x^2 D + 3x^4 - kappa b^5 = 0 with D = d^2.
      const Int disc = 280 * ipow(x, 4) + 40 * k * ipow(b, 5);
      if (disc < 0) continue;
      const auto root = exact_root(disc, 2);
      if (!root) continue;
      const Int num = -20 * x * x + *root;
      if (num < 0 || num % 20 != 0) continue;
      const auto d = exact_root(num / 20, 2);
      if (!d) continue;
      mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), d->get_mpz_t());
      if (g != 1) continue;
      // Representative with x, d >= 0 under d -> -d and (x, y) -> (-x, -y).
      SolutionRecord s{abs(x), *d, x < 0 ? Int(-k * a * b) : Int(k * a * b), 5};
      if (check_record(s) && std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    }
  }
  return out;
}

}  // namespace ap5
