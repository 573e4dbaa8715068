#include "ap5/frey.hpp"

#include "ap5/errors.hpp"

#include <string>

namespace ap5 {

bool is_valid_kappa(int kappa) noexcept { return kappa == 1 || kappa == 2 || kappa == 5 || kappa == 10; }

std::uint64_t frey_level(int kappa) {
  switch (kappa) {
    case 1: return 44800;  // 2^8 5^2 7
    case 2: return 350;    // 2 5^2 7
    case 5: return 8960;   // 2^8 5 7
    case 10: return 70;    // 2 5 7
    default: throw PreconditionError("frey_level: kappa must be 1, 2, 5 or 10, got " + std::to_string(kappa));
  }
}

namespace {

void check_kappa(int kappa) {
  if (!is_valid_kappa(kappa)) {
    throw PreconditionError("kappa must be 1, 2, 5 or 10, got " + std::to_string(kappa));
  }
}

// n >= 3 keeps every exponent below non-negative.
void check_exponent(std::uint64_t n) {
  if (n < 3) throw PreconditionError("Frey models need n >= 3");
}

}  // namespace

Residue frey_relation_rhs(int kappa, std::uint64_t n, const PrimeField& F, Residue a, Residue b) {
  check_kappa(kappa);
  check_exponent(n);
  const Residue a4 = F.pow(a, 4);
  const Residue k = F.pow(F.reduce(std::int64_t{kappa}), 4 * n - 5);
  return F.add(F.mul(F.mul(F.reduce(std::int64_t{7}), k), a4), b);
}

EllipticCurveFp instantiate(int kappa, Residue a, Residue b, Residue T, std::uint64_t n, const PrimeField& F) {
  check_kappa(kappa);
  check_exponent(n);
  if (70 % F.p() == 0) {
    throw PreconditionError("instantiate: p = " + std::to_string(F.p()) + " divides 70");
  }
  const Residue a4 = F.pow(a, 4);
  EllipticCurveFp E{F};
  switch (kappa) {
    case 1:
      E.a2 = F.mul(F.reduce(std::int64_t{20}), T);
      E.a4 = F.mul(F.reduce(std::int64_t{10}), b);
      break;
    case 2:
      E.a1 = 1;
      E.a2 = F.div(F.sub(F.mul(F.reduce(std::int64_t{5}), T), 1), 4);
      E.a4 = F.mul(F.mul(F.reduce(std::int64_t{35}), F.pow(2, 4 * n - 11)), a4);
      break;
    case 5:
      E.a2 = F.mul(F.reduce(std::int64_t{4}), T);
      E.a4 = F.mul(F.reduce(std::int64_t{2}), b);
      break;
    default:
      E.a1 = 1;
      E.a2 = F.div(F.sub(T, 1), 4);
      E.a4 = F.mul(F.mul(F.reduce(std::int64_t{7}), F.pow(F.reduce(std::int64_t{10}), 4 * n - 11)), a4);
      break;
  }
  return E;
}

std::vector<Residue> solve_T(int kappa, std::uint64_t n, const PrimeField& F, Residue a, Residue b) {
  check_kappa(kappa);
  if (10 % F.p() == 0) throw PreconditionError("solve_T: p = " + std::to_string(F.p()) + " divides 10");
  const Residue rhs = frey_relation_rhs(kappa, n, F, a, b);
  const Residue t2 = F.div(F.mul(rhs, F.reduce(std::int64_t{kappa})), 10);
  auto roots = mod_sqrt(t2, F);
  if (!roots) return {};
  return *roots;
}

KrausTraceSet kraus_trace_set(int kappa, std::uint64_t n, std::uint64_t p) {
  check_kappa(kappa);
  if (n == 0 || p % n != 1) {
    throw PreconditionError("kraus_trace_set: need p = 1 mod n (p = " + std::to_string(p) +
                            ", n = " + std::to_string(n) + ")");
  }
  if ((70 * n) % p == 0) throw PreconditionError("kraus_trace_set: p divides 70n");
  const PrimeField F(p);
  const std::vector<Residue> mu = nth_power_residues(n, F);
  KrausTraceSet out;
  for (Residue a : mu) {
    for (Residue b : mu) {
      for (Residue T : solve_T(kappa, n, F, a, b)) {
        ++out.triples;
        const EllipticCurveFp E = instantiate(kappa, a, b, T, n, F);
        if (is_singular(E)) {
          out.singular.push_back({a, b, T});
          continue;
        }
        out.traces.insert(ap_trace(E));
      }
    }
  }
  return out;
}

}  // namespace ap5
