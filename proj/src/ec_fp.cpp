#include "ap5/ec_fp.hpp"

#include "ap5/errors.hpp"

#include <string>
#include <vector>

namespace ap5 {

EllipticCurveFp EllipticCurveFp::from_ints(const PrimeField& F, std::int64_t a1, std::int64_t a2, std::int64_t a3,
                                           std::int64_t a4, std::int64_t a6) {
  return {F, F.reduce(a1), F.reduce(a2), F.reduce(a3), F.reduce(a4), F.reduce(a6)};
}

Residue discriminant(const EllipticCurveFp& E) {
  const PrimeField& F = E.F;
  if (F.p() <= 3) throw PreconditionError("discriminant: needs p > 3");
  auto m = [&F](Residue x, Residue y) { return F.mul(x, y); };
  auto k = [&F](std::int64_t c) { return F.reduce(c); };
  const Residue b2 = F.add(m(E.a1, E.a1), m(k(4), E.a2));
  const Residue b4 = F.add(m(k(2), E.a4), m(E.a1, E.a3));
  const Residue b6 = F.add(m(E.a3, E.a3), m(k(4), E.a6));
  const Residue b8 = F.sub(F.add(F.sub(F.add(m(m(E.a1, E.a1), E.a6), m(m(k(4), E.a2), E.a6)), m(m(E.a1, E.a3), E.a4)),
                                 m(m(E.a2, E.a3), E.a3)),
                           m(E.a4, E.a4));
  // -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6
  Residue d = F.neg(m(m(b2, b2), b8));
  d = F.sub(d, m(k(8), m(b4, m(b4, b4))));
  d = F.sub(d, m(k(27), m(b6, b6)));
  d = F.add(d, m(k(9), m(b2, m(b4, b6))));
  return d;
}

long ap_trace(const EllipticCurveFp& E) {
  const PrimeField& F = E.F;
  const std::uint64_t p = F.p();
  if (discriminant(E) == 0) {
    throw BadReductionError("ap_trace: singular curve over F_" + std::to_string(p));
  }
  // (y + (a1 x + a3)/2)^2 = x^3 + c2 x^2 + c4 x + c6
  const Residue i4 = F.inv(4);
  const Residue c2 = F.add(E.a2, F.mul(F.mul(E.a1, E.a1), i4));
  const Residue c4 = F.add(E.a4, F.mul(F.mul(E.a1, E.a3), F.inv(2)));
  const Residue c6 = F.add(E.a6, F.mul(F.mul(E.a3, E.a3), i4));

  std::vector<signed char> chi(p, -1);
  chi[0] = 0;
  for (std::uint64_t r = 1; r <= p / 2; ++r) chi[F.mul(r, r)] = 1;

  long sum = 0;
  for (Residue x = 0; x < p; ++x) {
    const Residue v = F.add(F.mul(F.add(F.mul(F.add(x, c2), x), c4), x), c6);
    sum += chi[v];
  }
  const long ap = -sum;
  if (static_cast<double>(ap) * static_cast<double>(ap) > 4.0 * static_cast<double>(p)) {
    throw Error("ap_trace: Hasse bound violated over F_" + std::to_string(p));
  }
  return ap;
}

}  // namespace ap5
