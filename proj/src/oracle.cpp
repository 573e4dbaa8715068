#include "ap5/oracle.hpp"

#include "ap5/errors.hpp"
#include "ap5/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <thread>

namespace ap5 {

Int main_form(const Int& x, const Int& d) {
  return ipow(x - d, 5) + ipow(x, 5) + ipow(x + d, 5);
}

bool check_record(const SolutionRecord& s) {
  if (s.n < 2) return false;
  Int g;
  mpz_gcd(g.get_mpz_t(), s.x.get_mpz_t(), s.d.get_mpz_t());
  if (g != 1) return false;
  return main_form(s.x, s.d) == ipow(s.y, s.n);
}

namespace {

void search_strip(std::int64_t x_lo, std::int64_t x_hi, std::int64_t box_d, unsigned nmax,
                  std::vector<SolutionRecord>& out) {
  for (std::int64_t x = x_lo; x <= x_hi; ++x) {
    for (std::int64_t d = -box_d; d <= box_d; ++d) {
      if (std::gcd(x, d) != 1) continue;
      const Int X(static_cast<long>(x));
      const Int D(static_cast<long>(d));
      // (x-d)^5 + x^5 + (x+d)^5 = x(3x^4 + 20x^2d^2 + 10d^4)
      const Int v = X * (3 * ipow(X, 4) + 20 * X * X * D * D + 10 * ipow(D, 4));
      for (unsigned n = 2; n <= nmax; ++n) {
        if (auto y = exact_root(v, n)) out.push_back({X, D, *y, n});
      }
    }
  }
}

}  // namespace

std::vector<SolutionRecord> search_solutions(std::int64_t box_x, std::int64_t box_d, unsigned nmax,
                                             unsigned threads) {
  if (box_x < 1 || box_d < 1 || nmax < 2) throw PreconditionError("search_solutions: need bounds >= 1, nmax >= 2");
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  const std::int64_t width = 2 * box_x + 1;
  const auto strips = static_cast<std::int64_t>(std::min<std::int64_t>(threads, width));
  std::vector<std::vector<SolutionRecord>> parts(static_cast<std::size_t>(strips));
  std::vector<std::thread> pool;
  for (std::int64_t s = 0; s < strips; ++s) {
    const std::int64_t lo = -box_x + s * width / strips;
    const std::int64_t hi = -box_x + (s + 1) * width / strips - 1;
    pool.emplace_back(search_strip, lo, hi, box_d, nmax, std::ref(parts[static_cast<std::size_t>(s)]));
  }
  for (auto& t : pool) t.join();
  std::vector<SolutionRecord> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

FactorWitness derive_witness(const SolutionRecord& s) {
  if (s.x == 0 || s.y == 0) throw PreconditionError("derive_witness: xy = 0 is the degenerate branch");
  if (!is_prime(Int(s.n))) throw PreconditionError("derive_witness: n must be prime");
  if (!check_record(s)) throw PreconditionError("derive_witness: record does not satisfy the equation");
  FactorWitness w;
  Int g;
  mpz_gcd_ui(g.get_mpz_t(), s.x.get_mpz_t(), 10);
  w.kappa = static_cast<int>(g.get_si());
  const Int k(w.kappa);
  const Int kn1 = ipow(k, s.n - 1);
  auto fail = [](const char* what) { return Error(std::string("derive_witness: ") + what); };
  if (s.x % kn1 != 0) throw fail("kappa^(n-1) does not divide x");
  auto a = exact_root(s.x / kn1, s.n);
  if (!a) throw fail("x / kappa^(n-1) is not an n-th power");
  w.a = *a;
  const Int rhs = 3 * ipow(s.x, 4) + 20 * s.x * s.x * s.d * s.d + 10 * ipow(s.d, 4);
  if (rhs % k != 0) throw fail("kappa does not divide 3x^4 + 20x^2d^2 + 10d^4");
  auto b = exact_root(rhs / k, s.n);
  if (!b) throw fail("(3x^4 + 20x^2d^2 + 10d^4) / kappa is not an n-th power");
  w.b = *b;
  w.T = s.d * s.d + s.x * s.x;

  if (kn1 * ipow(w.a, s.n) != s.x) throw fail("x = kappa^(n-1) a^n fails");
  if (k * ipow(w.b, s.n) != rhs) throw fail("3x^4 + 20x^2d^2 + 10d^4 = kappa b^n fails");
  if (7 * ipow(k, 4 * s.n - 5) * ipow(w.a, 4 * s.n) + ipow(w.b, s.n) != (10 / w.kappa) * w.T * w.T) {
    throw fail("7 kappa^(4n-5) a^(4n) + b^n = (10/kappa) T^2 fails");
  }
  Int ka = k * w.a;
  mpz_gcd(g.get_mpz_t(), ka.get_mpz_t(), w.b.get_mpz_t());
  if (g != 1) throw fail("kappa a and b are not coprime");
  return w;
}

namespace {

long powmod_small(long base, unsigned e, long m) {
  long r = 1 % m;
  base %= m;
  for (unsigned i = 0; i < e; ++i) r = r * base % m;
  return r;
}

long fish_mod(long x, long d, long m) {
  return (3 * powmod_small(x, 4, m) + 20 * x * x % m * d % m * d + 10 * powmod_small(d, 4, m)) % m;
}

}  // namespace

ThreeDividesReport three_divides_ab_check(std::int64_t search_box) {
  ThreeDividesReport r;
  const int kappas[] = {1, 2, 5, 10};
  // Residues of b^n mod 9 repeat with period 6 in n.
  bool any = false;
  for (int k : kappas) {
    for (unsigned n = 2; n <= 7; ++n) {
      for (long x = 0; x < 9; ++x) {
        if (x % 3 == 0) continue;
        for (long d = 0; d < 9; d += 3) {
          for (long b = 0; b < 9; ++b) {
            if (fish_mod(x, d, 9) == k * powmod_small(b, n, 9) % 9) any = true;
          }
        }
      }
    }
  }
  r.d_coprime_to_3 = !any;

  bool bad = false;
  for (int k : kappas) {
    for (unsigned n = 2; n <= 3; ++n) {
      for (long x = 0; x < 3; ++x) {
        for (long d = 1; d < 3; ++d) {
          for (long b = 0; b < 3; ++b) {
            if (fish_mod(x, d, 3) != k * powmod_small(b, n, 3) % 3) continue;
            if (x != 0 && b != 0) bad = true;
          }
        }
      }
    }
  }
  r.x_or_b_divisible = !bad;

  bool iff = true;
  for (int k : kappas) {
    for (unsigned n = 2; n <= 3; ++n) {
      for (long a = 0; a < 3; ++a) {
        const long x = powmod_small(k, n - 1, 3) * powmod_small(a, n, 3) % 3;
        if ((x == 0) != (a == 0)) iff = false;
      }
    }
  }
  r.x_divisible_iff_a = iff;

  r.search_records_ok = true;
  for (const auto& s : search_solutions(search_box, search_box, 13)) {
    if (s.y == 0) continue;
    ++r.records_checked;
    if (s.y % 3 != 0) r.search_records_ok = false;
  }
  return r;
}

FuzzReport identity_fuzz(std::size_t trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  gmp_randclass big(gmp_randinit_default);
  big.seed(static_cast<unsigned long>(seed));
  FuzzReport r;
  for (std::size_t t = 0; t < trials; ++t) {
    // Alternate small words and multi-limb values.
    Int x, d;
    if (t % 2 == 0) {
      x = Int(static_cast<long>(rng() % 2000001)) - 1000000;
      d = Int(static_cast<long>(rng() % 2000001)) - 1000000;
    } else {
      x = big.get_z_bits(1 + rng() % 200);
      d = big.get_z_bits(1 + rng() % 200);
      if (rng() & 1U) x = -x;
      if (rng() & 1U) d = -d;
    }
    const Int q = 3 * ipow(x, 4) + 20 * x * x * d * d + 10 * ipow(d, 4);
    const Int t2 = d * d + x * x;
    const bool ok = main_form(x, d) == x * q && q == 10 * t2 * t2 - 7 * ipow(x, 4);
    ++r.trials;
    if (!ok) ++r.failures;
  }
  return r;
}

SjReport sj_three_divides(unsigned j) {
  SjReport r;
  r.applicable = j % 18 == 3 || j % 18 == 15;
  if (!r.applicable) return r;
  const Int J(j);
  // Variables z, d; x = z - (j-1)/2 d, so x + i d = z + (i - (j-1)/2) d.
  const MPoly z = MPoly::var(2, 0);
  const MPoly d = MPoly::var(2, 1);
  MPoly lhs(2);
  const long half = static_cast<long>(j - 1) / 2;
  for (long i = 0; i < static_cast<long>(j); ++i) lhs += (z + d * Int(i - half)).pow(5);
  const Int c2 = 5 * (J * J - 1) / 2;
  const Int c4 = (J * J - 1) * (3 * J * J - 7) / 16;
  MPoly inner = z.pow(4) * Int(3) + z.pow(2) * d.pow(2) * c2 + d.pow(4) * c4;
  const MPoly rhs = z * inner * (J / 3);
  r.identity = ((J * J - 1) * (3 * J * J - 7)) % 16 == 0 && lhs == rhs;

  r.mod3 = true;
  for (long zz = 0; zz < 3; ++zz) {
    for (long dd = 1; dd < 3; ++dd) {
      if (lhs.eval({Int(zz), Int(dd)}) % 3 != 0) r.mod3 = false;
    }
  }
  r.mod9 = true;
  for (long zz = 0; zz < 9; ++zz) {
    if (zz % 3 == 0) continue;
    for (long dd = 0; dd < 9; dd += 3) {
      Int v = lhs.eval({Int(zz), Int(dd)}) % 9;
      if (v < 0) v += 9;
      if (v != 3 && v != 6) r.mod9 = false;
    }
  }
  return r;
}

}  // namespace ap5
