#pragma once

// Slow, independent reference computations used to check the library.

#include "ap5/int_poly.hpp"
#include "ap5/integer.hpp"

#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using ap5::Int;
using ap5::Rat;

inline std::int64_t mod(std::int64_t v, std::int64_t p) {
  v %= p;
  return v < 0 ? v + p : v;
}

/// #E(F_p) for the long Weierstrass form by counting every (x, y) pair.
inline std::int64_t count_points(std::int64_t p, std::int64_t a1, std::int64_t a2, std::int64_t a3, std::int64_t a4,
                                 std::int64_t a6) {
  std::int64_t count = 1;
  for (std::int64_t x = 0; x < p; ++x) {
    const std::int64_t rhs = mod(mod(mod(x * x, p) * x, p) + mod(a2 * x % p * x, p) + mod(a4 * x, p) + a6, p);
    for (std::int64_t y = 0; y < p; ++y) {
      const std::int64_t lhs = mod(y * y + mod(a1 * x, p) * y + a3 * y, p);
      if (lhs == rhs) ++count;
    }
  }
  return count;
}

inline std::int64_t trace_by_count(std::int64_t p, std::int64_t a1, std::int64_t a2, std::int64_t a3,
                                   std::int64_t a4, std::int64_t a6) {
  return p + 1 - count_points(p, a1, a2, a3, a4, a6);
}

/// Every y in [0, p) with y^2 = x.
inline std::vector<std::uint64_t> square_roots(std::uint64_t x, std::uint64_t p) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t y = 0; y < p; ++y) {
    if (y * y % p == x % p) out.push_back(y);
  }
  return out;
}

/// {x^n mod p : 0 < x < p}.
inline std::set<std::uint64_t> nth_powers(std::uint64_t n, std::uint64_t p) {
  std::set<std::uint64_t> out;
  for (std::uint64_t x = 1; x < p; ++x) {
    std::uint64_t v = 1;
    for (std::uint64_t k = 0; k < n; ++k) v = v * x % p;
    out.insert(v);
  }
  return out;
}

/// Determinant by fraction-free Gaussian elimination over Q.
inline Rat determinant(std::vector<std::vector<Rat>> m) {
  const std::size_t n = m.size();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rat f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

/// Resultant as the determinant of the Sylvester matrix.
inline Int sylvester_resultant(const ap5::IntPoly& f, const ap5::IntPoly& g) {
  const auto m = static_cast<std::size_t>(f.degree());
  const auto n = static_cast<std::size_t>(g.degree());
  const std::size_t size = m + n;
  std::vector<std::vector<Rat>> s(size, std::vector<Rat>(size, Rat(0)));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k <= m; ++k) s[r][r + k] = Rat(f.coeff(m - k));
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t k = 0; k <= n; ++k) s[n + r][r + k] = Rat(g.coeff(n - k));
  }
  const Rat d = determinant(s);
  return d.get_num();
}

/// (x-d)^5 + x^5 + (x+d)^5, term by term.
inline Int equation_lhs(const Int& x, const Int& d) {
  const Int u = x - d;
  const Int v = x + d;
  return u * u * u * u * u + x * x * x * x * x + v * v * v * v * v;
}

/// Integer n-th root by bisection, if v is a perfect n-th power.
inline bool perfect_power(const Int& v, unsigned n, Int& root) {
  if (v < 0 && n % 2 == 0) return false;
  Int a = abs(v);
  Int lo = 0, hi = 1;
  while (true) {
    Int p = 1;
    for (unsigned k = 0; k < n; ++k) p *= hi;
    if (p >= a) break;
    hi *= 2;
  }
  while (lo < hi) {
    Int mid = (lo + hi) / 2;
    Int p = 1;
    for (unsigned k = 0; k < n; ++k) p *= mid;
    if (p < a) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  Int p = 1;
  for (unsigned k = 0; k < n; ++k) p *= lo;
  if (p != a) return false;
  root = v < 0 ? Int(-lo) : lo;
  return true;
}

inline Int gcd(Int a, Int b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

/// Genus of X_0(N), i.e. dim S_2(Gamma_0(N)), from the index, elliptic points and cusps.
inline long genus_x0(long N) {
  std::vector<std::pair<long, int>> fac;
  long m = N;
  for (long q = 2; q * q <= m; ++q) {
    int e = 0;
    while (m % q == 0) {
      m /= q;
      ++e;
    }
    if (e > 0) fac.emplace_back(q, e);
  }
  if (m > 1) fac.emplace_back(m, 1);
  long mu = N;
  for (auto [q, e] : fac) mu = mu / q * (q + 1);
  long nu2 = 1, nu3 = 1;
  for (auto [q, e] : fac) {
    nu2 *= (N % 4 == 0) ? 0 : (q == 2 ? 1 : (q % 4 == 1 ? 2 : 0));
    nu3 *= (N % 9 == 0) ? 0 : (q == 3 ? 1 : (q % 3 == 1 ? 2 : 0));
  }
  long cusps = 0;
  for (long d = 1; d <= N; ++d) {
    if (N % d != 0) continue;
    long a = d, b = N / d;
    while (b != 0) {
      const long t = a % b;
      a = b;
      b = t;
    }
    // phi(gcd(d, N/d))
    long g = a, phi = a;
    for (long q = 2; q * q <= g; ++q) {
      if (g % q != 0) continue;
      while (g % q == 0) g /= q;
      phi -= phi / q;
    }
    if (g > 1) phi -= phi / g;
    cusps += phi;
  }
  // 12 g = 12 + mu - 3 nu2 - 4 nu3 - 6 cusps
  return (12 + mu - 3 * nu2 - 4 * nu3 - 6 * cusps) / 12;
}

/// dim S_2^new(Gamma_0(N)) = sum over M | N of beta(N/M) dim S_2(Gamma_0(M)),
/// beta multiplicative with beta(p) = -2, beta(p^2) = 1, beta(p^k) = 0 for k > 2.
inline long new_dimension(long N) {
  long total = 0;
  for (long M = 1; M <= N; ++M) {
    if (N % M != 0) continue;
    long r = N / M, beta = 1;
    for (long q = 2; q <= r; ++q) {
      int e = 0;
      while (r % q == 0) {
        r /= q;
        ++e;
      }
      if (e == 1) beta *= -2;
      if (e >= 3) beta = 0;
    }
    total += beta * genus_x0(M);
  }
  return total;
}

}  // namespace oracle
