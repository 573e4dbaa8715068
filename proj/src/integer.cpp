#include "ap5/integer.hpp"

#include "ap5/errors.hpp"

#include <algorithm>
#include <array>

namespace ap5 {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1U) result = mulmod_u64(result, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1U;
  }
  return result;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // These bases are a deterministic witness set for all n < 2^64.
  for (std::uint64_t a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    std::uint64_t x = powmod_u64(a % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n.fits_ulong_p()) return is_prime_u64(n.get_ui());
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi < 2 || lo > hi) return out;
  std::vector<bool> composite(hi + 1, false);
  for (std::uint64_t i = 2; i * i <= hi; ++i) {
    if (composite[i]) continue;
    for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
  }
  for (std::uint64_t i = std::max<std::uint64_t>(lo, 2); i <= hi; ++i) {
    if (!composite[i]) out.push_back(i);
  }
  return out;
}

std::optional<Int> exact_root(const Int& v, unsigned long n) {
  if (n == 0) throw PreconditionError("exact_root: exponent must be positive");
  if (v < 0 && n % 2 == 0) return std::nullopt;
  Int root;
  const int exact = mpz_root(root.get_mpz_t(), v.get_mpz_t(), n);
  if (exact == 0) return std::nullopt;
  return root;
}

Int ipow(const Int& base, unsigned long e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

namespace {

Int pollard_brent(const Int& n, unsigned long seed) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  Int y = Int(seed) % n;
  const Int c = Int(seed * 7 + 1) % n;
  Int g = 1;
  Int q = 1;
  Int x;
  Int ys;
  const unsigned long m = 128;
  unsigned long r = 1;
  while (g == 1) {
    x = y;
    for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
    unsigned long k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
        y = (y * y + c) % n;
        q = (q * abs(x - y)) % n;
      }
      g = gcd(q, n);
      k += m;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = (ys * ys + c) % n;
      g = gcd(abs(x - ys), n);
    } while (g == 1);
  }
  return g;
}

void factor_into(const Int& n, std::vector<Int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  Int d = n;
  for (unsigned long seed = 2; d == n; ++seed) d = pollard_brent(n, seed);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<Int> prime_divisors(const Int& n) {
  if (n == 0) throw PreconditionError("prime_divisors: zero has no finite factorization");
  Int m = abs(n);
  std::vector<Int> out;
  for (unsigned long p = 2; p < 10000 && m > 1; ++p) {
    if (!is_prime_u64(p)) continue;
    if (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
      out.emplace_back(p);
      while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) m /= p;
    }
  }
  if (m > 1) factor_into(m, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::int64_t to_i64(const Int& v) {
  if (!v.fits_slong_p()) throw PreconditionError("integer does not fit in 64 bits: " + v.get_str());
  return v.get_si();
}

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& v) { return v.get_str(); }

}  // namespace ap5
