#include "ap5/prime_field.hpp"

#include "ap5/errors.hpp"

#include <algorithm>
#include <string>

namespace ap5 {

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (!is_prime_u64(p)) throw PreconditionError("PrimeField: modulus " + std::to_string(p) + " is not prime");
}

Residue PrimeField::reduce(std::int64_t v) const noexcept {
  if (v >= 0) return static_cast<std::uint64_t>(v) % p_;
  // -(v + 1) avoids overflow at INT64_MIN.
  const std::uint64_t r = (static_cast<std::uint64_t>(-(v + 1)) + 1) % p_;
  return r == 0 ? 0 : p_ - r;
}

Residue PrimeField::reduce(const Int& v) const {
  Int r = v % Int(static_cast<unsigned long>(p_));
  if (r < 0) r += static_cast<unsigned long>(p_);
  return r.get_ui();
}

Residue PrimeField::inv(Residue a) const {
  if (a % p_ == 0) throw PreconditionError("PrimeField: zero has no inverse");
  return pow(a, p_ - 2);
}

int PrimeField::legendre(Residue a) const noexcept {
  a %= p_;
  if (a == 0) return 0;
  if (p_ == 2) return 1;
  return pow(a, (p_ - 1) / 2) == 1 ? 1 : -1;
}

Residue PrimeField::primitive_root() const {
  if (p_ == 2) return 1;
  std::vector<std::uint64_t> factors;
  std::uint64_t m = p_ - 1;
  for (std::uint64_t q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      factors.push_back(q);
      while (m % q == 0) m /= q;
    }
  }
  if (m > 1) factors.push_back(m);
  for (Residue g = 2; g < p_; ++g) {
    bool generator = true;
    for (std::uint64_t q : factors) {
      if (pow(g, (p_ - 1) / q) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return g;
  }
  throw Error("PrimeField: no primitive root found");
}

std::optional<std::vector<Residue>> mod_sqrt(Residue x, const PrimeField& F) {
  const std::uint64_t p = F.p();
  x %= p;
  if (x == 0) return std::vector<Residue>{0};
  if (p == 2) return std::vector<Residue>{x};
  if (F.legendre(x) != 1) return std::nullopt;

  Residue r = 0;
  if (p % 4 == 3) {
    r = F.pow(x, (p + 1) / 4);
  } else {
    std::uint64_t q = p - 1;
    unsigned s = 0;
    while (q % 2 == 0) {
      q /= 2;
      ++s;
    }
    Residue z = 2;
    while (F.legendre(z) != -1) ++z;
    Residue c = F.pow(z, q);
    r = F.pow(x, (q + 1) / 2);
    Residue t = F.pow(x, q);
    unsigned m = s;
    while (t != 1) {
      unsigned i = 0;
      Residue t2 = t;
      while (t2 != 1) {
        t2 = F.mul(t2, t2);
        ++i;
      }
      Residue b = c;
      for (unsigned j = 0; j + 1 < m - i; ++j) b = F.mul(b, b);
      r = F.mul(r, b);
      c = F.mul(b, b);
      t = F.mul(t, c);
      m = i;
    }
  }
  std::vector<Residue> roots{r, F.neg(r)};
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<Residue> nth_power_residues(std::uint64_t n, const PrimeField& F) {
  const std::uint64_t p = F.p();
  if (n == 0 || (p - 1) % n != 0) {
    throw PreconditionError("nth_power_residues: need p = 1 mod n (p=" + std::to_string(p) +
                            ", n=" + std::to_string(n) + ")");
  }
  const std::uint64_t t = (p - 1) / n;
  const Residue h = F.pow(F.primitive_root(), n);
  std::vector<Residue> out;
  out.reserve(t);
  Residue cur = 1;
  for (std::uint64_t k = 0; k < t; ++k) {
    out.push_back(cur);
    cur = F.mul(cur, h);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t centered(Residue a, const PrimeField& F) noexcept {
  const auto p = static_cast<std::int64_t>(F.p());
  const auto v = static_cast<std::int64_t>(a % F.p());
  return v > p / 2 ? v - p : v;
}

}  // namespace ap5
