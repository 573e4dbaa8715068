#include "ap5/quotient_ring.hpp"

#include "ap5/errors.hpp"
#include "ap5/prime_field.hpp"

#include <utility>

namespace ap5 {

namespace {

std::vector<Int> reduce_coeffs(std::vector<Int> v, const IntPoly& f) {
  const auto d = static_cast<std::size_t>(f.degree());
  const auto& m = f.coeffs();
  for (std::size_t k = v.size(); k-- > d;) {
    if (v[k] == 0) continue;
    const Int top = v[k];
    for (std::size_t j = 0; j < d; ++j) v[k - d + j] -= top * m[j];
    v[k] = 0;
  }
  v.resize(d, Int(0));
  return v;
}

}  // namespace

QuotientRingElem::QuotientRingElem(IntPoly modpoly, std::vector<Int> coords)
    : modpoly_(std::make_shared<const IntPoly>(std::move(modpoly))), coords_(std::move(coords)) {
  if (!modpoly_->is_monic() || modpoly_->degree() < 1) {
    throw PreconditionError("QuotientRingElem: modulus must be monic of degree >= 1");
  }
  if (coords_.size() > static_cast<std::size_t>(modpoly_->degree())) {
    coords_ = reduce_coeffs(std::move(coords_), *modpoly_);
  }
  coords_.resize(static_cast<std::size_t>(modpoly_->degree()), Int(0));
}

QuotientRingElem QuotientRingElem::from_poly(const IntPoly& modpoly, const IntPoly& value) {
  return {modpoly, value.coeffs()};
}

QuotientRingElem QuotientRingElem::from_int(const IntPoly& modpoly, const Int& c) {
  return {modpoly, std::vector<Int>{c}};
}

QuotientRingElem QuotientRingElem::theta(const IntPoly& modpoly) {
  return {modpoly, std::vector<Int>{Int(0), Int(1)}};
}

bool QuotientRingElem::is_zero() const {
  for (const Int& c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

std::uint64_t QuotientRingElem::eval_mod(std::uint64_t r, std::uint64_t q) const {
  const PrimeField F(q);
  Residue acc = 0;
  for (auto it = coords_.rbegin(); it != coords_.rend(); ++it) acc = F.add(F.mul(acc, r), F.reduce(*it));
  return acc;
}

void QuotientRingElem::require_same_ring(const QuotientRingElem& o) const {
  if (modpoly_ != o.modpoly_ && !(*modpoly_ == *o.modpoly_)) {
    throw PreconditionError("QuotientRingElem: operands live in different quotient rings");
  }
}

QuotientRingElem& QuotientRingElem::operator+=(const QuotientRingElem& o) {
  require_same_ring(o);
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += o.coords_[k];
  return *this;
}

QuotientRingElem& QuotientRingElem::operator-=(const QuotientRingElem& o) {
  require_same_ring(o);
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= o.coords_[k];
  return *this;
}

QuotientRingElem& QuotientRingElem::operator*=(const Int& s) {
  for (Int& c : coords_) c *= s;
  return *this;
}

bool operator==(const QuotientRingElem& a, const QuotientRingElem& b) {
  return a.modpoly() == b.modpoly() && a.coords_ == b.coords_;
}

QuotientRingElem qring_mul(const QuotientRingElem& a, const QuotientRingElem& b) {
  a.require_same_ring(b);
  const std::size_t d = a.coords_.size();
  std::vector<Int> prod(2 * d - 1, Int(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (a.coords_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) prod[i + j] += a.coords_[i] * b.coords_[j];
  }
  QuotientRingElem out = a;
  out.coords_ = reduce_coeffs(std::move(prod), *a.modpoly_);
  return out;
}

QuotientRingElem qring_pow(QuotientRingElem base, unsigned long e) {
  QuotientRingElem acc = QuotientRingElem::from_int(base.modpoly(), 1);
  while (e > 0) {
    if (e & 1UL) acc = qring_mul(acc, base);
    e >>= 1UL;
    if (e > 0) base = qring_mul(base, base);
  }
  return acc;
}

Int qring_norm(const QuotientRingElem& g) {
  const IntPoly poly = g.as_poly();
  if (poly.is_zero()) return 0;
  return resultant(g.modpoly(), poly);
}

SquareVerdict square_class_test(const QuotientRingElem& g, unsigned prime_budget) {
  if (g.is_zero()) throw PreconditionError("square_class_test: zero element");
  const IntPoly& f = g.modpoly();
  const Int disc = f.degree() >= 2 ? discriminant(f) : Int(1);
  unsigned used = 0;
  // Enough room to find a split prime for any polynomial of moderate degree.
  for (std::uint64_t q : primes_between(3, 20000)) {
    if (used >= prime_budget) break;
    if (mpz_divisible_ui_p(disc.get_mpz_t(), q) != 0) continue;
    const PrimeField F(q);
    bool split_here = false;
    for (Residue r = 0; r < q; ++r) {
      Residue v = 0;
      for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) v = F.add(F.mul(v, r), F.reduce(*it));
      if (v != 0) continue;
      const Residue image = g.eval_mod(r, q);
      if (image == 0) continue;
      split_here = true;
      if (F.legendre(image) == -1) return SquareVerdict::NonSquare;
    }
    if (split_here) ++used;
  }
  if (used == 0) throw InconclusiveError("square_class_test: no usable split prime found");
  return SquareVerdict::ProbablySquare;
}

}  // namespace ap5
