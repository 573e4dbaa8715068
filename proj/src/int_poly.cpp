#include "ap5/int_poly.hpp"

#include "ap5/errors.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace ap5 {

namespace {

constexpr long kMaxResultantDegree = 256;

Int pow_int(const Int& b, long e) { return ipow(b, static_cast<unsigned long>(e)); }

}  // namespace

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  normalize();
}

IntPoly IntPoly::monomial(const Int& c, std::size_t k) {
  std::vector<Int> v(k + 1, Int(0));
  v[k] = c;
  return IntPoly(std::move(v));
}

void IntPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Int IntPoly::content() const {
  Int g = 0;
  for (const Int& c : c_) g = gcd(g, c);
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  Int g = content();
  if (lc() < 0) g = -g;
  return divexact(g);
}

Int IntPoly::eval(const Int& x) const {
  Int acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Int> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<unsigned long>(k);
  return IntPoly(std::move(d));
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const Int& s) {
  for (Int& c : c_) c *= s;
  normalize();
  return *this;
}

IntPoly IntPoly::divexact(const Int& d) const {
  if (d == 0) throw PreconditionError("IntPoly::divexact: division by zero");
  std::vector<Int> out(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (mpz_divisible_p(c_[k].get_mpz_t(), d.get_mpz_t()) == 0) {
      throw PreconditionError("IntPoly::divexact: inexact division");
    }
    mpz_divexact(out[k].get_mpz_t(), c_[k].get_mpz_t(), d.get_mpz_t());
  }
  return IntPoly(std::move(out));
}

std::string IntPoly::to_string(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Int& c = c_[k];
    if (c == 0) continue;
    Int mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw PreconditionError("pseudo_remainder: zero divisor");
  std::vector<Int> r = a.coeffs();
  const long db = b.degree();
  long dr = a.degree();
  if (dr < db) return a;
  const Int lb = b.lc();
  long e = dr - db + 1;
  const auto& bc = b.coeffs();
  while (dr >= db && !r.empty()) {
    const Int lr = r.back();
    const long shift = dr - db;
    for (Int& c : r) c *= lb;
    for (long k = 0; k <= db; ++k) r[static_cast<std::size_t>(k + shift)] -= lr * bc[static_cast<std::size_t>(k)];
    while (!r.empty() && r.back() == 0) r.pop_back();
    dr = static_cast<long>(r.size()) - 1;
    --e;
  }
  IntPoly out(std::move(r));
  if (e > 0) out *= pow_int(lb, e);
  return out;
}

Int resultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) throw PreconditionError("resultant: zero polynomial");
  if (f.degree() > kMaxResultantDegree || g.degree() > kMaxResultantDegree) {
    throw PreconditionError("resultant: degree above 256");
  }
  if (f.degree() == 0) return pow_int(f.lc(), g.degree());
  if (g.degree() == 0) return pow_int(g.lc(), f.degree());

  // Subresultant PRS (Collins; Cohen, Algorithm 3.3.7). Cost is
  // O(d^2) coefficient operations per step with coefficient growth
  // bounded by the subresultant theorem.
  const Int ca = f.content();
  const Int cb = g.content();
  IntPoly A = f.divexact(ca);
  IntPoly B = g.divexact(cb);
  Int t = pow_int(ca, g.degree()) * pow_int(cb, f.degree());
  int s = 1;
  if (A.degree() < B.degree()) {
    std::swap(A, B);
    if (A.degree() % 2 == 1 && B.degree() % 2 == 1) s = -s;
  }
  Int gg = 1;
  Int h = 1;
  while (true) {
    const long delta = A.degree() - B.degree();
    if (A.degree() % 2 == 1 && B.degree() % 2 == 1) s = -s;
    IntPoly R = pseudo_remainder(A, B);
    A = std::move(B);
    if (R.is_zero()) return 0;
    B = R.divexact(gg * pow_int(h, delta));
    gg = A.lc();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = gg;
    } else {
      Int num = pow_int(gg, delta);
      Int den = pow_int(h, delta - 1);
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (B.degree() == 0) break;
  }
  const long da = A.degree();
  Int hb;
  if (da == 1) {
    hb = B.lc();
  } else {
    Int num = pow_int(B.lc(), da);
    Int den = pow_int(h, da - 1);
    mpz_divexact(hb.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  }
  return s * t * hb;
}

Int discriminant(const IntPoly& f) {
  if (f.degree() < 1) throw PreconditionError("discriminant: degree must be at least 1");
  const long n = f.degree();
  Int r = resultant(f, f.derivative());
  Int d;
  mpz_divexact(d.get_mpz_t(), r.get_mpz_t(), f.lc().get_mpz_t());
  if ((n * (n - 1) / 2) % 2 == 1) d = -d;
  return d;
}

}  // namespace ap5
