#include "ap5/mpoly.hpp"

#include "ap5/errors.hpp"

#include <sstream>

namespace ap5 {

MPoly MPoly::constant(std::size_t nvars, const Int& c) {
  MPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MPoly MPoly::var(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw PreconditionError("MPoly::var: index out of range");
  MPoly p(nvars);
  Exponents e(nvars, 0);
  e[i] = 1;
  p.add_term(e, 1);
  return p;
}

Int MPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

void MPoly::add_term(const Exponents& e, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.nvars_ != nvars_) throw PreconditionError("MPoly: variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (o.nvars_ != nvars_) throw PreconditionError("MPoly: variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.nvars_ != b.nvars_) throw PreconditionError("MPoly: variable count mismatch");
  MPoly out(a.nvars_);
  MPoly::Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly& MPoly::operator*=(const Int& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly acc = constant(nvars_, 1);
  MPoly base = *this;
  while (e > 0) {
    if (e & 1U) acc = acc * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return acc;
}

MPoly MPoly::reduce_power(std::size_t i, unsigned e, const MPoly& r) const {
  if (i >= nvars_ || e == 0) throw PreconditionError("MPoly::reduce_power: bad variable or exponent");
  for (const auto& [er, cr] : r.terms_) {
    if (er[i] >= e) throw PreconditionError("MPoly::reduce_power: replacement not reduced");
  }
  MPoly done(nvars_);
  MPoly todo = *this;
  while (!todo.is_zero()) {
    MPoly next(nvars_);
    for (const auto& [ex, c] : todo.terms_) {
      if (ex[i] < e) {
        done.add_term(ex, c);
        continue;
      }
      Exponents rest = ex;
      rest[i] -= e;
      MPoly mono(nvars_);
      mono.add_term(rest, c);
      next += mono * r;
    }
    todo = std::move(next);
  }
  return done;
}

Int MPoly::eval(const std::vector<Int>& at) const {
  if (at.size() != nvars_) throw PreconditionError("MPoly::eval: point has wrong dimension");
  Int acc = 0;
  for (const auto& [e, c] : terms_) {
    Int t = c;
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (e[k] != 0) t *= ipow(at[k], e[k]);
    }
    acc += t;
  }
  return acc;
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const Int mag = abs(c);
    bool any_var = false;
    for (std::size_t k = 0; k < nvars_; ++k) any_var = any_var || e[k] != 0;
    if (mag != 1 || !any_var) os << mag.get_str();
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (e[k] == 0) continue;
      os << (k < names.size() ? names[k] : "x" + std::to_string(k));
      if (e[k] > 1) os << "^" << e[k];
    }
  }
  return os.str();
}

}  // namespace ap5
