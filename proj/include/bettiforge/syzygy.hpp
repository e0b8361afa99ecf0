#pragma once

#include <array>
#include <string>
#include <vector>

#include "bettiforge/polynomial.hpp"

namespace bettiforge {

/// (a^x, a^y, a^z, a^t) with a^x f_x + a^y f_y + a^z f_z + a^t f_t = 0.
template <class F>
struct SyzygyQuadruple {
  std::array<Polynomial<F>, 4> comps;

  /// Common degree of the nonzero components; -1 for the zero quadruple.
  int degree() const {
    for (const auto& c : comps)
      if (!c.is_zero()) return c.degree();
    return -1;
  }
  bool is_homogeneous() const {
    int d = degree();
    for (const auto& c : comps)
      if (!c.is_zero() && (!c.is_homogeneous() || c.degree() != d)) return false;
    return true;
  }
  bool is_zero() const {
    for (const auto& c : comps)
      if (!c.is_zero()) return false;
    return true;
  }
  bool operator==(const SyzygyQuadruple& o) const { return comps == o.comps; }
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < 4; ++i) s += (i ? ", " : "") + comps[i].to_string();
    return s + ")";
  }
};

/// The partial derivatives of f in variable order.
template <class F>
std::vector<Polynomial<F>> jacobian_generators(const Polynomial<F>& f) {
  if (!f.is_homogeneous() || f.is_zero()) throw DomainError("f must be a nonzero homogeneous polynomial");
  if (f.degree() < 3) throw DomainError("f must have degree at least 3");
  std::vector<Polynomial<F>> out;
  for (int v = 0; v < f.ring()->nvars(); ++v) out.push_back(f.partial(v));
  return out;
}

/// sum_i rho_i * df/dv_i == 0.
template <class F>
bool verify_syzygy(const Polynomial<F>& f, const SyzygyQuadruple<F>& rho) {
  if (f.ring()->nvars() != 4) throw DomainError("syzygy quadruples need four variables");
  Polynomial<F> acc(f.ring());
  for (int v = 0; v < 4; ++v) {
    require_same_ring(rho.comps[static_cast<std::size_t>(v)].ring(), f.ring());
    acc += rho.comps[static_cast<std::size_t>(v)] * f.partial(v);
  }
  return acc.is_zero();
}

}  // namespace bettiforge
