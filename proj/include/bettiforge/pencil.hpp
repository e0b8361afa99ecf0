#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "bettiforge/diff_form.hpp"
#include "bettiforge/groebner.hpp"
#include "bettiforge/syzygy.hpp"

namespace bettiforge {

/// Members alpha_j g + beta_j h of the pencil spanned by g and h.
template <class F>
struct PencilSpec {
  using Elem = typename F::Elem;
  Polynomial<F> g, h;
  std::vector<std::pair<Elem, Elem>> members;
};

template <class F>
void check_pencil_pair(const Polynomial<F>& g, const Polynomial<F>& h) {
  require_same_ring(g.ring(), h.ring());
  if (g.ring()->nvars() != 4) throw DomainError("pencils live in four variables");
  if (g.is_zero() || h.is_zero() || !g.is_homogeneous() || !h.is_homogeneous())
    throw DomainError("pencil generators must be nonzero and homogeneous");
  if (g.degree() != h.degree()) throw DomainError("pencil generators must have equal degree");
  if (g.degree() < 2) throw DomainError("pencil generators must have degree at least 2");
}

/// prod_j (alpha_j g + beta_j h).
template <class F>
Polynomial<F> build_pencil_surface(const PencilSpec<F>& spec) {
  check_pencil_pair(spec.g, spec.h);
  if (spec.members.size() < 2) throw DomainError("a pencil surface needs at least two members");
  const F& k = spec.g.field();
  for (std::size_t i = 0; i < spec.members.size(); ++i) {
    const auto& [a, b] = spec.members[i];
    if (k.is_zero(a) && k.is_zero(b)) throw DomainError("pencil member (0, 0)");
    for (std::size_t j = 0; j < i; ++j) {
      const auto& [c, e] = spec.members[j];
      if (k.is_zero(k.sub(k.mul(a, e), k.mul(b, c)))) throw DomainError("proportional pencil members");
    }
  }
  auto f = Polynomial<F>::constant(spec.g.ring(), 1L);
  for (const auto& [a, b] : spec.members) f *= spec.g.scaled(a) + spec.h.scaled(b);
  return f;
}

/// dg ^ dh.
template <class F>
DifferentialForm<F> pencil_two_form(const Polynomial<F>& g, const Polynomial<F>& h) {
  check_pencil_pair(g, h);
  return wedge(differential(g), differential(h));
}

/// A 3-form sum c_I dx_I in four variables read as the quadruple
/// (c_yzt, -c_xzt, c_xyt, -c_xyz).
template <class F>
SyzygyQuadruple<F> quadruple_from_three_form(const DifferentialForm<F>& w) {
  if (w.grade() != 3 || w.ring()->nvars() != 4) throw DomainError("expected a 3-form in four variables");
  SyzygyQuadruple<F> q;
  q.comps[0] = w.component({1, 2, 3});
  q.comps[1] = -w.component({0, 2, 3});
  q.comps[2] = w.component({0, 1, 3});
  q.comps[3] = -w.component({0, 1, 2});
  return q;
}

/// The syzygies dv ^ dg ^ dh for v = x, y, z, t.
template <class F>
std::array<SyzygyQuadruple<F>, 4> pencil_syzygies(const Polynomial<F>& g, const Polynomial<F>& h) {
  auto omega = pencil_two_form(g, h);
  std::array<SyzygyQuadruple<F>, 4> out;
  for (int v = 0; v < 4; ++v)
    out[static_cast<std::size_t>(v)] = quadruple_from_three_form(wedge(DifferentialForm<F>::basis(g.ring(), v), omega));
  return out;
}

template <class F>
struct SyzygyRank {
  int rank = 0;
  /// Basis of the relations sum_v c_v rho_v = 0.
  std::vector<std::array<typename F::Elem, 4>> kernel;
  /// c_x x + c_y y + c_z z + c_t t for the kernel vector when rank = 3.
  std::optional<Polynomial<F>> plane;
};

/// Rank over the coefficient field of four quadruples seen as coefficient
/// vectors.
template <class F>
SyzygyRank<F> syzygy_rank(const std::array<SyzygyQuadruple<F>, 4>& rhos) {
  using Elem = typename F::Elem;
  const auto& ring = rhos[0].comps[0].ring();
  const F& k = ring->field;
  // Row i: coefficient vector of rho_i, augmented with e_i.
  struct Row {
    std::map<std::pair<std::uint32_t, std::uint64_t>, Elem> coefs;
    std::array<Elem, 4> combo;
  };
  std::vector<Row> rows(4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t c = 0; c < 4; ++c)
      for (const auto& t : rhos[i].comps[c].terms()) rows[i].coefs[{static_cast<std::uint32_t>(c), t.mono.raw()}] = t.coef;
    for (std::size_t j = 0; j < 4; ++j) rows[i].combo[j] = i == j ? k.one() : k.zero();
  }
  SyzygyRank<F> out;
  std::vector<bool> pivoted(4, false);
  for (std::size_t i = 0; i < 4; ++i) {
    if (rows[i].coefs.empty()) continue;
    auto [key, pc] = *rows[i].coefs.begin();
    out.rank++;
    pivoted[i] = true;
    for (std::size_t j = 0; j < 4; ++j) {
      if (j == i) continue;
      auto it = rows[j].coefs.find(key);
      if (it == rows[j].coefs.end()) continue;
      Elem factor = k.div(it->second, pc);
      for (const auto& [kk, v] : rows[i].coefs) {
        Elem nv = k.sub(rows[j].coefs.count(kk) ? rows[j].coefs[kk] : k.zero(), k.mul(factor, v));
        if (k.is_zero(nv)) rows[j].coefs.erase(kk);
        else rows[j].coefs[kk] = nv;
      }
      for (std::size_t c = 0; c < 4; ++c) rows[j].combo[c] = k.sub(rows[j].combo[c], k.mul(factor, rows[i].combo[c]));
    }
  }
  for (std::size_t i = 0; i < 4; ++i)
    if (!pivoted[i]) out.kernel.push_back(rows[i].combo);
  if (out.rank == 3) {
    Polynomial<F> l(ring);
    for (int v = 0; v < 4; ++v) l += Polynomial<F>::variable(ring, v).scaled(out.kernel[0][static_cast<std::size_t>(v)]);
    out.plane = l.monic();
  }
  return out;
}

/// l vanishes on {g = h = 0}.
template <class F>
bool plane_containment_check(const Polynomial<F>& g, const Polynomial<F>& h, const Polynomial<F>& l) {
  if (l.is_zero() || !l.is_homogeneous() || l.degree() != 1) throw DomainError("plane equation must be a nonzero linear form");
  return radical_membership(l, std::vector<Polynomial<F>>{g, h});
}

}  // namespace bettiforge
