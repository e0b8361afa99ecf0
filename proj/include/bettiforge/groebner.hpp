#pragma once

#include <vector>

#include "bettiforge/detail/buchberger.hpp"
#include "bettiforge/module.hpp"
#include "bettiforge/polynomial.hpp"

namespace bettiforge {

struct GroebnerOptions {
  /// Truncate: ignore S-pairs of graded degree above the bound (-1: none).
  /// The result is then a basis only up to that degree.
  int degree_bound = -1;
};

template <class F>
struct GroebnerBasis {
  ModulePtr<F> module;
  std::vector<ModVec<F>> generators;
  bool reduced = false;
  int degree_bound = -1;
};

/// The free module S (rank one, no twist) used for ideals.
template <class F>
ModulePtr<F> ideal_module(const RingPtr<F>& ring) {
  return make_free_module(ring, ModuleOrder::term_over_position({0}));
}

template <class F>
ModVec<F> as_vector(const ModulePtr<F>& module, const Polynomial<F>& p) {
  return ModVec<F>::from_components(module, {p});
}

/// Reduced Groebner basis of the submodule spanned by homogeneous gens.
template <class F>
GroebnerBasis<F> groebner_basis(const std::vector<ModVec<F>>& gens, GroebnerOptions opts = {}) {
  if (gens.empty()) throw DomainError("groebner_basis needs at least one generator");
  const ModulePtr<F>& module = gens.front().module();
  std::vector<ModVec<F>> nonzero;
  for (const auto& g : gens) {
    if (g.module() != module) throw IncompatibleOperands("generators live in different free modules");
    if (!g.is_homogeneous()) throw DomainError("inhomogeneous generator: the engine is graded-only");
    if (!g.is_zero()) nonzero.push_back(g);
  }
  GroebnerBasis<F> gb{module, {}, true, opts.degree_bound};
  if (nonzero.empty()) return gb;
  detail::BuchbergerOptions bo;
  bo.degree_bound = opts.degree_bound;
  auto raw = detail::raw_groebner(module, std::move(nonzero), bo);
  gb.generators = detail::interreduce(module, raw.elements);
  return gb;
}

template <class F>
GroebnerBasis<F> groebner_basis(const std::vector<Polynomial<F>>& gens, GroebnerOptions opts = {}) {
  if (gens.empty()) throw DomainError("groebner_basis needs at least one generator");
  auto module = ideal_module(gens.front().ring());
  std::vector<ModVec<F>> vs;
  for (const auto& g : gens) {
    require_same_ring(g.ring(), gens.front().ring());
    vs.push_back(as_vector(module, g));
  }
  return groebner_basis(vs, opts);
}

template <class F>
ModVec<F> normal_form(const ModVec<F>& v, const GroebnerBasis<F>& gb) {
  if (v.module() != gb.module) throw IncompatibleOperands("vector is not in the basis' ambient module");
  if (gb.generators.empty()) return v;
  detail::LeadIndex<F> index(&gb.generators, gb.module->rank(), gb.module->ring->nvars());
  for (std::size_t i = 0; i < gb.generators.size(); ++i) index.add(i);
  detail::Accumulator<F> acc(gb.module);
  return detail::full_reduce(v, index, acc);
}

template <class F>
Polynomial<F> normal_form(const Polynomial<F>& p, const GroebnerBasis<F>& gb) {
  if (gb.module->rank() != 1) throw DomainError("polynomial normal form needs an ideal basis");
  require_same_ring(p.ring(), gb.module->ring);
  return normal_form(as_vector(gb.module, p), gb).component(0);
}

/// True iff every S-pair of the basis reduces to zero.
template <class F>
bool satisfies_buchberger_criterion(const GroebnerBasis<F>& gb) {
  const auto& g = gb.generators;
  const F& k = gb.module->ring->field;
  detail::LeadIndex<F> index(&g, gb.module->rank(), gb.module->ring->nvars());
  for (std::size_t i = 0; i < g.size(); ++i) index.add(i);
  detail::Accumulator<F> acc(gb.module);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      const auto &li = g[i].lead(), &lj = g[j].lead();
      if (li.comp != lj.comp) continue;
      Monomial l = Monomial::lcm(li.mono, lj.mono);
      if (gb.degree_bound >= 0 && l.degree() + gb.module->order.shift(li.comp) > gb.degree_bound) continue;
      acc.clear();
      acc.add_multiple(g[i], l / li.mono, k.inv(li.coef), 1);
      acc.add_multiple(g[j], l / lj.mono, k.neg(k.inv(lj.coef)), 1);
      if (!detail::reduce_accumulated<F>(acc, index, gb.module, nullptr).is_zero()) return false;
    }
  return true;
}

/// Generators of the module of relations among homogeneous gens, living in
/// the free module with basis e_i of degree deg(gens_i).  Zero generators
/// contribute the unit relation e_i.  Built from Schreyer's S-pair traces
/// over a Groebner basis containing the inputs.
template <class F>
std::vector<ModVec<F>> syzygy_generators(const std::vector<ModVec<F>>& gens, ModulePtr<F>* source_module = nullptr);

template <class F>
std::vector<ModVec<F>> syzygy_generators(const std::vector<Polynomial<F>>& gens, ModulePtr<F>* source_module = nullptr) {
  if (gens.empty()) throw DomainError("syzygy_generators needs at least one generator");
  auto module = ideal_module(gens.front().ring());
  std::vector<ModVec<F>> vs;
  for (const auto& g : gens) vs.push_back(as_vector(module, g));
  return syzygy_generators(vs, source_module);
}

template <class F>
std::vector<ModVec<F>> syzygy_generators(const std::vector<ModVec<F>>& gens, ModulePtr<F>* source_module) {
  if (gens.empty()) throw DomainError("syzygy_generators needs at least one generator");
  const ModulePtr<F>& target = gens.front().module();
  const F& k = target->ring->field;
  std::vector<int> shifts;
  std::vector<std::size_t> nonzero;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].module() != target) throw IncompatibleOperands("generators live in different free modules");
    if (!gens[i].is_homogeneous()) throw DomainError("inhomogeneous generator: the engine is graded-only");
    shifts.push_back(gens[i].is_zero() ? 0 : gens[i].degree());
    if (!gens[i].is_zero()) nonzero.push_back(i);
  }
  auto source = make_free_module(target->ring, ModuleOrder::term_over_position(shifts));
  if (source_module) *source_module = source;
  std::vector<ModVec<F>> out;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (gens[i].is_zero()) out.push_back(ModVec<F>::unit(source, static_cast<std::uint32_t>(i)));
  if (nonzero.empty()) return out;

  std::vector<ModVec<F>> nz;
  for (auto i : nonzero) nz.push_back(gens[i]);
  detail::BuchbergerOptions bo;
  bo.track_representations = true;
  auto raw = detail::raw_groebner(target, std::move(nz), bo);
  const auto& g = raw.elements;

  detail::LeadIndex<F> index(&g, target->rank(), target->ring->nvars());
  for (std::size_t i = 0; i < g.size(); ++i) index.add(i);
  detail::Accumulator<F> acc(target);
  // Map from the representation module (indexed by nonzero gens) to source.
  auto lift = [&](const ModVec<F>& rep) {
    std::vector<ModTerm<F>> terms;
    for (const auto& t : rep.terms()) terms.push_back({t.mono, static_cast<std::uint32_t>(nonzero[t.comp]), t.coef});
    return ModVec<F>::from_terms(source, std::move(terms));
  };
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      const auto &li = g[i].lead(), &lj = g[j].lead();
      if (li.comp != lj.comp) continue;
      Monomial l = Monomial::lcm(li.mono, lj.mono);
      Monomial qi = l / li.mono, qj = l / lj.mono;
      auto ci = k.inv(li.coef), cj = k.neg(k.inv(lj.coef));
      acc.clear();
      acc.add_multiple(g[i], qi, ci, 1);
      acc.add_multiple(g[j], qj, cj, 1);
      std::vector<detail::Quotient<F>> quots;
      auto rem = detail::reduce_accumulated(acc, index, target, &quots);
      if (!rem.is_zero()) throw Error("internal: S-vector did not reduce to zero");
      ModVec<F> rel = raw.representations[i].mul_term(qi, ci) + raw.representations[j].mul_term(qj, cj);
      for (const auto& q : quots) rel = rel - raw.representations[q.index].mul_term(q.mono, q.coef);
      if (!rel.is_zero()) out.push_back(lift(rel).monic());
    }
  return out;
}

/// Largest subset, in degree order, none of whose members lies in the
/// submodule spanned by the earlier ones.  For homogeneous input this is a
/// minimal generating set of the span.
template <class F>
std::vector<ModVec<F>> minimal_generators(std::vector<ModVec<F>> gens) {
  std::stable_sort(gens.begin(), gens.end(),
                   [](const ModVec<F>& a, const ModVec<F>& b) { return a.degree() < b.degree(); });
  std::vector<ModVec<F>> kept;
  GroebnerBasis<F> gb;
  for (auto& v : gens) {
    if (v.is_zero()) continue;
    if (!kept.empty()) {
      if (gb.module == nullptr || gb.degree_bound < v.degree()) gb = groebner_basis(kept, {v.degree()});
      if (normal_form(v, gb).is_zero()) continue;
    }
    kept.push_back(v);
    gb = GroebnerBasis<F>{};
  }
  return kept;
}

/// Whether l vanishes on the zero set of the ideal: Rabinowitsch's test
/// 1 in (ideal, 1 - w l) in a ring with one extra variable.
template <class F>
bool radical_membership(const Polynomial<F>& l, const std::vector<Polynomial<F>>& ideal) {
  if (l.is_zero()) throw DomainError("radical membership of the zero polynomial");
  const auto& ring = l.ring();
  for (const auto& g : ideal) require_same_ring(g.ring(), ring);
  auto ext = make_ring(ring->vars.extended("_w"), ring->field);
  std::vector<int> map(static_cast<std::size_t>(ring->nvars()));
  for (int i = 0; i < ring->nvars(); ++i) map[static_cast<std::size_t>(i)] = i;
  auto module = ideal_module(ext);
  std::vector<ModVec<F>> gens;
  for (const auto& g : ideal)
    if (!g.is_zero()) gens.push_back(as_vector(module, embed(g, ext, map)));
  auto w = Polynomial<F>::variable(ext, ring->nvars());
  gens.push_back(as_vector(module, Polynomial<F>::constant(ext, 1) - w * embed(l, ext, map)));
  detail::BuchbergerOptions bo;
  bo.allow_inhomogeneous = true;
  auto raw = detail::raw_groebner(module, std::move(gens), bo);
  for (const auto& e : raw.elements)
    if (e.lead().mono.is_one()) return true;
  return false;
}

}  // namespace bettiforge
