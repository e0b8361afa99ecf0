#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <set>
#include <vector>

#include "bettiforge/detail/reduce.hpp"

namespace bettiforge::detail {

struct BuchbergerOptions {
  /// Pairs whose lcm has graded degree above this are skipped (-1: none).
  int degree_bound = -1;
  /// Record, for every element, its expression in the input generators.
  bool track_representations = false;
  /// Accept inhomogeneous input (internal use by radical membership).
  bool allow_inhomogeneous = false;
};

/// Raw Buchberger output: the inputs (unchanged, in order) followed by the
/// monic reduced S-vector remainders that were added.
template <class F>
struct RawBasis {
  ModulePtr<F> module;
  std::vector<ModVec<F>> elements;
  std::size_t num_original = 0;
  /// Marked when a later element's lead divides this one's lead.
  std::vector<bool> redundant;
  /// Present when requested: representation of element i over the inputs.
  ModulePtr<F> rep_module;
  std::vector<ModVec<F>> representations;
};

template <class F>
class Buchberger {
 public:
  using Elem = typename F::Elem;

  Buchberger(ModulePtr<F> module, BuchbergerOptions opts)
      : opts_(opts), acc_(module), index_(&basis_.elements, module->rank(), module->ring->nvars()) {
    basis_.module = std::move(module);
    ideal_ = basis_.module->rank() == 1;
  }

  RawBasis<F> run(std::vector<ModVec<F>> gens) {
    basis_.num_original = gens.size();
    if (opts_.track_representations) {
      std::vector<int> shifts;
      for (const auto& g : gens) shifts.push_back(g.degree());
      basis_.rep_module = make_free_module(basis_.module->ring, ModuleOrder::term_over_position(shifts));
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i].is_zero()) throw DomainError("zero generator passed to Buchberger");
      std::optional<ModVec<F>> rep;
      if (opts_.track_representations) rep = ModVec<F>::unit(basis_.rep_module, static_cast<std::uint32_t>(i));
      insert(std::move(gens[i]), std::move(rep));
    }
    while (!pairs_.empty()) {
      Pair p = pairs_.top();
      pairs_.pop();
      process(p);
    }
    return std::move(basis_);
  }

 private:
  struct Pair {
    int degree;
    std::uint32_t i, j;  // i < j
    Monomial lcm;
    // Min-heap on (degree, j, i).
    bool operator<(const Pair& o) const {
      if (degree != o.degree) return degree > o.degree;
      if (j != o.j) return j > o.j;
      return i > o.i;
    }
  };

  int graded_degree(Monomial m, std::uint32_t comp) const {
    return m.degree() + basis_.module->order.shift(comp);
  }

  void process(const Pair& p) {
    if (!pair_alive(p)) return;
    live_pairs_.erase(key(p.i, p.j));
    const auto& gi = basis_.elements[p.i];
    const auto& gj = basis_.elements[p.j];
    const F& k = basis_.module->ring->field;
    Monomial qi = p.lcm / gi.lead().mono, qj = p.lcm / gj.lead().mono;
    Elem ci = k.inv(gi.lead().coef), cj = k.neg(k.inv(gj.lead().coef));
    acc_.clear();
    acc_.add_multiple(gi, qi, ci, 1);
    acc_.add_multiple(gj, qj, cj, 1);
    std::vector<Quotient<F>> quots;
    ModVec<F> h = reduce_accumulated(acc_, index_, basis_.module, opts_.track_representations ? &quots : nullptr);
    if (h.is_zero()) return;
    Elem lc_inv = k.inv(h.lead().coef);
    std::optional<ModVec<F>> rep;
    if (opts_.track_representations) {
      ModVec<F> r = basis_.representations[p.i].mul_term(qi, ci) + basis_.representations[p.j].mul_term(qj, cj);
      for (const auto& q : quots) r = r - basis_.representations[q.index].mul_term(q.mono, q.coef);
      rep = r.scaled(lc_inv);
    }
    insert(h.scaled(lc_inv), std::move(rep));
  }

  // Pairs removed by the chain criterion after being queued are dropped
  // from the live set and skipped when popped.
  bool pair_alive(const Pair& p) const { return live_pairs_.count(key(p.i, p.j)) != 0; }
  static std::uint64_t key(std::uint32_t i, std::uint32_t j) { return (std::uint64_t{j} << 32) | i; }

  void insert(ModVec<F> h, std::optional<ModVec<F>> rep) {
    if (!opts_.allow_inhomogeneous && !h.is_homogeneous())
      throw DomainError("inhomogeneous generator: the engine is graded-only");
    auto hidx = static_cast<std::uint32_t>(basis_.elements.size());
    Monomial mh = h.lead().mono;
    std::uint32_t comp = h.lead().comp;
    basis_.elements.push_back(std::move(h));
    basis_.redundant.push_back(false);
    if (rep) basis_.representations.push_back(std::move(*rep));
    index_.add(hidx);

    // Gebauer-Moeller update.
    struct Cand {
      std::uint32_t i;
      Monomial lcm;
      bool coprime;
      bool keep;
    };
    std::vector<Cand> cands;
    for (std::uint32_t i = 0; i < hidx; ++i) {
      if (basis_.redundant[i] || basis_.elements[i].lead().comp != comp) continue;
      Monomial mi = basis_.elements[i].lead().mono;
      cands.push_back({i, Monomial::lcm(mi, mh), ideal_ && Monomial::coprime(mi, mh), true});
    }
    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (cands[a].coprime) continue;
      for (std::size_t b = 0; b < cands.size(); ++b) {
        if (b == a || !cands[b].keep) continue;
        // Entries before a that were dropped are gone; later ones still count.
        if (cands[b].lcm.divides(cands[a].lcm)) {
          cands[a].keep = false;
          break;
        }
      }
    }
    // Chain criterion on queued pairs with the same lead component.
    for (auto it = live_pairs_.begin(); it != live_pairs_.end();) {
      auto i = static_cast<std::uint32_t>(*it & 0xFFFFFFFFu), j = static_cast<std::uint32_t>(*it >> 32);
      Monomial li = basis_.elements[i].lead().mono, lj = basis_.elements[j].lead().mono;
      Monomial l = Monomial::lcm(li, lj);
      if (basis_.elements[i].lead().comp == comp && mh.divides(l) && Monomial::lcm(li, mh) != l &&
          Monomial::lcm(lj, mh) != l)
        it = live_pairs_.erase(it);
      else
        ++it;
    }
    for (const auto& c : cands) {
      if (!c.keep || c.coprime) continue;
      int deg = graded_degree(c.lcm, comp);
      if (opts_.degree_bound >= 0 && deg > opts_.degree_bound) continue;
      pairs_.push({deg, c.i, hidx, c.lcm});
      live_pairs_.insert(key(c.i, hidx));
    }
    for (std::uint32_t i = 0; i < hidx; ++i)
      if (!basis_.redundant[i] && basis_.elements[i].lead().comp == comp && mh.divides(basis_.elements[i].lead().mono))
        basis_.redundant[i] = true;
  }

  BuchbergerOptions opts_;
  RawBasis<F> basis_;
  Accumulator<F> acc_;
  LeadIndex<F> index_;
  bool ideal_ = false;
  std::priority_queue<Pair> pairs_;
  std::set<std::uint64_t> live_pairs_;
};

template <class F>
RawBasis<F> raw_groebner(ModulePtr<F> module, std::vector<ModVec<F>> gens, BuchbergerOptions opts = {}) {
  return Buchberger<F>(std::move(module), opts).run(std::move(gens));
}

/// Fully reduces v against the indexed elements.
template <class F>
ModVec<F> full_reduce(const ModVec<F>& v, const LeadIndex<F>& index, Accumulator<F>& acc) {
  acc.clear();
  acc.add_multiple(v, Monomial{}, v.field().one());
  return reduce_accumulated<F>(acc, index, v.module(), nullptr);
}

/// Minimal, interreduced, monic basis sorted by increasing lead term.
template <class F>
std::vector<ModVec<F>> interreduce(const ModulePtr<F>& module, const std::vector<ModVec<F>>& elems) {
  std::vector<ModVec<F>> minimal;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const auto& li = elems[i].lead();
    bool keep = true;
    for (std::size_t j = 0; j < elems.size() && keep; ++j) {
      if (j == i) continue;
      const auto& lj = elems[j].lead();
      if (lj.comp != li.comp || !lj.mono.divides(li.mono)) continue;
      // Equal leads: keep the first occurrence only.
      if (lj.mono != li.mono || j < i) keep = false;
    }
    if (keep) minimal.push_back(elems[i].monic());
  }
  const auto& ord = module->order;
  std::sort(minimal.begin(), minimal.end(), [&](const ModVec<F>& a, const ModVec<F>& b) {
    return ord.key(a.lead().mono, a.lead().comp) < ord.key(b.lead().mono, b.lead().comp);
  });
  Accumulator<F> acc(module);
  std::vector<ModVec<F>> out;
  out.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    LeadIndex<F> idx(&minimal, module->rank(), module->ring->nvars());
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) idx.add(j);
    const auto& g = minimal[i];
    acc.clear();
    acc.add_multiple(g, Monomial{}, g.field().one(), 1);
    ModVec<F> tail = reduce_accumulated<F>(acc, idx, module, nullptr);
    std::vector<ModTerm<F>> terms;
    terms.push_back(g.lead());
    for (const auto& t : tail.terms()) terms.push_back(t);
    out.push_back(ModVec<F>::from_sorted_terms(module, std::move(terms)));
  }
  return out;
}

}  // namespace bettiforge::detail
