#pragma once

// Reduction machinery shared by the Groebner and resolution code.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "bettiforge/module.hpp"

namespace bettiforge::detail {

/// Coarse divisibility filter: bit (v, k) is set when exponent of v >= k+1.
/// If mask(a) & ~mask(b) != 0 then a does not divide b.
inline std::uint64_t divisor_mask(Monomial m, int nvars) {
  int per = 64 / nvars;
  std::uint64_t mask = 0;
  for (int v = 0; v < nvars; ++v) {
    int e = std::min(m.exponent(v), per);
    if (e > 0) mask |= ((std::uint64_t{1} << e) - 1) << (v * per);
  }
  return mask;
}

/// Sparse accumulator for a module vector being reduced: a hash table of
/// terms plus a max-heap of their order keys.  Terms leave the table in
/// decreasing order; a popped term must not be added again, which holds
/// for reductions since every subtracted multiple has lead <= the popped
/// term and that lead cancels it.
template <class F>
class Accumulator {
 public:
  using Elem = typename F::Elem;

  explicit Accumulator(ModulePtr<F> module) : module_(std::move(module)) { grow(1024); }

  void clear() {
    ++generation_;
    heap_.clear();
    live_ = 0;
  }

  /// this += c * q * v, skipping the first `skip` terms of v.
  void add_multiple(const ModVec<F>& v, Monomial q, const Elem& c, std::size_t skip = 0) {
    const F& k = module_->ring->field;
    const auto& terms = v.terms();
    for (std::size_t i = skip; i < terms.size(); ++i) {
      Slot& s = find_or_insert(terms[i].mono * q, terms[i].comp);
      s.coef = k.add(s.coef, k.mul(terms[i].coef, c));
    }
  }

  void add_term(Monomial m, std::uint32_t comp, const Elem& c) {
    const F& k = module_->ring->field;
    Slot& s = find_or_insert(m, comp);
    s.coef = k.add(s.coef, c);
  }

  /// Removes and returns the largest nonzero term.
  bool pop(ModTerm<F>& out) {
    const F& k = module_->ring->field;
    while (!heap_.empty()) {
      std::pop_heap(heap_.begin(), heap_.end());
      std::uint32_t idx = heap_.back().slot;
      heap_.pop_back();
      Slot& s = slots_[idx];
      s.popped = true;
      if (k.is_zero(s.coef)) continue;
      out.mono = s.mono;
      out.comp = s.comp;
      out.coef = s.coef;
      return true;
    }
    return false;
  }

  bool empty_heap() const { return heap_.empty(); }

 private:
  struct Slot {
    Monomial mono;
    std::uint32_t comp = 0;
    std::uint32_t gen = 0;
    bool popped = false;
    Elem coef{};
  };
  struct HeapEntry {
    OrderKey key;
    std::uint32_t slot;
    bool operator<(const HeapEntry& o) const { return key < o.key; }
  };

  static std::size_t hash(Monomial m, std::uint32_t comp) {
    std::uint64_t x = (m.raw() ^ (static_cast<std::uint64_t>(comp) * 0xD6E8FEB86659FD93ull)) * 0x9E3779B97F4A7C15ull;
    return static_cast<std::size_t>(x ^ (x >> 31));
  }

  Slot& find_or_insert(Monomial m, std::uint32_t comp) {
    if ((live_ + 1) * 2 > slots_.size()) grow(slots_.size() * 2);
    std::size_t mask = slots_.size() - 1;
    for (std::size_t i = hash(m, comp) & mask;; i = (i + 1) & mask) {
      Slot& s = slots_[i];
      if (s.gen != generation_) {
        s.gen = generation_;
        s.mono = m;
        s.comp = comp;
        s.popped = false;
        s.coef = module_->ring->field.zero();
        ++live_;
        heap_.push_back({module_->order.key(m, comp), static_cast<std::uint32_t>(i)});
        std::push_heap(heap_.begin(), heap_.end());
        return s;
      }
      if (s.mono == m && s.comp == comp) return s;
    }
  }

  void grow(std::size_t n) {
    std::vector<Slot> old;
    old.swap(slots_);
    slots_.resize(n);
    std::uint32_t old_gen = generation_;
    ++generation_;
    live_ = 0;
    std::vector<HeapEntry> old_heap;
    old_heap.swap(heap_);
    // Reinsert live slots, then rebuild the heap from the surviving entries.
    std::vector<std::uint32_t> remap(old.size(), UINT32_MAX);
    std::size_t mask = n - 1;
    for (std::size_t j = 0; j < old.size(); ++j) {
      const Slot& s = old[j];
      if (s.gen != old_gen) continue;
      for (std::size_t i = hash(s.mono, s.comp) & mask;; i = (i + 1) & mask) {
        if (slots_[i].gen != generation_) {
          slots_[i] = s;
          slots_[i].gen = generation_;
          remap[j] = static_cast<std::uint32_t>(i);
          ++live_;
          break;
        }
      }
    }
    for (auto& h : old_heap)
      if (remap[h.slot] != UINT32_MAX) heap_.push_back({h.key, remap[h.slot]});
    std::make_heap(heap_.begin(), heap_.end());
  }

  ModulePtr<F> module_;
  std::vector<Slot> slots_;
  std::vector<HeapEntry> heap_;
  std::uint32_t generation_ = 1;
  std::size_t live_ = 0;
};

/// Lead-term index over a list of module vectors.
template <class F>
class LeadIndex {
 public:
  LeadIndex(const std::vector<ModVec<F>>* elems, std::size_t rank, int nvars)
      : elems_(elems), by_comp_(rank), nvars_(nvars) {}

  void add(std::size_t idx) {
    const auto& lt = (*elems_)[idx].lead();
    by_comp_[lt.comp].push_back({divisor_mask(lt.mono, nvars_), lt.mono, static_cast<std::uint32_t>(idx)});
  }

  /// Smallest-index element whose lead divides m e_comp, or -1.
  long find(Monomial m, std::uint32_t comp) const {
    std::uint64_t not_mask = ~divisor_mask(m, nvars_);
    for (const auto& e : by_comp_[comp])
      if ((e.mask & not_mask) == 0 && e.mono.divides(m)) return e.index;
    return -1;
  }

  const std::vector<ModVec<F>>& elements() const { return *elems_; }

 private:
  struct Entry {
    std::uint64_t mask;
    Monomial mono;
    std::uint32_t index;
  };
  const std::vector<ModVec<F>>* elems_;
  std::vector<std::vector<Entry>> by_comp_;
  int nvars_;
};

/// One reduction step h -= coef * mono * g_index recorded for syzygies.
template <class F>
struct Quotient {
  Monomial mono;
  std::uint32_t index;
  typename F::Elem coef;
};

/// Drains the accumulator into a fully reduced remainder.  When `quotients`
/// is non-null every reduction step is recorded.
template <class F>
ModVec<F> reduce_accumulated(Accumulator<F>& acc, const LeadIndex<F>& index, const ModulePtr<F>& module,
                             std::vector<Quotient<F>>* quotients) {
  const F& k = module->ring->field;
  std::vector<ModTerm<F>> rem;
  ModTerm<F> t{Monomial{}, 0, k.zero()};
  while (acc.pop(t)) {
    long r = index.find(t.mono, t.comp);
    if (r < 0) {
      rem.push_back(t);
      continue;
    }
    const auto& g = index.elements()[static_cast<std::size_t>(r)];
    const auto& lt = g.lead();
    Monomial q = t.mono / lt.mono;
    auto c = k.div(t.coef, lt.coef);
    acc.add_multiple(g, q, k.neg(c), 1);
    if (quotients) quotients->push_back({q, static_cast<std::uint32_t>(r), c});
  }
  return ModVec<F>::from_sorted_terms(module, std::move(rem));
}

}  // namespace bettiforge::detail
