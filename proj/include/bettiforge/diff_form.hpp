#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <string>

#include "bettiforge/polynomial.hpp"

namespace bettiforge {

/// A polynomial differential form of fixed grade.  Each component is keyed
/// by a bitmask of variable indices; the stored coefficient multiplies
/// dx_{i1} ^ ... ^ dx_{ig} with i1 < ... < ig.
template <class F>
class DifferentialForm {
 public:
  using Poly = Polynomial<F>;
  using Subset = std::uint32_t;

  DifferentialForm(RingPtr<F> ring, int grade) : ring_(std::move(ring)), grade_(grade) {
    if (grade < 0 || grade > ring_->nvars()) throw DomainError("form grade out of range");
  }

  /// The basic 1-form dx_v.
  static DifferentialForm basis(RingPtr<F> ring, int v) {
    DifferentialForm w(ring, 1);
    w.set(Subset{1} << v, Poly::constant(ring, 1));
    return w;
  }

  const RingPtr<F>& ring() const { return ring_; }
  int grade() const { return grade_; }
  const std::map<Subset, Poly>& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }

  Poly component(Subset s) const {
    auto it = comps_.find(s);
    return it == comps_.end() ? Poly(ring_) : it->second;
  }
  /// Component for an ascending list of variable indices.
  Poly component(std::initializer_list<int> vars) const { return component(mask_of(vars)); }

  void set(Subset s, Poly p) {
    if (std::popcount(s) != grade_) throw DomainError("component subset does not match grade");
    if (p.is_zero())
      comps_.erase(s);
    else
      comps_[s] = std::move(p);
  }
  void add_to(Subset s, const Poly& p) { set(s, component(s) + p); }

  friend DifferentialForm operator+(const DifferentialForm& a, const DifferentialForm& b) {
    require_same_ring(a.ring_, b.ring_);
    if (a.grade_ != b.grade_) throw DomainError("adding forms of different grades");
    DifferentialForm r = a;
    for (const auto& [s, p] : b.comps_) r.add_to(s, p);
    return r;
  }

  DifferentialForm scaled(const Poly& c) const {
    DifferentialForm r(ring_, grade_);
    for (const auto& [s, p] : comps_) r.set(s, p * c);
    return r;
  }

  friend bool operator==(const DifferentialForm& a, const DifferentialForm& b) {
    return a.grade_ == b.grade_ && a.comps_ == b.comps_;
  }

  static Subset mask_of(std::initializer_list<int> vars) {
    Subset s = 0;
    for (int v : vars) s |= Subset{1} << v;
    return s;
  }

  /// Sign of dx_A ^ dx_B relative to dx_{A u B} for disjoint A, B.
  static int shuffle_sign(Subset a, Subset b) {
    int inversions = 0;
    for (Subset rest = b; rest; rest &= rest - 1) {
      int j = std::countr_zero(rest);
      inversions += std::popcount(a >> (j + 1));
    }
    return (inversions & 1) ? -1 : 1;
  }

  std::string to_string() const {
    if (comps_.empty()) return "0";
    std::string out;
    for (const auto& [s, p] : comps_) {
      if (!out.empty()) out += " + ";
      out += "(" + p.to_string() + ")";
      for (int v = 0; v < ring_->nvars(); ++v)
        if (s & (Subset{1} << v)) out += (out.back() == ')' ? " d" : "^d") + ring_->vars.name(v);
    }
    return out;
  }

 private:
  RingPtr<F> ring_;
  int grade_;
  std::map<Subset, Poly> comps_;
};

template <class F>
DifferentialForm<F> wedge(const DifferentialForm<F>& a, const DifferentialForm<F>& b) {
  require_same_ring(a.ring(), b.ring());
  int g = a.grade() + b.grade();
  if (g > a.ring()->nvars()) throw DomainError("wedge product exceeds the number of variables");
  DifferentialForm<F> r(a.ring(), g);
  for (const auto& [sa, pa] : a.components())
    for (const auto& [sb, pb] : b.components()) {
      if (sa & sb) continue;
      auto prod = pa * pb;
      if (DifferentialForm<F>::shuffle_sign(sa, sb) < 0) prod = -prod;
      r.add_to(sa | sb, prod);
    }
  return r;
}

/// df = sum_v (df/dv) dv.
template <class F>
DifferentialForm<F> differential(const Polynomial<F>& f) {
  DifferentialForm<F> w(f.ring(), 1);
  for (int v = 0; v < f.ring()->nvars(); ++v) w.set(typename DifferentialForm<F>::Subset{1} << v, f.partial(v));
  return w;
}

}  // namespace bettiforge
