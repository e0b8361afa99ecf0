#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <memory>
#include <numeric>
#include <vector>

#include "bettiforge/polynomial.hpp"

namespace bettiforge {

/// Sort key of a module term; larger key means larger term.
struct OrderKey {
  std::int64_t major = 0;
  std::uint64_t middle = 0;
  std::int64_t minor = 0;
  friend auto operator<=>(const OrderKey&, const OrderKey&) = default;
};

/// Monomial order on a graded free module  S(-a_0) + ... + S(-a_{r-1}).
///
/// Schreyer kind: m e_i is compared by (deg m + a_i), then degrevlex of
/// m * w_i, then by tie rank (smaller rank is larger).  With unit weights
/// and ranks equal to positions this is the degree-compatible
/// term-over-position order.  Position-over-term compares the tie rank
/// first and then m.
class ModuleOrder {
 public:
  enum class Kind { kSchreyer, kPositionOverTerm };

  ModuleOrder() = default;

  static ModuleOrder term_over_position(std::vector<int> shifts) {
    ModuleOrder o;
    o.kind_ = Kind::kSchreyer;
    o.weights_.assign(shifts.size(), Monomial{});
    o.ranks_.resize(shifts.size());
    std::iota(o.ranks_.begin(), o.ranks_.end(), 0u);
    o.shifts_ = std::move(shifts);
    return o;
  }
  static ModuleOrder position_over_term(std::vector<int> shifts) {
    ModuleOrder o = term_over_position(std::move(shifts));
    o.kind_ = Kind::kPositionOverTerm;
    return o;
  }
  /// Order induced by a map e_i -> (lead term living in a module whose
  /// order already gives that term the key (weight, rank)).
  static ModuleOrder schreyer(std::vector<int> shifts, std::vector<Monomial> weights,
                              std::vector<std::uint32_t> ranks) {
    ModuleOrder o;
    o.kind_ = Kind::kSchreyer;
    o.shifts_ = std::move(shifts);
    o.weights_ = std::move(weights);
    o.ranks_ = std::move(ranks);
    return o;
  }

  Kind kind() const { return kind_; }
  std::size_t rank() const { return shifts_.size(); }
  int shift(std::uint32_t c) const { return shifts_[c]; }
  const std::vector<int>& shifts() const { return shifts_; }
  Monomial weight(std::uint32_t c) const { return weights_[c]; }
  std::uint32_t tie_rank(std::uint32_t c) const { return ranks_[c]; }

  OrderKey key(Monomial m, std::uint32_t c) const {
    if (kind_ == Kind::kPositionOverTerm)
      return {-static_cast<std::int64_t>(ranks_[c]), m.order_key(), 0};
    return {m.degree() + shifts_[c], (m * weights_[c]).order_key(), -static_cast<std::int64_t>(ranks_[c])};
  }

 private:
  Kind kind_ = Kind::kSchreyer;
  std::vector<int> shifts_;
  std::vector<Monomial> weights_;
  std::vector<std::uint32_t> ranks_;
};

template <class F>
struct FreeModule {
  RingPtr<F> ring;
  ModuleOrder order;

  std::size_t rank() const { return order.rank(); }
};

template <class F>
using ModulePtr = std::shared_ptr<const FreeModule<F>>;

template <class F>
ModulePtr<F> make_free_module(RingPtr<F> ring, ModuleOrder order) {
  return std::make_shared<const FreeModule<F>>(FreeModule<F>{std::move(ring), std::move(order)});
}

template <class F>
struct ModTerm {
  Monomial mono;
  std::uint32_t comp;
  typename F::Elem coef;
};

/// Element of a graded free module; terms strictly decreasing in the
/// module's order, no zero coefficients.
template <class F>
class ModVec {
 public:
  using Elem = typename F::Elem;
  using Poly = Polynomial<F>;

  ModVec() = default;
  explicit ModVec(ModulePtr<F> module) : module_(std::move(module)) {}

  static ModVec from_terms(ModulePtr<F> module, std::vector<ModTerm<F>> terms) {
    ModVec v(std::move(module));
    v.terms_ = std::move(terms);
    v.normalize();
    return v;
  }
  static ModVec from_sorted_terms(ModulePtr<F> module, std::vector<ModTerm<F>> terms) {
    ModVec v(std::move(module));
    v.terms_ = std::move(terms);
    return v;
  }
  static ModVec from_components(ModulePtr<F> module, const std::vector<Poly>& comps) {
    if (comps.size() != module->rank()) throw DomainError("component count does not match module rank");
    std::vector<ModTerm<F>> terms;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      if (!comps[c].is_zero()) require_same_ring(comps[c].ring(), module->ring);
      for (const auto& t : comps[c].terms()) terms.push_back({t.mono, static_cast<std::uint32_t>(c), t.coef});
    }
    return from_terms(std::move(module), std::move(terms));
  }
  /// Basis vector e_c.
  static ModVec unit(ModulePtr<F> module, std::uint32_t c) {
    ModVec v(module);
    v.terms_.push_back({Monomial{}, c, module->ring->field.one()});
    return v;
  }

  const ModulePtr<F>& module() const { return module_; }
  const F& field() const { return module_->ring->field; }
  const std::vector<ModTerm<F>>& terms() const { return terms_; }
  std::vector<ModTerm<F>>& mutable_terms() { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const ModTerm<F>& lead() const {
    if (terms_.empty()) throw DomainError("lead term of zero vector");
    return terms_.front();
  }

  /// Graded degree deg(m) + shift of the lead term; -1 for zero.
  int degree() const {
    if (terms_.empty()) return -1;
    return terms_.front().mono.degree() + module_->order.shift(terms_.front().comp);
  }
  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.mono.degree() + module_->order.shift(t.comp) != degree()) return false;
    return true;
  }

  std::vector<Poly> components() const {
    std::vector<std::vector<Term<F>>> buckets(module_->rank());
    for (const auto& t : terms_) buckets[t.comp].push_back({t.mono, t.coef});
    std::vector<Poly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.push_back(Poly::from_terms(module_->ring, std::move(b)));
    return out;
  }
  Poly component(std::uint32_t c) const {
    std::vector<Term<F>> b;
    for (const auto& t : terms_)
      if (t.comp == c) b.push_back({t.mono, t.coef});
    return Poly::from_terms(module_->ring, std::move(b));
  }

  ModVec scaled(const Elem& c) const {
    ModVec r(module_);
    if (field().is_zero(c)) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coef = field().mul(t.coef, c);
    return r;
  }
  ModVec mul_term(Monomial m, const Elem& c) const {
    ModVec r(module_);
    if (field().is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.comp, field().mul(t.coef, c)});
    return r;
  }
  ModVec mul_poly(const Poly& p) const {
    std::vector<ModTerm<F>> out;
    out.reserve(terms_.size() * p.size());
    for (const auto& s : p.terms())
      for (const auto& t : terms_) out.push_back({t.mono * s.mono, t.comp, field().mul(t.coef, s.coef)});
    return from_terms(module_, std::move(out));
  }
  ModVec monic() const {
    if (is_zero()) return *this;
    return scaled(field().inv(lead().coef));
  }

  friend ModVec operator+(const ModVec& a, const ModVec& b) { return combine(a, b, false); }
  friend ModVec operator-(const ModVec& a, const ModVec& b) { return combine(a, b, true); }

  friend bool operator==(const ModVec& a, const ModVec& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].comp != b.terms_[i].comp ||
          !(a.terms_[i].coef == b.terms_[i].coef))
        return false;
    return true;
  }

  std::string to_string() const {
    auto comps = components();
    std::string s = "(";
    for (std::size_t i = 0; i < comps.size(); ++i) s += (i ? ", " : "") + comps[i].to_string();
    return s + ")";
  }

 private:
  void normalize() {
    const auto& ord = module_->order;
    const F& k = field();
    std::sort(terms_.begin(), terms_.end(), [&](const ModTerm<F>& a, const ModTerm<F>& b) {
      return ord.key(a.mono, a.comp) > ord.key(b.mono, b.comp);
    });
    std::size_t w = 0;
    for (std::size_t r = 0; r < terms_.size();) {
      auto c = std::move(terms_[r].coef);
      std::size_t s = r + 1;
      for (; s < terms_.size() && terms_[s].mono == terms_[r].mono && terms_[s].comp == terms_[r].comp; ++s)
        c = k.add(c, terms_[s].coef);
      if (!k.is_zero(c)) terms_[w++] = {terms_[r].mono, terms_[r].comp, std::move(c)};
      r = s;
    }
    terms_.resize(w);
  }

  static ModVec combine(const ModVec& a, const ModVec& b, bool subtract) {
    if (a.module_ != b.module_) throw IncompatibleOperands("vectors live in different free modules");
    const auto& ord = a.module_->order;
    const F& k = a.field();
    ModVec r(a.module_);
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j >= b.size()) {
        r.terms_.push_back(a.terms_[i++]);
        continue;
      }
      auto kb = ord.key(b.terms_[j].mono, b.terms_[j].comp);
      if (i < a.size()) {
        auto ka = ord.key(a.terms_[i].mono, a.terms_[i].comp);
        if (ka > kb) {
          r.terms_.push_back(a.terms_[i++]);
          continue;
        }
        if (ka == kb) {
          auto c = subtract ? k.sub(a.terms_[i].coef, b.terms_[j].coef) : k.add(a.terms_[i].coef, b.terms_[j].coef);
          if (!k.is_zero(c)) r.terms_.push_back({a.terms_[i].mono, a.terms_[i].comp, std::move(c)});
          ++i;
          ++j;
          continue;
        }
      }
      r.terms_.push_back({b.terms_[j].mono, b.terms_[j].comp, subtract ? k.neg(b.terms_[j].coef) : b.terms_[j].coef});
      ++j;
    }
    return r;
  }

  ModulePtr<F> module_;
  std::vector<ModTerm<F>> terms_;
};

}  // namespace bettiforge
