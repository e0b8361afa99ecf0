#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "bettiforge/errors.hpp"
#include "bettiforge/ring.hpp"

namespace bettiforge {

template <class F>
struct Term {
  Monomial mono;
  typename F::Elem coef;
};

/// Sparse multivariate polynomial; terms are kept strictly decreasing in
/// degrevlex with no zero coefficients.
template <class F>
class Polynomial {
 public:
  using Elem = typename F::Elem;
  using TermT = Term<F>;

  Polynomial() = default;
  explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr<F> ring, Elem c) {
    Polynomial p(std::move(ring));
    if (!p.field().is_zero(c)) p.terms_.push_back({Monomial{}, std::move(c)});
    return p;
  }
  static Polynomial constant(RingPtr<F> ring, long c) {
    auto e = ring->field.from_int(c);
    return constant(std::move(ring), std::move(e));
  }
  static Polynomial constant(RingPtr<F> ring, int c) { return constant(std::move(ring), static_cast<long>(c)); }
  static Polynomial variable(RingPtr<F> ring, int i) {
    if (i < 0 || i >= ring->nvars()) throw DomainError("unknown variable index " + std::to_string(i));
    Polynomial p(ring);
    p.terms_.push_back({Monomial::variable(i), ring->field.one()});
    return p;
  }
  static Polynomial variable(RingPtr<F> ring, const std::string& name) {
    auto i = ring->vars.index_of(name);
    if (!i) throw DomainError("unknown variable '" + name + "'");
    return variable(std::move(ring), *i);
  }
  static Polynomial monomial(RingPtr<F> ring, Monomial m, Elem c) {
    Polynomial p(std::move(ring));
    if (!p.field().is_zero(c)) p.terms_.push_back({m, std::move(c)});
    return p;
  }
  /// Builds from arbitrary terms: sorts, merges equal monomials, drops zeros.
  static Polynomial from_terms(RingPtr<F> ring, std::vector<TermT> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }
  /// Adopts terms that are already strictly decreasing and nonzero.
  static Polynomial from_sorted_terms(RingPtr<F> ring, std::vector<TermT> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
  }

  const RingPtr<F>& ring() const { return ring_; }
  const F& field() const { return ring_->field; }
  const std::vector<TermT>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  const TermT& lead() const {
    if (terms_.empty()) throw DomainError("lead term of zero polynomial");
    return terms_.front();
  }
  Monomial lead_monomial() const { return lead().mono; }
  const Elem& lead_coef() const { return lead().coef; }

  /// Total degree of the highest term; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }
  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.mono.degree() != terms_.front().mono.degree()) return false;
    return true;
  }
  int max_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }
  int min_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = d < 0 ? t.mono.degree() : std::min(d, t.mono.degree());
    return d;
  }
  /// Coefficient of the constant monomial.
  Elem constant_coef() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
    return field().zero();
  }
  Elem coefficient(Monomial m) const {
    for (const auto& t : terms_)
      if (t.mono == m) return t.coef;
    return field().zero();
  }
  /// Largest exponent of variable v appearing in any term.
  int degree_in(int v) const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.exponent(v));
    return d;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coef = field().neg(t.coef);
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combine(a, b, true); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring_, b.ring_);
    Polynomial r(a.ring_);
    if (a.is_zero() || b.is_zero()) return r;
    const F& k = a.field();
    if (a.size() == 1 || b.size() == 1) {
      const auto& single = a.size() == 1 ? a : b;
      const auto& other = a.size() == 1 ? b : a;
      return other.mul_term(single.terms_[0].mono, single.terms_[0].coef);
    }
    std::vector<TermT> prod;
    prod.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) prod.push_back({s.mono * t.mono, k.mul(s.coef, t.coef)});
    r.terms_ = std::move(prod);
    r.normalize();
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const Elem& c) const {
    Polynomial r(ring_);
    if (field().is_zero(c)) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coef = field().mul(t.coef, c);
    return r;
  }

  /// c * m * this.  Multiplying by a monomial preserves term order.
  Polynomial mul_term(Monomial m, const Elem& c) const {
    Polynomial r(ring_);
    if (field().is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, field().mul(t.coef, c)});
    return r;
  }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(ring_, field().one());
    Polynomial base = *this;
    while (e > 0) {
      if (e & 1u) result = result * base;
      e >>= 1u;
      if (e) base = base * base;
    }
    return result;
  }

  Polynomial partial(int v) const {
    if (v < 0 || v >= ring_->nvars()) throw DomainError("unknown variable index " + std::to_string(v));
    std::vector<TermT> out;
    Monomial xv = Monomial::variable(v);
    for (const auto& t : terms_) {
      int e = t.mono.exponent(v);
      if (e == 0) continue;
      auto c = field().mul(t.coef, field().from_int(e));
      if (field().is_zero(c)) continue;
      out.push_back({t.mono / xv, std::move(c)});
    }
    // Dividing by a single variable can reorder terms in degrevlex.
    return from_terms(ring_, std::move(out));
  }
  Polynomial partial(const std::string& name) const {
    auto i = ring_->vars.index_of(name);
    if (!i) throw DomainError("unknown variable '" + name + "'");
    return partial(*i);
  }

  /// Scales so the leading coefficient is one (zero stays zero).
  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(field().inv(lead_coef()));
  }

  bool divisible_by_monomial(Monomial m) const {
    return std::all_of(terms_.begin(), terms_.end(), [&](const TermT& t) { return m.divides(t.mono); });
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    if (!a.terms_.empty() && !same_ring(a.ring_, b.ring_)) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].mono != b.terms_[i].mono || !(a.terms_[i].coef == b.terms_[i].coef)) return false;
    return true;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
      std::string c = field().to_string(t.coef);
      bool negative = !c.empty() && c[0] == '-';
      if (negative) c.erase(0, 1);
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      std::string mono = monomial_string(t.mono);
      if (mono.empty()) {
        out += c;
      } else if (c == "1") {
        out += mono;
      } else {
        out += c + "*" + mono;
      }
      first = false;
    }
    return out;
  }

  std::string monomial_string(Monomial m) const {
    std::string s;
    for (int i = 0; i < ring_->nvars(); ++i) {
      int e = m.exponent(i);
      if (e == 0) continue;
      if (!s.empty()) s += "*";
      s += ring_->vars.name(i);
      if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
  }

 private:
  void normalize() {
    const F& k = field();
    std::sort(terms_.begin(), terms_.end(), [](const TermT& a, const TermT& b) { return a.mono > b.mono; });
    std::size_t w = 0;
    for (std::size_t r = 0; r < terms_.size();) {
      Monomial m = terms_[r].mono;
      Elem c = std::move(terms_[r].coef);
      std::size_t s = r + 1;
      for (; s < terms_.size() && terms_[s].mono == m; ++s) c = k.add(c, terms_[s].coef);
      if (!k.is_zero(c)) terms_[w++] = {m, std::move(c)};
      r = s;
    }
    terms_.resize(w);
  }

  static Polynomial combine(const Polynomial& a, const Polynomial& b, bool subtract) {
    require_same_ring(a.ring_, b.ring_);
    const F& k = a.field();
    Polynomial r(a.ring_);
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j >= b.size() || (i < a.size() && a.terms_[i].mono > b.terms_[j].mono)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i >= a.size() || b.terms_[j].mono > a.terms_[i].mono) {
        r.terms_.push_back({b.terms_[j].mono, subtract ? k.neg(b.terms_[j].coef) : b.terms_[j].coef});
        ++j;
      } else {
        auto c = subtract ? k.sub(a.terms_[i].coef, b.terms_[j].coef) : k.add(a.terms_[i].coef, b.terms_[j].coef);
        if (!k.is_zero(c)) r.terms_.push_back({a.terms_[i].mono, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  RingPtr<F> ring_;
  std::vector<TermT> terms_;
};

/// Re-expresses p in another ring; variable i of p's ring becomes variable
/// index_map[i] of the target.
template <class F>
Polynomial<F> embed(const Polynomial<F>& p, RingPtr<F> target, const std::vector<int>& index_map) {
  std::vector<Term<F>> out;
  out.reserve(p.size());
  int n = p.ring()->nvars();
  std::vector<int> exps(static_cast<std::size_t>(target->nvars()), 0);
  for (const auto& t : p.terms()) {
    std::fill(exps.begin(), exps.end(), 0);
    for (int i = 0; i < n; ++i) {
      int e = t.mono.exponent(i);
      if (e == 0) continue;
      int dst = index_map.at(static_cast<std::size_t>(i));
      if (dst < 0) throw DomainError("variable has no image in target ring");
      exps[static_cast<std::size_t>(dst)] += e;
    }
    out.push_back({Monomial::from_exponents(exps), t.coef});
  }
  return Polynomial<F>::from_terms(std::move(target), std::move(out));
}

/// Euler operator sum_v v * df/dv.
template <class F>
Polynomial<F> euler_operator(const Polynomial<F>& f) {
  Polynomial<F> acc(f.ring());
  for (int v = 0; v < f.ring()->nvars(); ++v) acc += Polynomial<F>::variable(f.ring(), v) * f.partial(v);
  return acc;
}

/// Exact division by a nonzero divisor.  Returns (quotient, remainder)
/// from the multivariate division algorithm in degrevlex; the remainder
/// is zero iff divisor | dividend.
template <class F>
std::pair<Polynomial<F>, Polynomial<F>> divide(const Polynomial<F>& dividend, const Polynomial<F>& divisor) {
  require_same_ring(dividend.ring(), divisor.ring());
  if (divisor.is_zero()) throw DomainError("division by the zero polynomial");
  const F& k = dividend.field();
  Polynomial<F> q(dividend.ring()), r(dividend.ring()), rest = dividend;
  const auto lt = divisor.lead();
  auto lc_inv = k.inv(lt.coef);
  std::vector<Term<F>> qterms, rterms;
  while (!rest.is_zero()) {
    const auto& t = rest.lead();
    if (lt.mono.divides(t.mono)) {
      Monomial m = t.mono / lt.mono;
      auto c = k.mul(t.coef, lc_inv);
      qterms.push_back({m, c});
      rest = rest - divisor.mul_term(m, c);
    } else {
      rterms.push_back(t);
      rest = Polynomial<F>::from_sorted_terms(
          rest.ring(), std::vector<Term<F>>(rest.terms().begin() + 1, rest.terms().end()));
    }
  }
  return {Polynomial<F>::from_terms(dividend.ring(), std::move(qterms)),
          Polynomial<F>::from_sorted_terms(dividend.ring(), std::move(rterms))};
}

}  // namespace bettiforge
