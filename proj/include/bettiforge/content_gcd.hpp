#pragma once

#include <utility>
#include <vector>

#include "bettiforge/polynomial.hpp"

namespace bettiforge {

namespace gcd_detail {

template <class F>
Polynomial<F> exact_quotient(const Polynomial<F>& a, const Polynomial<F>& b) {
  auto [q, r] = divide(a, b);
  if (!r.is_zero()) throw DomainError("inexact polynomial division");
  return q;
}

/// Highest-indexed variable occurring in p, or -1 for constants.
template <class F>
int last_variable(const Polynomial<F>& p) {
  for (int v = p.ring()->nvars() - 1; v >= 0; --v)
    if (p.degree_in(v) > 0) return v;
  return -1;
}

/// Coefficients of p as a polynomial in variable v; entry e multiplies v^e.
template <class F>
std::vector<Polynomial<F>> coefficients_in(const Polynomial<F>& p, int v) {
  std::vector<std::vector<Term<F>>> buckets(static_cast<std::size_t>(p.degree_in(v)) + 1);
  for (const auto& t : p.terms()) {
    int e = t.mono.exponent(v);
    buckets[static_cast<std::size_t>(e)].push_back({t.mono / Monomial::variable(v, e), t.coef});
  }
  std::vector<Polynomial<F>> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(Polynomial<F>::from_terms(p.ring(), std::move(b)));
  return out;
}

template <class F>
Polynomial<F> lead_in(const Polynomial<F>& p, int v) {
  return coefficients_in(p, v).back();
}

template <class F>
Polynomial<F> gcd(const Polynomial<F>& a, const Polynomial<F>& b);

/// gcd of the coefficients of p viewed in variable v.
template <class F>
Polynomial<F> content_in(const Polynomial<F>& p, int v) {
  Polynomial<F> c(p.ring());
  for (const auto& coef : coefficients_in(p, v)) {
    if (coef.is_zero()) continue;
    c = c.is_zero() ? coef.monic() : gcd(c, coef);
    if (c.is_constant()) break;
  }
  return c;
}

/// Pseudo-remainder in v: lc(b)^(deg a - deg b + 1) * a = q * b + r.
template <class F>
Polynomial<F> pseudo_remainder(const Polynomial<F>& a, const Polynomial<F>& b, int v) {
  int db = b.degree_in(v);
  Polynomial<F> lcb = lead_in(b, v);
  Polynomial<F> r = a;
  int e = a.degree_in(v) - db + 1;
  while (!r.is_zero() && r.degree_in(v) >= db) {
    int dr = r.degree_in(v);
    Polynomial<F> lcr = lead_in(r, v);
    Polynomial<F> shift = Polynomial<F>::monomial(r.ring(), Monomial::variable(v, dr - db), r.field().one());
    r = lcb * r - lcr * shift * b;
    --e;
  }
  for (; e > 0; --e) r = lcb * r;
  return r;
}

template <class F>
Polynomial<F> gcd(const Polynomial<F>& a, const Polynomial<F>& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  int v = std::max(last_variable(a), last_variable(b));
  auto one = Polynomial<F>::constant(a.ring(), a.field().one());
  if (v < 0) return one;
  if (a.degree_in(v) == 0) return gcd(a, content_in(b, v));
  if (b.degree_in(v) == 0) return gcd(content_in(a, v), b);

  Polynomial<F> ca = content_in(a, v), cb = content_in(b, v);
  Polynomial<F> c = gcd(ca, cb);
  Polynomial<F> p = exact_quotient(a, ca), q = exact_quotient(b, cb);
  if (p.degree_in(v) < q.degree_in(v)) std::swap(p, q);

  // Subresultant PRS.
  Polynomial<F> g = one, h = one;
  while (true) {
    int delta = p.degree_in(v) - q.degree_in(v);
    Polynomial<F> r = pseudo_remainder(p, q, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) {
      q = one;
      break;
    }
    p = q;
    q = exact_quotient(r, g * h.pow(static_cast<unsigned>(delta)));
    g = lead_in(p, v);
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = exact_quotient(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
  }
  Polynomial<F> prim = q.is_constant() ? one : exact_quotient(q, content_in(q, v));
  return (c * prim).monic();
}

}  // namespace gcd_detail

template <class F>
struct ContentDecomposition {
  Polynomial<F> content;
  std::vector<Polynomial<F>> primitive_parts;
};

/// Monic gcd of two polynomials over Q.
template <class F>
Polynomial<F> polynomial_gcd(const Polynomial<F>& a, const Polynomial<F>& b) {
  if constexpr (F::kModular) {
    throw Unsupported("polynomial gcd is only available over Q");
  } else {
    require_same_ring(a.ring(), b.ring());
    return gcd_detail::gcd(a, b);
  }
}

/// Common factor of a list of polynomials and the cofactors.
template <class F>
ContentDecomposition<F> content_gcd(const std::vector<Polynomial<F>>& components) {
  if constexpr (F::kModular) {
    throw Unsupported("content_gcd is only available over Q");
  } else {
    if (components.empty()) throw DomainError("content of an empty list");
    for (const auto& c : components) require_same_ring(c.ring(), components.front().ring());
    Polynomial<F> g(components.front().ring());
    for (const auto& c : components) {
      if (c.is_zero()) continue;
      g = g.is_zero() ? c.monic() : gcd_detail::gcd(g, c);
    }
    if (g.is_zero()) throw DomainError("content of the zero vector");
    ContentDecomposition<F> out{g, {}};
    for (const auto& c : components) out.primitive_parts.push_back(gcd_detail::exact_quotient(c, g));
    return out;
  }
}

}  // namespace bettiforge
