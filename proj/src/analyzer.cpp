#include "bettiforge/analyzer.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>

#include "bettiforge/groebner.hpp"

namespace bettiforge {

namespace {

long long cube(long long v) { return v * v * v; }

std::optional<TypeInvariants> type_invariants(const BettiData& b) {
  int p = b.p(), q = b.q(), r = b.r();
  if (p < 3 || q < p - 3 || p - 3 + r > q) return std::nullopt;
  TypeInvariants ti;
  ti.t = b.d[0] + b.d[1] + b.d[2] + 1 - b.degree;
  for (int j = 0; j < p - 3; ++j) ti.alpha.push_back(b.c[static_cast<std::size_t>(j)] - b.d[static_cast<std::size_t>(j + 3)]);
  for (int k = 0; k < r; ++k) ti.beta.push_back(b.b[static_cast<std::size_t>(k)] - b.c[static_cast<std::size_t>(p - 3 + k)]);
  ti.alpha_minus_beta = std::accumulate(ti.alpha.begin(), ti.alpha.end(), 0LL) -
                        std::accumulate(ti.beta.begin(), ti.beta.end(), 0LL);
  ti.consistent = ti.alpha_minus_beta == ti.t;
  return ti;
}

// All monomials of degree k in n variables.
void for_each_monomial(int n, int k, const std::function<void(Monomial)>& fn) {
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      e[static_cast<std::size_t>(i)] = left;
      fn(Monomial::from_exponents(e));
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[static_cast<std::size_t>(i)] = a;
      rec(i + 1, left - a);
    }
  };
  rec(0, k);
}

template <class F>
std::string field_name(const RingPtr<F>& ring) {
  return ring->field.name();
}

}  // namespace

BettiArithmetic betti_arithmetic(const BettiData& betti) {
  BettiArithmetic a;
  a.betti = betti;
  long long d = betti.degree, e = d - 1;
  auto sums = betti_sums(betti);
  auto& id = a.identities;
  id.p_plus_r = betti.p() + betti.r();
  id.q_plus_3 = betti.q() + 3;
  id.count_check = id.p_plus_r == id.q_plus_3;
  id.sum = sums.linear;
  id.sum_check = sums.linear == e;
  id.q2 = sums.q2;
  id.square_check = sums.q2 == 0;
  id.q3 = sums.q3;
  if (id.square_check && (cube(e) - sums.q3) % 6 == 0) id.cube_tau = (cube(e) - sums.q3) / 6;

  a.hilbert = hilbert_data(betti);
  a.coefficients = dimension_coefficients(betti);
  a.shape_ok = betti.p() >= 3;
  for (const auto* seq : {&betti.d, &betti.c, &betti.b})
    for (int v : *seq) a.shape_ok = a.shape_ok && v >= 1;
  a.type = type_invariants(betti);

  bool isolated = a.hilbert.sigma == SigmaDimension::kEmpty || a.hilbert.sigma == SigmaDimension::kZero;
  if (isolated && betti.p() >= 1) {
    long long d1 = betti.d[0];
    TauWindow w;
    w.lower = cube(e) - d1 * e * e;
    w.upper = cube(e) - d1 * (d - d1 - 1) * e;
    w.tau = *a.hilbert.tau;
    w.satisfied = w.lower <= w.tau && w.tau <= w.upper;
    a.tau_window = w;

    CubeWindowPrinted cp;
    cp.lower = 6 * d1 * (d - d1 - 1) * e;
    cp.middle = sums.q3;
    cp.upper = 6 * d1 * e * e;
    cp.satisfied = cp.lower <= cp.middle && cp.middle <= cp.upper;
    a.cube_printed = cp;

    CubeWindowDerived cd;
    cd.lower = cp.lower - 5 * cube(e);
    cd.upper = cp.upper - 5 * cube(e);
    cd.satisfied = cd.lower <= sums.q3 && sums.q3 <= cd.upper;
    a.cube_derived = cd;
    a.cube_discrepancy = cp.satisfied != cd.satisfied;

    if (2 * d1 >= d) {
      long long m = 2 * d1 + 2 - d;
      a.suspension_bound = w.upper - m * (m - 1) / 2 * e;
    }
  }
  return a;
}

int nodal_mdr_bound(int d) {
  if (d < 5) throw DomainError("the nodal mdr bound needs d >= 5");
  return 2 * d - d / 2 - 3;
}

template <class F>
MdrResult compute_mdr(const Polynomial<F>& f, const BettiData& betti) {
  const auto& ring = f.ring();
  int n = ring->nvars();
  int d = f.degree();
  MdrResult res;
  int max_d = betti.d.empty() ? d - 1 : *std::max_element(betti.d.begin(), betti.d.end());
  // AR(f) is generated in degrees d_i, so ER(f) vanishes as soon as it
  // vanishes up to max d_i.  The extra range only matters for display.
  res.bound = std::max(max_d, 3 * (d - 1));

  auto module = make_free_module(ring, ModuleOrder::term_over_position(std::vector<int>(static_cast<std::size_t>(n), 0)));
  std::vector<ModVec<F>> koszul;
  auto partials = jacobian_generators(f);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<Polynomial<F>> comps(static_cast<std::size_t>(n), Polynomial<F>(ring));
      comps[static_cast<std::size_t>(i)] = partials[static_cast<std::size_t>(j)];
      comps[static_cast<std::size_t>(j)] = -partials[static_cast<std::size_t>(i)];
      koszul.push_back(ModVec<F>::from_components(module, comps));
    }

  GroebnerBasis<F> gb;
  auto kr_dim = [&](int k) {
    std::vector<std::vector<Monomial>> leads(static_cast<std::size_t>(n));
    for (const auto& g : gb.generators) leads[g.lead().comp].push_back(g.lead().mono);
    long long count = 0;
    for (int c = 0; c < n; ++c)
      for_each_monomial(n, k, [&](Monomial m) {
        for (Monomial l : leads[static_cast<std::size_t>(c)])
          if (l.divides(m)) {
            ++count;
            return;
          }
      });
    return count;
  };
  int gb_bound = -1;
  for (int k = 0; k <= res.bound; ++k) {
    // The Koszul relations live in degree d - 1.
    if (k >= d - 1 && k > gb_bound) {
      gb_bound = k <= max_d ? max_d : res.bound;
      gb = groebner_basis(koszul, {gb_bound});
    }
    long long ar = n * graded_dim(0, k, n) - (graded_dim(0, k + d - 1, n) - hilbert_function_from_resolution(betti, k + d - 1));
    long long kr = k < d - 1 ? 0 : kr_dim(k);
    res.ar_dims.push_back(ar);
    res.kr_dims.push_back(kr);
    if (ar > kr) {
      res.mdr = k;
      break;
    }
  }
  return res;
}

template <class F>
std::vector<SyzygyQuadruple<F>> minimal_jacobian_syzygies(const std::vector<Polynomial<F>>& partials,
                                                         const GradedResolution<F>& minimal) {
  if (partials.size() != 4) throw DomainError("Jacobian syzygies need four partials");
  const auto& ring = partials.front().ring();
  std::vector<SyzygyQuadruple<F>> out;
  auto zero_quad = [&] {
    SyzygyQuadruple<F> q;
    for (auto& c : q.comps) c = Polynomial<F>(ring);
    return q;
  };
  std::vector<int> zero_idx;
  for (int i = 0; i < 4; ++i)
    if (partials[static_cast<std::size_t>(i)].is_zero()) zero_idx.push_back(i);
  for (int i : zero_idx) {
    auto q = zero_quad();
    q.comps[static_cast<std::size_t>(i)] = Polynomial<F>::constant(ring, 1L);
    out.push_back(q);
  }

  // Column j of the first map must be one of the nonzero partials.
  std::vector<int> where;
  bool matched = minimal.maps.size() >= 1;
  if (matched) {
    std::vector<bool> used(4, false);
    const auto& m1 = minimal.maps[0];
    for (std::size_t j = 0; j < m1.cols && matched; ++j) {
      auto p = m1.entry(0, j, ring);
      int hit = -1;
      for (int i = 0; i < 4 && hit < 0; ++i)
        if (!used[static_cast<std::size_t>(i)] && !partials[static_cast<std::size_t>(i)].is_zero() &&
            partials[static_cast<std::size_t>(i)] == p)
          hit = i;
      if (hit < 0) matched = false;
      else used[static_cast<std::size_t>(hit)] = true, where.push_back(hit);
    }
    matched = matched && where.size() + zero_idx.size() == 4;
  }
  if (matched) {
    if (minimal.maps.size() >= 2)
      for (const auto& col : minimal.maps[1].columns) {
        auto q = zero_quad();
        for (const auto& [r, p] : col) q.comps[static_cast<std::size_t>(where[r])] = p;
        out.push_back(q);
      }
  } else {
    std::vector<Polynomial<F>> nz;
    std::vector<int> idx;
    for (int i = 0; i < 4; ++i)
      if (!partials[static_cast<std::size_t>(i)].is_zero()) nz.push_back(partials[static_cast<std::size_t>(i)]), idx.push_back(i);
    for (const auto& v : minimal_generators(syzygy_generators(nz))) {
      auto q = zero_quad();
      for (std::size_t c = 0; c < nz.size(); ++c) q.comps[static_cast<std::size_t>(idx[c])] = v.component(static_cast<std::uint32_t>(c));
      out.push_back(q);
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.degree() < b.degree(); });
  return out;
}

template <class F>
SurfaceAnalysis<F> analyze_surface_full(const Polynomial<F>& f, const AnalyzeOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  if (f.ring()->nvars() != 4) throw DomainError("surface analysis needs four variables");
  SurfaceAnalysis<F> out;
  out.partials = jacobian_generators(f);
  int d = f.degree();
  ResolutionStats stats;
  out.resolution = minimal_resolution(out.partials, &stats);
  auto& rep = out.report;
  rep.degree = d;
  rep.field = field_name(f.ring());
  rep.modular = F::kModular;
  rep.modules = out.resolution.modules;
  rep.resolution_text = format_modules(rep.modules);
  rep.frame_ranks = stats.frame_ranks;
  auto betti = extract_betti(out.resolution, d);
  rep.arithmetic = betti_arithmetic(betti);
  if (rep.arithmetic.hilbert.sigma == SigmaDimension::kTwoOrMore)
    throw NonReducedInput("input not reduced (dim Sigma >= 2)", betti, rep.resolution_text);
  rep.generators_of_degree_d_minus_1 = static_cast<int>(std::count(betti.d.begin(), betti.d.end(), d - 1));
  if (opts.compute_mdr) rep.mdr = compute_mdr(f, betti);
  if (opts.assume_nodal && d >= 5) rep.nodal_bound = nodal_mdr_bound(d);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

template <class F>
ArGenerators<F> ar_generators_and_mdr(const Polynomial<F>& f) {
  auto an = analyze_surface_full(f, {});
  ArGenerators<F> out;
  out.degrees = an.report.arithmetic.betti.d;
  out.generators = minimal_jacobian_syzygies(an.partials, an.resolution);
  out.mdr = *an.report.mdr;
  return out;
}

template <class F>
DeterminantTest<F> syzygy_determinant_test(const Polynomial<F>& f, const SyzygyQuadruple<F>& r1,
                                           const SyzygyQuadruple<F>& r2, const SyzygyQuadruple<F>& r3) {
  const auto& ring = f.ring();
  for (const auto* r : {&r1, &r2, &r3})
    if (!verify_syzygy(f, *r)) throw DomainError("not a Jacobian syzygy of f: " + r->to_string());
  std::array<std::array<Polynomial<F>, 4>, 4> m;
  for (int v = 0; v < 4; ++v) m[0][static_cast<std::size_t>(v)] = Polynomial<F>::variable(ring, v);
  m[1] = r1.comps;
  m[2] = r2.comps;
  m[3] = r3.comps;
  DeterminantTest<F> out;
  out.g = Polynomial<F>(ring);
  std::array<int, 4> perm{0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) inversions += perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)];
    Polynomial<F> prod = Polynomial<F>::constant(ring, inversions % 2 ? -1L : 1L);
    for (int i = 0; i < 4 && !prod.is_zero(); ++i) prod *= m[static_cast<std::size_t>(i)][static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
    out.g += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  out.independent = !out.g.is_zero();
  out.degree_sum = 1 + r1.degree() + r2.degree() + r3.degree();
  if (out.independent) {
    auto [q, r] = divide(out.g, f);
    out.divisible_by_f = r.is_zero();
    if (out.divisible_by_f) out.quotient = q;
    out.t_lower_bound_applies = out.divisible_by_f && out.degree_sum >= f.degree();
  }
  return out;
}

template <class F>
Polynomial<F> suspension(const Polynomial<F>& fprime, int d) {
  const auto& ring = fprime.ring();
  if (ring->nvars() != 3) throw DomainError("suspension needs a polynomial in three variables");
  if (!fprime.is_homogeneous() || fprime.degree() != d) throw DomainError("suspension degree must equal deg f'");
  auto names = ring->vars.names();
  std::string fresh = "t";
  while (ring->vars.index_of(fresh)) fresh += "'";
  names.push_back(fresh);
  auto ext = make_ring(VariableSet(names), ring->field);
  auto t = Polynomial<F>::variable(ext, 3);
  return embed(fprime, ext, {0, 1, 2}) + t.pow(static_cast<unsigned>(d));
}

template <class F>
CurveReport analyze_curve(const Polynomial<F>& fprime) {
  if (fprime.ring()->nvars() != 3) throw DomainError("curve analysis needs three variables");
  auto partials = jacobian_generators(fprime);
  int d = fprime.degree();
  auto res = minimal_resolution(partials);
  CurveReport rep;
  rep.degree = d;
  rep.field = field_name(fprime.ring());
  rep.modular = F::kModular;
  rep.modules = res.modules;
  rep.resolution_text = format_modules(res.modules);
  rep.betti = extract_betti(res, d);
  const auto& b = rep.betti;
  if (!b.b.empty()) throw MalformedResolution("curve resolution longer than three steps");
  rep.count_check = b.p() == b.q() + 2;
  long long sum = std::accumulate(b.d.begin(), b.d.end(), 0LL) - std::accumulate(b.c.begin(), b.c.end(), 0LL);
  rep.sum_check = sum == d - 1;

  int top = d - 1;
  for (const auto* seq : {&b.d, &b.c})
    for (int v : *seq) top = std::max(top, d - 1 + v);
  long long h1 = hilbert_function_from_resolution(b, top + 2), h2 = hilbert_function_from_resolution(b, top + 3);
  if (!rep.count_check || !rep.sum_check || h1 != h2)
    throw NonReducedInput("input not reduced (singular locus of positive dimension)", b, rep.resolution_text);
  rep.tau = h1;

  for (int j = 0; j < b.q(); ++j) {
    int eps = b.c[static_cast<std::size_t>(j)] - b.d[static_cast<std::size_t>(j + 2)];
    rep.epsilon.push_back(eps);
    rep.epsilon_positive = rep.epsilon_positive && eps >= 1;
  }
  rep.type_t = b.p() >= 2 ? b.d[0] + b.d[1] - d + 1 : 0;
  if (b.q() == 0) {
    rep.classification = "free";
    rep.exponents = std::make_pair(b.d[0], b.d[1]);
    long long d1 = b.d[0];
    rep.free_tau_check = rep.tau == (d - 1LL) * (d - 1LL) - d1 * (d - d1 - 1);
  } else {
    rep.classification = rep.type_t == 1 ? "plus-one-generated" : "other";
    rep.t_equals_epsilon_sum = rep.type_t == std::accumulate(rep.epsilon.begin(), rep.epsilon.end(), 0);
  }
  return rep;
}

#define BETTIFORGE_INSTANTIATE(F)                                                                           \
  template MdrResult compute_mdr<F>(const Polynomial<F>&, const BettiData&);                                \
  template std::vector<SyzygyQuadruple<F>> minimal_jacobian_syzygies<F>(const std::vector<Polynomial<F>>&, \
                                                                        const GradedResolution<F>&);        \
  template SurfaceAnalysis<F> analyze_surface_full<F>(const Polynomial<F>&, const AnalyzeOptions&);         \
  template ArGenerators<F> ar_generators_and_mdr<F>(const Polynomial<F>&);                                  \
  template DeterminantTest<F> syzygy_determinant_test<F>(const Polynomial<F>&, const SyzygyQuadruple<F>&,   \
                                                         const SyzygyQuadruple<F>&, const SyzygyQuadruple<F>&); \
  template Polynomial<F> suspension<F>(const Polynomial<F>&, int);                                          \
  template CurveReport analyze_curve<F>(const Polynomial<F>&);

BETTIFORGE_INSTANTIATE(RationalField)
BETTIFORGE_INSTANTIATE(PrimeField)

}  // namespace bettiforge
