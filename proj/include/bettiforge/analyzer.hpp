#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bettiforge/hilbert.hpp"
#include "bettiforge/resolution.hpp"
#include "bettiforge/syzygy.hpp"

namespace bettiforge {

struct IdentityChecks {
  int p_plus_r = 0;
  int q_plus_3 = 0;
  bool count_check = false;  // p + r = q + 3
  long long sum = 0;         // sum d_i - sum c_j + sum b_k
  bool sum_check = false;    // sum = d - 1
  long long q2 = 0;
  bool square_check = false;  // q2 = 0
  long long q3 = 0;
  std::optional<long long> cube_tau;  // ((d-1)^3 - q3) / 6 when square_check
};

/// Window on tau in terms of d and the minimal syzygy degree d1.
struct TauWindow {
  long long lower = 0, upper = 0, tau = 0;
  bool satisfied = false;
};

/// Window on q3 in the form 6 d1 (d - d1 - 1)(d - 1) <= q3 <= 6 d1 (d - 1)^2.
struct CubeWindowPrinted {
  long long lower = 0, middle = 0, upper = 0;
  bool satisfied = false;
};

/// Window on q3 obtained from the tau window through q3 = (d-1)^3 - 6 tau.
struct CubeWindowDerived {
  long long lower = 0, upper = 0;
  bool satisfied = false;
};

struct TypeInvariants {
  int t = 0;                // d1 + d2 + d3 + 1 - d
  std::vector<int> alpha;   // alpha_j = c_j - d_{j+3}
  std::vector<int> beta;    // beta_k = b_k - c_{p-3+k}
  long long alpha_minus_beta = 0;
  bool consistent = false;  // t = sum alpha - sum beta
};

/// Everything that follows from the Betti data alone.  Shared by the
/// resolution-backed analysis and the arithmetic-only verifier.
struct BettiArithmetic {
  BettiData betti;
  IdentityChecks identities;
  HilbertPolynomial hilbert;
  std::optional<TauWindow> tau_window;
  std::optional<CubeWindowPrinted> cube_printed;
  std::optional<CubeWindowDerived> cube_derived;
  bool cube_discrepancy = false;  // the two windows disagree on q3
  /// Stronger bound for suspensions of curves, present when 2 d1 >= d.
  std::optional<long long> suspension_bound;
  std::optional<TypeInvariants> type;
  std::array<mpz_class, 4> coefficients;  // of 6 dim M(f)_{s+d-1}, s^3 first
  /// p >= 3 and every entry >= 1.
  bool shape_ok = true;
};

BettiArithmetic betti_arithmetic(const BettiData& betti);

/// 2d - floor(d/2) - 3, the lower bound on mdr(f) for nodal surfaces, d >= 5.
int nodal_mdr_bound(int d);

struct MdrResult {
  std::optional<int> mdr;  // empty: ER(f)_k = 0 for every k <= bound
  int bound = 0;
  std::vector<long long> ar_dims;  // dim AR(f)_k, k = 0..last scanned
  std::vector<long long> kr_dims;  // dim KR(f)_k
};

struct AnalyzeOptions {
  bool assume_nodal = false;
  bool compute_mdr = true;
};

struct SurfaceReport {
  int degree = 0;
  std::string field;
  bool modular = false;
  BettiArithmetic arithmetic;
  std::vector<GradedFreeModule> modules;
  std::string resolution_text;
  std::vector<std::size_t> frame_ranks;
  std::optional<MdrResult> mdr;
  int generators_of_degree_d_minus_1 = 0;
  std::optional<int> nodal_bound;
  double seconds = 0;
};

template <class F>
struct SurfaceAnalysis {
  SurfaceReport report;
  std::vector<Polynomial<F>> partials;
  GradedResolution<F> resolution;
};

/// Full pipeline.  Identity failure raises NonReducedInput with the Betti
/// data attached.
template <class F>
SurfaceAnalysis<F> analyze_surface_full(const Polynomial<F>& f, const AnalyzeOptions& opts = {});

template <class F>
SurfaceReport analyze_surface(const Polynomial<F>& f, const AnalyzeOptions& opts = {}) {
  return analyze_surface_full(f, opts).report;
}

/// mdr(f) from dim AR(f)_k - dim KR(f)_k.  AR dimensions come from the
/// Hilbert function of the resolution; KR dimensions from a truncated
/// Groebner basis of the six Koszul relations.
template <class F>
MdrResult compute_mdr(const Polynomial<F>& f, const BettiData& betti);

/// Minimal generators of AR(f) as quadruples, degree ascending.  Read off
/// the second map of the minimal resolution when it is expressed in the
/// partials, else recomputed from syzygy generators.
template <class F>
std::vector<SyzygyQuadruple<F>> minimal_jacobian_syzygies(const std::vector<Polynomial<F>>& partials,
                                                         const GradedResolution<F>& minimal);

template <class F>
struct ArGenerators {
  std::vector<int> degrees;
  std::vector<SyzygyQuadruple<F>> generators;
  MdrResult mdr;
};

template <class F>
ArGenerators<F> ar_generators_and_mdr(const Polynomial<F>& f);

template <class F>
struct DeterminantTest {
  Polynomial<F> g;
  bool independent = false;
  bool divisible_by_f = false;
  std::optional<Polynomial<F>> quotient;
  int degree_sum = 0;                  // 1 + deg rho1 + deg rho2 + deg rho3
  bool t_lower_bound_applies = false;  // independent, hence degree_sum >= d
};

/// det of the matrix with rows (x, y, z, t), rho1, rho2, rho3.
template <class F>
DeterminantTest<F> syzygy_determinant_test(const Polynomial<F>& f, const SyzygyQuadruple<F>& r1,
                                           const SyzygyQuadruple<F>& r2, const SyzygyQuadruple<F>& r3);

/// f'(x, y, z) + t^d in four variables.
template <class F>
Polynomial<F> suspension(const Polynomial<F>& fprime, int d);

struct CurveReport {
  int degree = 0;
  std::string field;
  bool modular = false;
  BettiData betti;  // d holds d'_i, c holds c'_j
  std::vector<GradedFreeModule> modules;
  std::string resolution_text;
  bool count_check = false;  // p' = q' + 2
  bool sum_check = false;    // sum d'_i - sum c'_j = d - 1
  std::vector<int> epsilon;  // c'_j - d'_{j+2}
  bool epsilon_positive = true;
  int type_t = 0;
  std::string classification;  // free, plus-one-generated, other
  std::optional<bool> t_equals_epsilon_sum;  // non-free curves
  long long tau = 0;
  std::optional<std::pair<int, int>> exponents;  // free curves
  std::optional<bool> free_tau_check;
};

template <class F>
CurveReport analyze_curve(const Polynomial<F>& fprime);

}  // namespace bettiforge
