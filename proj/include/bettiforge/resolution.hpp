#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bettiforge/groebner.hpp"

namespace bettiforge {

/// S(-a_0) + ... + S(-a_{r-1}); `shifts` holds the twists a_i.
struct GradedFreeModule {
  std::vector<int> shifts;
  std::size_t rank() const { return shifts.size(); }
  bool operator==(const GradedFreeModule&) const = default;
};

/// Matrix of a graded map stored by columns; column j lists its nonzero
/// entries (row, polynomial) with rows ascending.
template <class F>
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<std::uint32_t, Polynomial<F>>>> columns;

  Polynomial<F> entry(std::size_t i, std::size_t j, const RingPtr<F>& ring) const {
    for (const auto& [r, p] : columns.at(j))
      if (r == i) return p;
    return Polynomial<F>(ring);
  }
};

/// F_0 <- F_1 <- ... <- F_L with maps[k-1] : F_k -> F_{k-1}.
template <class F>
struct GradedResolution {
  RingPtr<F> ring;
  std::vector<GradedFreeModule> modules;
  std::vector<SparseMatrix<F>> maps;

  std::size_t length() const { return modules.empty() ? 0 : modules.size() - 1; }
  std::vector<std::size_t> ranks() const {
    std::vector<std::size_t> r;
    for (const auto& m : modules) r.push_back(m.rank());
    return r;
  }
};

/// Graded Betti data in the normalization relative to 1 - d:
/// F_2 = sum S(1-d-d_i), F_3 = sum S(1-d-c_j), F_4 = sum S(1-d-b_k).
struct BettiData {
  int degree = 0;
  std::vector<int> d, c, b;
  /// Relations of degree d-1 added because F_1 had rank < 4 (dependent or
  /// vanishing partials).  Such inputs are never reduced surfaces.
  int padded = 0;
  int nvars = 4;

  int p() const { return static_cast<int>(d.size()); }
  int q() const { return static_cast<int>(c.size()); }
  int r() const { return static_cast<int>(b.size()); }
  bool operator==(const BettiData& o) const {
    return degree == o.degree && d == o.d && c == o.c && b == o.b;
  }
};

struct ResolutionStats {
  std::vector<std::size_t> frame_ranks;
};

/// Resolution of S/(gens) from iterated Schreyer syzygies (not minimal).
/// Zero generators are dropped; gens must be homogeneous of one degree.
template <class F>
GradedResolution<F> free_resolution(const std::vector<Polynomial<F>>& gens, ResolutionStats* stats = nullptr);

/// Splits off every unit entry (lowest degree first).
template <class F>
GradedResolution<F> minimalize(const GradedResolution<F>& res);

/// Minimal resolution of S/(gens).
template <class F>
GradedResolution<F> minimal_resolution(const std::vector<Polynomial<F>>& gens, ResolutionStats* stats = nullptr) {
  return minimalize(free_resolution(gens, stats));
}

/// Betti data of a minimal resolution of S/J_f, deg f = d, in n variables.
template <class F>
BettiData extract_betti(const GradedResolution<F>& res, int d);

/// Shift multisets rebuilt from Betti data, F_0 first.
std::vector<GradedFreeModule> modules_from_betti(const BettiData& betti);

/// Checks that consecutive maps compose to zero.
template <class F>
bool composes_to_zero(const GradedResolution<F>& res);

/// Checks that entry (i, j) of every map is zero or homogeneous of degree
/// shift(source j) - shift(target i).
template <class F>
bool is_graded(const GradedResolution<F>& res);

/// No map has an entry with nonzero constant term.
template <class F>
bool is_minimal(const GradedResolution<F>& res);

/// sum_k (-1)^k sum_a dim S_{deg - a} over the modules of the resolution.
long long hilbert_function(const std::vector<GradedFreeModule>& modules, int nvars, int deg);

std::string format_modules(const std::vector<GradedFreeModule>& modules);

}  // namespace bettiforge
