#include "bettiforge/resolution.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "bettiforge/detail/buchberger.hpp"

namespace bettiforge {

namespace {

using detail::Accumulator;
using detail::LeadIndex;
using detail::Quotient;

/// Level k of the Schreyer frame: the elements of F_k as vectors in F_{k-1}.
template <class F>
struct Level {
  ModulePtr<F> target;           // F_{k-1}
  std::vector<ModVec<F>> elems;  // images of the basis of F_k
};

/// Stable sort of a level so that, within one lead component, the exponent
/// of variable `var` in the lead monomial is non-increasing.  This keeps
/// variables 0..var out of the next level's lead terms.
template <class F>
void sort_level(std::vector<ModVec<F>>& elems, const ModuleOrder& target_order, int var) {
  std::stable_sort(elems.begin(), elems.end(), [&](const ModVec<F>& a, const ModVec<F>& b) {
    auto ra = target_order.tie_rank(a.lead().comp), rb = target_order.tie_rank(b.lead().comp);
    if (ra != rb) return ra < rb;
    return a.lead().mono.exponent(var) > b.lead().mono.exponent(var);
  });
}

/// Schreyer order on the source of a level.
template <class F>
ModulePtr<F> schreyer_module(const RingPtr<F>& ring, const ModuleOrder& target_order, const std::vector<ModVec<F>>& elems) {
  std::size_t n = elems.size();
  std::vector<int> shifts(n);
  std::vector<Monomial> weights(n);
  std::vector<std::uint32_t> ranks(n);
  std::vector<std::uint32_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& lt = elems[i].lead();
    shifts[i] = elems[i].degree();
    weights[i] = lt.mono * target_order.weight(lt.comp);
    perm[i] = static_cast<std::uint32_t>(i);
  }
  std::stable_sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
    return target_order.tie_rank(elems[a].lead().comp) < target_order.tie_rank(elems[b].lead().comp);
  });
  for (std::size_t r = 0; r < n; ++r) ranks[perm[r]] = static_cast<std::uint32_t>(r);
  return make_free_module(ring, ModuleOrder::schreyer(std::move(shifts), std::move(weights), std::move(ranks)));
}

/// Syzygies of a level that is a Groebner basis of its span, one per
/// minimal pair, as vectors in `source`.
template <class F>
std::vector<ModVec<F>> schreyer_syzygies(const Level<F>& level, const ModulePtr<F>& source, bool koszul_shortcut) {
  const auto& g = level.elems;
  const auto& target = level.target;
  const F& k = target->ring->field;
  LeadIndex<F> index(&g, target->rank(), target->ring->nvars());
  for (std::size_t i = 0; i < g.size(); ++i) index.add(i);
  Accumulator<F> acc(target);

  std::vector<std::vector<std::uint32_t>> by_comp(target->rank());
  for (std::size_t i = 0; i < g.size(); ++i) by_comp[g[i].lead().comp].push_back(static_cast<std::uint32_t>(i));

  std::vector<ModVec<F>> out;
  for (const auto& members : by_comp) {
    for (std::size_t a = 0; a < members.size(); ++a) {
      std::uint32_t i = members[a];
      const auto& li = g[i].lead();
      // Minimal generators of (lcm(m_i, m_j) / m_i : j > i).
      std::vector<std::pair<Monomial, std::uint32_t>> cand;
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        std::uint32_t j = members[b];
        cand.push_back({Monomial::lcm(li.mono, g[j].lead().mono) / li.mono, j});
      }
      std::vector<std::pair<Monomial, std::uint32_t>> minimal;
      for (std::size_t x = 0; x < cand.size(); ++x) {
        bool keep = true;
        for (std::size_t y = 0; y < cand.size() && keep; ++y) {
          if (y == x || !cand[y].first.divides(cand[x].first)) continue;
          if (cand[y].first != cand[x].first || y < x) keep = false;
        }
        if (keep) minimal.push_back(cand[x]);
      }
      for (const auto& [qi, j] : minimal) {
        const auto& lj = g[j].lead();
        Monomial l = qi * li.mono;
        Monomial qj = l / lj.mono;
        if (koszul_shortcut && Monomial::coprime(li.mono, lj.mono)) {
          // g_j e_i - g_i e_j, scaled to a monic lead.
          std::vector<ModTerm<F>> terms;
          auto s = k.inv(lj.coef);
          for (const auto& t : g[j].terms()) terms.push_back({t.mono, i, k.mul(t.coef, s)});
          for (const auto& t : g[i].terms()) terms.push_back({t.mono, j, k.neg(k.mul(t.coef, s))});
          out.push_back(ModVec<F>::from_terms(source, std::move(terms)));
          continue;
        }
        auto ci = k.inv(li.coef), cj = k.neg(k.inv(lj.coef));
        acc.clear();
        acc.add_multiple(g[i], qi, ci, 1);
        acc.add_multiple(g[j], qj, cj, 1);
        std::vector<Quotient<F>> quots;
        auto rem = detail::reduce_accumulated(acc, index, target, &quots);
        if (!rem.is_zero()) throw Error("internal: Schreyer S-vector did not reduce to zero");
        std::vector<ModTerm<F>> terms;
        terms.reserve(quots.size() + 2);
        terms.push_back({qi, i, ci});
        terms.push_back({qj, j, cj});
        for (const auto& q : quots) terms.push_back({q.mono, q.index, k.neg(q.coef)});
        out.push_back(ModVec<F>::from_terms(source, std::move(terms)).monic());
      }
    }
  }
  return out;
}

template <class F>
SparseMatrix<F> to_matrix(const std::vector<ModVec<F>>& elems, std::size_t rows) {
  SparseMatrix<F> m;
  m.rows = rows;
  m.cols = elems.size();
  m.columns.resize(elems.size());
  for (std::size_t j = 0; j < elems.size(); ++j) {
    std::map<std::uint32_t, std::vector<Term<F>>> by_row;
    for (const auto& t : elems[j].terms()) by_row[t.comp].push_back({t.mono, t.coef});
    const auto& ring = elems[j].module()->ring;
    for (auto& [r, terms] : by_row) m.columns[j].push_back({r, Polynomial<F>::from_sorted_terms(ring, std::move(terms))});
  }
  return m;
}

}  // namespace

template <class F>
GradedResolution<F> free_resolution(const std::vector<Polynomial<F>>& gens, ResolutionStats* stats) {
  if (gens.empty()) throw DomainError("free_resolution needs generators");
  const auto& ring = gens.front().ring();
  int deg = -1;
  std::vector<ModVec<F>> nonzero;
  auto f0 = ideal_module(ring);
  for (const auto& g : gens) {
    require_same_ring(g.ring(), ring);
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw DomainError("generators must be homogeneous");
    if (deg >= 0 && g.degree() != deg) throw DomainError("generators must share one degree");
    deg = g.degree();
    nonzero.push_back(as_vector(f0, g));
  }

  GradedResolution<F> res;
  res.ring = ring;
  res.modules.push_back({{0}});
  if (nonzero.empty()) return res;

  auto raw = detail::raw_groebner(f0, std::move(nonzero));
  Level<F> level{f0, std::move(raw.elements)};
  int nvars = ring->nvars();
  for (int k = 1;; ++k) {
    sort_level(level.elems, level.target->order, std::min(k - 1, nvars - 1));
    auto source = schreyer_module(ring, level.target->order, level.elems);
    res.modules.push_back({source->order.shifts()});
    res.maps.push_back(to_matrix(level.elems, level.target->rank()));
    if (stats) stats->frame_ranks.push_back(level.elems.size());
    auto next = schreyer_syzygies(level, source, k == 1);
    if (next.empty()) break;
    if (k >= nvars) throw Error("internal: Schreyer frame longer than the number of variables");
    level = Level<F>{source, std::move(next)};
  }
  return res;
}

namespace {

/// Mutable chain complex used during minimalization.
template <class F>
class Minimalizer {
 public:
  using Poly = Polynomial<F>;
  using Column = std::map<std::uint32_t, Poly>;

  explicit Minimalizer(const GradedResolution<F>& res) : ring_(res.ring), modules_(res.modules) {
    std::size_t L = res.maps.size();
    cols_.resize(L + 1);
    row_index_.resize(L + 1);
    alive_.resize(modules_.size());
    for (std::size_t k = 0; k < modules_.size(); ++k) alive_[k].assign(modules_[k].rank(), true);
    for (std::size_t k = 1; k <= L; ++k) {
      const auto& m = res.maps[k - 1];
      cols_[k].resize(m.cols);
      row_index_[k].resize(m.rows);
      for (std::size_t j = 0; j < m.cols; ++j)
        for (const auto& [r, p] : m.columns[j]) {
          cols_[k][j][r] = p;
          row_index_[k][r].insert(static_cast<std::uint32_t>(j));
        }
    }
  }

  GradedResolution<F> run() {
    std::size_t L = cols_.size() - 1;
    // Candidates: columns that may hold a unit entry, lowest degree first.
    std::set<std::tuple<int, std::size_t, std::uint32_t>> queue;
    for (std::size_t k = 1; k <= L; ++k)
      for (std::uint32_t j = 0; j < cols_[k].size(); ++j)
        if (unit_row(k, j) >= 0) queue.insert({modules_[k].shifts[j], k, j});
    while (!queue.empty()) {
      auto [deg, k, v] = *queue.begin();
      queue.erase(queue.begin());
      if (!alive_[k][v]) continue;
      long u = unit_row(k, v);
      if (u < 0) continue;
      for (auto w : pivot(k, v, static_cast<std::uint32_t>(u)))
        if (alive_[k][w] && unit_row(k, w) >= 0) queue.insert({modules_[k].shifts[w], k, w});
    }
    return collect();
  }

 private:
  /// Largest row index holding a nonzero constant in column j of map k:
  /// later rows of F_1 are Buchberger additions rather than inputs.
  long unit_row(std::size_t k, std::uint32_t j) const {
    long best = -1;
    for (const auto& [r, p] : cols_[k][j])
      if (p.is_constant() && !p.is_zero()) best = static_cast<long>(r);
    return best;
  }

  void set_entry(std::size_t k, std::uint32_t row, std::uint32_t col, Poly p) {
    auto& column = cols_[k][col];
    if (p.is_zero()) {
      if (column.erase(row)) row_index_[k][row].erase(col);
    } else {
      column[row] = std::move(p);
      row_index_[k][row].insert(col);
    }
  }

  void drop_column(std::size_t k, std::uint32_t col) {
    for (const auto& [r, p] : cols_[k][col]) row_index_[k][r].erase(col);
    cols_[k][col].clear();
  }

  void drop_row(std::size_t k, std::uint32_t row) {
    for (auto c : row_index_[k][row]) cols_[k][c].erase(row);
    row_index_[k][row].clear();
  }

  /// Splits off S e_v -> S e_u of map k; returns columns of map k touched.
  std::vector<std::uint32_t> pivot(std::size_t k, std::uint32_t v, std::uint32_t u) {
    const F& fld = ring_->field;
    Column pcol = cols_[k][v];
    auto c_inv = fld.inv(pcol.at(u).constant_coef());
    std::vector<std::uint32_t> others(row_index_[k][u].begin(), row_index_[k][u].end());
    std::vector<std::uint32_t> touched;
    for (auto w : others) {
      if (w == v) continue;
      Poly factor = cols_[k][w].at(u).scaled(c_inv);
      for (const auto& [r, p] : pcol) {
        auto it = cols_[k][w].find(r);
        Poly cur = it == cols_[k][w].end() ? Poly(ring_) : it->second;
        set_entry(k, r, w, cur - factor * p);
      }
      touched.push_back(w);
    }
    drop_column(k, v);
    drop_row(k, u);
    alive_[k][v] = false;
    alive_[k - 1][u] = false;
    if (k >= 2) drop_column(k - 1, u);
    if (k + 1 < cols_.size()) drop_row(k + 1, v);
    return touched;
  }

  GradedResolution<F> collect() const {
    std::size_t nmod = modules_.size();
    // New position of each surviving basis element, shifts ascending (stable).
    std::vector<std::vector<long>> pos(nmod);
    GradedResolution<F> out;
    out.ring = ring_;
    for (std::size_t k = 0; k < nmod; ++k) {
      std::vector<std::uint32_t> keep;
      for (std::uint32_t i = 0; i < alive_[k].size(); ++i)
        if (alive_[k][i]) keep.push_back(i);
      std::stable_sort(keep.begin(), keep.end(), [&](std::uint32_t a, std::uint32_t b) {
        return modules_[k].shifts[a] < modules_[k].shifts[b];
      });
      pos[k].assign(alive_[k].size(), -1);
      GradedFreeModule m;
      for (std::size_t n = 0; n < keep.size(); ++n) {
        pos[k][keep[n]] = static_cast<long>(n);
        m.shifts.push_back(modules_[k].shifts[keep[n]]);
      }
      out.modules.push_back(std::move(m));
    }
    while (out.modules.size() > 1 && out.modules.back().rank() == 0) out.modules.pop_back();
    for (std::size_t k = 1; k < out.modules.size(); ++k) {
      SparseMatrix<F> m;
      m.rows = out.modules[k - 1].rank();
      m.cols = out.modules[k].rank();
      m.columns.resize(m.cols);
      for (std::uint32_t j = 0; j < alive_[k].size(); ++j) {
        if (!alive_[k][j]) continue;
        auto& col = m.columns[static_cast<std::size_t>(pos[k][j])];
        for (const auto& [r, p] : cols_[k][j]) col.push_back({static_cast<std::uint32_t>(pos[k - 1][r]), p});
        std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      }
      out.maps.push_back(std::move(m));
    }
    return out;
  }

  RingPtr<F> ring_;
  std::vector<GradedFreeModule> modules_;
  std::vector<std::vector<Column>> cols_;                         // cols_[k][j], k >= 1
  std::vector<std::vector<std::set<std::uint32_t>>> row_index_;  // row_index_[k][row]
  std::vector<std::vector<bool>> alive_;
};

}  // namespace

template <class F>
GradedResolution<F> minimalize(const GradedResolution<F>& res) {
  return Minimalizer<F>(res).run();
}

template <class F>
BettiData extract_betti(const GradedResolution<F>& res, int d) {
  if (res.modules.empty() || res.modules[0].shifts != std::vector<int>{0})
    throw MalformedResolution("resolution must start at S");
  int n = res.ring->nvars();
  if (static_cast<int>(res.length()) > n) throw MalformedResolution("resolution longer than the number of variables");
  BettiData b;
  b.degree = d;
  b.nvars = n;
  std::size_t rank1 = res.modules.size() > 1 ? res.modules[1].rank() : 0;
  if (static_cast<int>(rank1) > n) throw MalformedResolution("first syzygy module has rank above the number of variables");
  if (res.modules.size() > 1)
    for (int s : res.modules[1].shifts)
      if (s != d - 1) throw MalformedResolution("first module is not S^n(1-d)");
  b.padded = n - static_cast<int>(rank1);
  std::vector<std::vector<int>*> seqs{&b.d, &b.c, &b.b};
  b.d.assign(static_cast<std::size_t>(b.padded), 0);
  for (std::size_t k = 2; k < res.modules.size(); ++k) {
    if (k - 2 >= seqs.size()) throw MalformedResolution("resolution too long for Betti extraction");
    for (int s : res.modules[k].shifts) seqs[k - 2]->push_back(s - (d - 1));
  }
  for (auto* s : seqs) std::sort(s->begin(), s->end());
  return b;
}

std::vector<GradedFreeModule> modules_from_betti(const BettiData& betti) {
  int base = betti.degree - 1;
  std::vector<GradedFreeModule> out{{{0}}, {std::vector<int>(static_cast<std::size_t>(betti.nvars), base)}};
  for (const auto* seq : {&betti.d, &betti.c, &betti.b}) {
    if (seq->empty()) break;
    GradedFreeModule m;
    for (int v : *seq) m.shifts.push_back(base + v);
    out.push_back(std::move(m));
  }
  return out;
}

template <class F>
bool composes_to_zero(const GradedResolution<F>& res) {
  for (std::size_t k = 1; k < res.maps.size(); ++k) {
    const auto& lower = res.maps[k - 1];  // F_k -> F_{k-1}
    const auto& upper = res.maps[k];      // F_{k+1} -> F_k
    for (const auto& col : upper.columns) {
      std::vector<Polynomial<F>> acc(lower.rows, Polynomial<F>(res.ring));
      for (const auto& [mid, p] : col)
        for (const auto& [r, q] : lower.columns[mid]) acc[r] += p * q;
      for (const auto& a : acc)
        if (!a.is_zero()) return false;
    }
  }
  return true;
}

template <class F>
bool is_graded(const GradedResolution<F>& res) {
  for (std::size_t k = 1; k <= res.maps.size(); ++k) {
    const auto& m = res.maps[k - 1];
    for (std::size_t j = 0; j < m.cols; ++j)
      for (const auto& [r, p] : m.columns[j]) {
        int expect = res.modules[k].shifts[j] - res.modules[k - 1].shifts[r];
        if (!p.is_homogeneous() || p.degree() != expect) return false;
      }
  }
  return true;
}

template <class F>
bool is_minimal(const GradedResolution<F>& res) {
  for (const auto& m : res.maps)
    for (const auto& col : m.columns)
      for (const auto& [r, p] : col)
        if (!p.is_zero() && !p.field().is_zero(p.coefficient(Monomial{}))) return false;
  return true;
}

namespace {
long long dim_graded_piece(int nvars, int deg) {
  if (deg < 0) return 0;
  // binom(deg + n - 1, n - 1)
  long long r = 1;
  for (int i = 1; i < nvars; ++i) r = r * (deg + i) / i;
  return r;
}
}  // namespace

long long hilbert_function(const std::vector<GradedFreeModule>& modules, int nvars, int deg) {
  long long h = 0;
  for (std::size_t k = 0; k < modules.size(); ++k) {
    long long s = 0;
    for (int a : modules[k].shifts) s += dim_graded_piece(nvars, deg - a);
    h += (k % 2 == 0) ? s : -s;
  }
  return h;
}

std::string format_modules(const std::vector<GradedFreeModule>& modules) {
  std::string out = "0";
  for (std::size_t k = modules.size(); k-- > 0;) {
    const auto& m = modules[k];
    if (m.rank() == 0) continue;
    std::map<int, int> mult;
    for (int s : m.shifts) ++mult[s];
    std::string piece;
    for (const auto& [s, c] : mult) {
      if (!piece.empty()) piece += " (+) ";
      piece += s == 0 ? "S" : "S(" + std::to_string(-s) + ")";
      if (c > 1) piece += "^" + std::to_string(c);
    }
    out += " -> " + piece;
  }
  return out;
}

#define BETTIFORGE_INSTANTIATE(F)                                                           \
  template GradedResolution<F> free_resolution<F>(const std::vector<Polynomial<F>>&, ResolutionStats*); \
  template GradedResolution<F> minimalize<F>(const GradedResolution<F>&);                 \
  template BettiData extract_betti<F>(const GradedResolution<F>&, int);                   \
  template bool composes_to_zero<F>(const GradedResolution<F>&);                          \
  template bool is_graded<F>(const GradedResolution<F>&);                                 \
  template bool is_minimal<F>(const GradedResolution<F>&);

BETTIFORGE_INSTANTIATE(RationalField)
BETTIFORGE_INSTANTIATE(PrimeField)

}  // namespace bettiforge
