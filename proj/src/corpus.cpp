#include "bettiforge/corpus.hpp"

#include <chrono>

#include "bettiforge/parser.hpp"

namespace bettiforge {

namespace {

std::vector<int> rep(std::initializer_list<std::pair<int, int>> runs) {
  std::vector<int> out;
  for (auto [v, n] : runs) out.insert(out.end(), static_cast<std::size_t>(n), v);
  return out;
}

std::vector<CorpusEntry> build() {
  std::vector<CorpusEntry> c;
  {
    CorpusEntry e{"cayley", "xyz+xyt+xzt+yzt", "Cayley cubic, four A1 points", false, true, {}};
    e.expected.d = rep({{2, 9}});
    e.expected.c = rep({{3, 8}});
    e.expected.b = rep({{4, 2}});
    e.expected.resolution_text = "0 -> S(-6)^2 -> S(-5)^8 -> S(-4)^9 -> S(-2)^4 -> S";
    e.expected.tau = 4;
    e.expected.tau_window = {{0, 8}};
    e.expected.suspension_bound = 2;
    e.expected.t = 4;
    e.expected.alpha = {{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}};
    e.expected.beta = {{1, 1}, {2, 1}};
    c.push_back(e);
  }
  {
    CorpusEntry e{"kummer", "x^4+y^4+z^4+t^4-y^2z^2-z^2x^2-x^2y^2-x^2t^2-y^2t^2-z^2t^2",
                  "Kummer quartic, sixteen A1 points", false, true, {}};
    e.expected.d = rep({{3, 12}});
    e.expected.c = rep({{4, 12}});
    e.expected.b = rep({{5, 3}});
    e.expected.resolution_text = "0 -> S(-8)^3 -> S(-7)^12 -> S(-6)^12 -> S(-3)^4 -> S";
    e.expected.tau = 16;
    e.expected.tau_window = {{0, 27}};
    e.expected.cube_discrepancy = true;
    c.push_back(e);
  }
  {
    CorpusEntry e{"chmutov-octic",
                  "16*(x^8+y^8+z^8+t^8)+224*(x^4*y^4+x^4*z^4+x^4*t^4+y^4*z^4+y^4*t^4+z^4*t^4)+2688*x^2*y^2*z^2*t^2-"
                  "9*(x^2+y^2+z^2+t^2)^4",
                  "Chebyshev octic with 144 nodes", true, true, {}};
    e.expected.d = rep({{7, 6}, {9, 9}});
    e.expected.c = rep({{10, 4}, {11, 13}});
    e.expected.b = rep({{13, 4}, {15, 1}});
    e.expected.resolution_text =
        "0 -> S(-20)^4 (+) S(-22) -> S(-17)^4 (+) S(-18)^13 -> S(-14)^6 (+) S(-16)^9 -> S(-7)^4 -> S";
    e.expected.tau = 144;
    e.expected.tau_window = {{0, 343}};
    e.expected.suspension_bound = 147;
    e.expected.mdr = 9;
    e.expected.nodal_bound = 9;
    c.push_back(e);
  }
  {
    CorpusEntry e{"cubic-3A3", "xyz-t^3", "cubic with three A3 points", false, false, {}};
    e.expected.d = rep({{1, 2}, {2, 3}});
    e.expected.c = rep({{3, 2}});
    e.expected.b = std::vector<int>{};
    e.expected.resolution_text = "0 -> S(-5)^2 -> S(-3)^2 (+) S(-4)^3 -> S(-2)^4 -> S";
    e.expected.tau = 6;
    e.expected.alpha = {{1, 1}, {2, 1}};
    c.push_back(e);
  }
  {
    CorpusEntry e{"cubic-tau5", "txz+y^2z+x^3-z^3", "cubic with total Tjurina number 5", false, false, {}};
    e.expected.d = rep({{1, 1}, {2, 6}});
    e.expected.c = rep({{3, 5}});
    e.expected.b = std::vector<int>{4};
    e.expected.resolution_text = "0 -> S(-6) -> S(-5)^5 -> S(-3) (+) S(-4)^6 -> S(-2)^4 -> S";
    e.expected.tau = 5;
    e.expected.alpha = {{1, 1}, {2, 1}, {3, 1}, {4, 1}};
    e.expected.beta = {{1, 1}};
    c.push_back(e);
  }
  {
    CorpusEntry e{"sextic-nearly-free", "x^5z+y^6+x^4yt+xy^5", "nearly free sextic, one-dimensional singular locus",
                  false, false, {}};
    e.expected.d = rep({{1, 1}, {2, 1}, {3, 2}});
    e.expected.c = std::vector<int>{4};
    e.expected.b = std::vector<int>{};
    e.expected.resolution_text = "0 -> S(-9) -> S(-6) (+) S(-7) (+) S(-8)^2 -> S(-5)^4 -> S";
    e.expected.A_half = 16;
    e.expected.B = 27;
    e.expected.alpha = {{1, 1}};
    c.push_back(e);
  }
  {
    CorpusEntry e{"three-cubics", "(x^3-yzt)^3+(t^3-xyz)^3", "union of three cubics from one pencil (m = 3)", false,
                  false, {}};
    e.expected.d = rep({{1, 1}, {4, 2}, {7, 2}, {8, 3}});
    e.expected.c = rep({{5, 1}, {8, 1}, {9, 3}, {10, 2}});
    e.expected.b = rep({{10, 1}, {11, 1}});
    e.expected.resolution_text =
        "0 -> S(-18) (+) S(-19) -> S(-13) (+) S(-16) (+) S(-17)^3 (+) S(-18)^2 -> S(-9) (+) S(-12)^2 (+) S(-15)^2 (+) "
        "S(-16)^3 -> S(-8)^4 -> S";
    e.expected.A_half = 38;
    e.expected.B = 119;
    e.expected.t = 1;
    e.expected.beta = {{1, 0}};
    c.push_back(e);
  }
  {
    CorpusEntry e{"four-cubics", "(x^3-yzt)^4+(t^3-xyz)^4", "union of four cubics from one pencil (m = 4)", false,
                  false, {}};
    e.expected.d = rep({{1, 1}, {4, 2}, {11, 5}});
    e.expected.c = rep({{5, 1}, {12, 2}, {13, 4}});
    e.expected.b = rep({{14, 2}});
    e.expected.resolution_text =
        "0 -> S(-25)^2 -> S(-16) (+) S(-23)^2 (+) S(-24)^4 -> S(-12) (+) S(-15)^2 (+) S(-22)^5 -> S(-11)^4 -> S";
    e.expected.A_half = 81;
    e.expected.B = 491;
    e.expected.t = -2;
    e.expected.alpha = {{1, -6}, {2, 1}, {3, 1}, {4, 2}, {5, 2}};
    e.expected.beta = {{1, 1}, {2, 1}};
    c.push_back(e);
  }
  {
    CorpusEntry e{"four-quartics", "(x^4-yzt^2)^4+(t^4-xyz^2)^4", "union of four quartics from one pencil", true,
                  false, {}};
    e.expected.d = rep({{5, 2}, {6, 3}, {12, 4}, {13, 2}, {15, 1}});
    e.expected.c = rep({{7, 2}, {8, 1}, {13, 4}, {14, 3}, {16, 2}});
    e.expected.b = rep({{14, 1}, {15, 1}, {17, 1}});
    e.expected.resolution_text =
        "0 -> S(-29) (+) S(-30) (+) S(-32) -> S(-22)^2 (+) S(-23) (+) S(-28)^4 (+) S(-29)^3 (+) S(-31)^2 -> S(-20)^2 "
        "(+) S(-21)^3 (+) S(-27)^4 (+) S(-28)^2 (+) S(-30) -> S(-15)^4 -> S";
    e.expected.A_half = 147;
    e.expected.B = 1382;
    e.expected.t = 1;
    e.expected.alpha = {{9, -1}};
    e.expected.beta = {{1, 0}, {2, -1}};
    c.push_back(e);
  }
  for (int m : {2, 3, 4}) {
    std::string ms = std::to_string(m);
    CorpusEntry e{"pencil-m" + ms, "(x^3-yzt)^" + ms + "+(t^3-xyz)^" + ms,
                  "g^m + h^m for g = x^3 - yzt, h = t^3 - xyz, m = " + ms, false, false, {}};
    e.expected.d_prefix = std::vector<int>{1, 4, 4};
    e.expected.t = 10 - 3 * m;
    c.push_back(e);
  }
  {
    CorpusEntry e{"fermat-3", "x^3+y^3+z^3+t^3", "smooth Fermat cubic", false, false, {}};
    e.expected.d = rep({{2, 6}});
    e.expected.c = rep({{4, 4}});
    e.expected.b = std::vector<int>{6};
    e.expected.resolution_text = "0 -> S(-8) -> S(-6)^4 -> S(-4)^6 -> S(-2)^4 -> S";
    e.expected.tau = 0;
    c.push_back(e);
  }
  {
    CorpusEntry e{"fermat-4", "x^4+y^4+z^4+t^4", "smooth Fermat quartic", false, false, {}};
    e.expected.d = rep({{3, 6}});
    e.expected.c = rep({{6, 4}});
    e.expected.b = std::vector<int>{9};
    e.expected.resolution_text = "0 -> S(-12) -> S(-9)^4 -> S(-6)^6 -> S(-3)^4 -> S";
    e.expected.tau = 0;
    c.push_back(e);
  }
  return c;
}

std::string seq(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

template <class T>
void check(std::vector<std::string>& out, const std::string& what, const std::optional<T>& expected, const std::optional<T>& got) {
  if (!expected) return;
  if (!got)
    out.push_back(what + ": expected a value, got none");
  else if (!(*got == *expected))
    out.push_back(what + " mismatch");
}

template <class F>
CorpusResult run_with(const CorpusEntry& entry, F field) {
  CorpusResult res;
  res.name = entry.name;
  auto start = std::chrono::steady_clock::now();
  auto ring = make_ring(VariableSet::surface(), field);
  res.field = ring->field.name();
  try {
    auto f = parse_polynomial(entry.f_text, ring);
    AnalyzeOptions opts;
    opts.assume_nodal = entry.nodal;
    opts.compute_mdr = entry.expected.mdr.has_value();
    auto an = analyze_surface_full(f, opts);
    if (!composes_to_zero(an.resolution)) res.mismatches.push_back("resolution does not compose to zero");
    if (!is_minimal(an.resolution)) res.mismatches.push_back("resolution is not minimal");
    auto more = compare(an.report, entry.expected);
    res.mismatches.insert(res.mismatches.end(), more.begin(), more.end());
    res.report = an.report;
  } catch (const std::exception& ex) {
    res.mismatches.push_back(std::string("error: ") + ex.what());
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  res.pass = res.mismatches.empty();
  return res;
}

}  // namespace

const std::vector<CorpusEntry>& corpus_entries() {
  static const std::vector<CorpusEntry> entries = build();
  return entries;
}

std::vector<std::string> compare(const SurfaceReport& r, const CorpusExpectation& e) {
  std::vector<std::string> out;
  const auto& a = r.arithmetic;
  const auto& b = a.betti;
  auto cmp_seq = [&](const char* name, const std::optional<std::vector<int>>& want, const std::vector<int>& got) {
    if (want && *want != got) out.push_back(std::string(name) + " = " + seq(got) + ", expected " + seq(*want));
  };
  cmp_seq("d", e.d, b.d);
  cmp_seq("c", e.c, b.c);
  cmp_seq("b", e.b, b.b);
  if (e.d_prefix) {
    std::vector<int> head(b.d.begin(), b.d.begin() + static_cast<long>(std::min(b.d.size(), e.d_prefix->size())));
    if (head != *e.d_prefix) out.push_back("leading d = " + seq(head) + ", expected " + seq(*e.d_prefix));
  }
  if (e.resolution_text && *e.resolution_text != r.resolution_text)
    out.push_back("resolution '" + r.resolution_text + "', expected '" + *e.resolution_text + "'");
  if (!a.identities.count_check || !a.identities.sum_check) out.push_back("count or sum identity fails");
  if (a.coefficients[0] != 0 || a.coefficients[1] != 0) out.push_back("cubic or quadratic dimension coefficient is nonzero");
  check(out, "tau", e.tau, a.hilbert.tau);
  if (e.A_half) {
    if (!a.hilbert.A || ratio(*a.hilbert.A, 2) != mpq_class(static_cast<long>(*e.A_half)))
      out.push_back("A/2 mismatch");
  }
  if (e.B) {
    if (!a.hilbert.B || *a.hilbert.B != mpq_class(static_cast<long>(*e.B))) out.push_back("B mismatch");
  }
  if (e.t) {
    if (!a.type)
      out.push_back("type not available");
    else if (a.type->t != *e.t)
      out.push_back("t = " + std::to_string(a.type->t) + ", expected " + std::to_string(*e.t));
  }
  if (a.type && !a.type->consistent) out.push_back("t differs from sum alpha - sum beta");
  auto cmp_idx = [&](const char* name, const std::vector<std::pair<int, int>>& want, const std::vector<int>* got) {
    for (auto [i, v] : want) {
      if (!got || i < 1 || static_cast<std::size_t>(i) > got->size() || (*got)[static_cast<std::size_t>(i - 1)] != v)
        out.push_back(std::string(name) + "_" + std::to_string(i) + " != " + std::to_string(v));
    }
  };
  cmp_idx("alpha", e.alpha, a.type ? &a.type->alpha : nullptr);
  cmp_idx("beta", e.beta, a.type ? &a.type->beta : nullptr);
  if (e.tau_window) {
    if (!a.tau_window || a.tau_window->lower != e.tau_window->first || a.tau_window->upper != e.tau_window->second)
      out.push_back("tau window mismatch");
    else if (!a.tau_window->satisfied)
      out.push_back("tau outside its window");
  }
  check(out, "suspension bound", e.suspension_bound, a.suspension_bound);
  if (e.cube_discrepancy && a.cube_discrepancy != *e.cube_discrepancy) out.push_back("q3 window discrepancy flag mismatch");
  if (e.mdr) {
    if (!r.mdr || r.mdr->mdr != e.mdr) out.push_back("mdr mismatch");
  }
  check(out, "nodal bound", e.nodal_bound, r.nodal_bound);
  return out;
}

CorpusResult run_corpus_entry(const CorpusEntry& entry, CorpusField field, std::uint32_t prime) {
  bool modular = field == CorpusField::kPrime || (field == CorpusField::kDefault && entry.slow);
  if (modular) return run_with(entry, PrimeField(prime));
  return run_with(entry, RationalField{});
}

}  // namespace bettiforge
