#include <doctest.h>

#include "bettiforge/analyzer.hpp"
#include "support/test_support.hpp"

using namespace bettiforge;
using bftest::parse;
using Q = RationalField;

namespace {

const char* kKummer = "x^4+y^4+z^4+t^4-y^2z^2-z^2x^2-x^2y^2-x^2t^2-y^2t^2-z^2t^2";
const char* kOctic =
    "16*(x^8+y^8+z^8+t^8)+224*(x^4*y^4+x^4*z^4+x^4*t^4+y^4*z^4+y^4*t^4+z^4*t^4)+"
    "2688*x^2*y^2*z^2*t^2-9*(x^2+y^2+z^2+t^2)^4";

RingPtr<Q> curve_ring() { return make_ring(VariableSet::curve(), Q{}); }

}  // namespace

TEST_CASE("Jacobian generators") {
  auto R = bftest::qring();
  auto j = jacobian_generators(parse(R, "xyz-t^3"));
  CHECK(j == std::vector{parse(R, "yz"), parse(R, "xz"), parse(R, "xy"), parse(R, "-3t^2")});
  auto c = jacobian_generators(parse(R, "xyz+xyt+xzt+yzt"));
  CHECK(c[0] == parse(R, "yz+yt+zt"));
  CHECK(c[3] == parse(R, "xy+xz+yz"));
  auto cube = jacobian_generators(parse(R, "x^3"));
  CHECK(cube[0] == parse(R, "3x^2"));
  CHECK(cube[1].is_zero());
  CHECK_THROWS_AS(jacobian_generators(parse(R, "x^2+y^2")), DomainError);
  CHECK_THROWS_AS(jacobian_generators(parse(R, "x^3+y")), DomainError);
}

TEST_CASE("syzygy verification") {
  auto R = bftest::qring();
  auto f = parse(R, "(x^3-yzt)^2+(t^3-xyz)^2");
  CHECK(verify_syzygy(f, SyzygyQuadruple<Q>{{Polynomial<Q>(R), parse(R, "y"), parse(R, "-z"), Polynomial<Q>(R)}}));
  auto g = parse(R, "x^4+3xyzt-y^3z");
  SyzygyQuadruple<Q> koszul{{g.partial(1), -g.partial(0), Polynomial<Q>(R), Polynomial<Q>(R)}};
  CHECK(verify_syzygy(g, koszul));
  auto fermat = parse(R, "x^3+y^3+z^3+t^3");
  SyzygyQuadruple<Q> unit{{Polynomial<Q>::constant(R, 1), Polynomial<Q>(R), Polynomial<Q>(R), Polynomial<Q>(R)}};
  CHECK(!verify_syzygy(fermat, unit));
}

TEST_CASE("Cayley cubic arithmetic") {
  auto R = bftest::qring();
  auto r = analyze_surface(parse(R, "xyz+xyt+xzt+yzt"));
  const auto& a = r.arithmetic;
  CHECK(r.resolution_text == "0 -> S(-6)^2 -> S(-5)^8 -> S(-4)^9 -> S(-2)^4 -> S");
  CHECK(*a.hilbert.tau == 4);
  CHECK(a.tau_window->lower == 0);
  CHECK(a.tau_window->upper == 8);
  CHECK(a.tau_window->satisfied);
  CHECK(a.type->t == 4);
  CHECK(a.type->alpha == std::vector<int>(6, 1));
  CHECK(a.type->beta == std::vector<int>{1, 1});
  CHECK(*a.suspension_bound == 2);
  CHECK(a.identities.q3 == -16);
  CHECK(r.mdr->mdr == 2);
  CHECK(r.generators_of_degree_d_minus_1 == 9);
}

TEST_CASE("Kummer quartic windows") {
  auto R = bftest::qring();
  auto r = analyze_surface(parse(R, kKummer));
  const auto& a = r.arithmetic;
  CHECK(*a.hilbert.tau == 16);
  CHECK(a.tau_window->upper == 27);
  CHECK(a.identities.q3 == -69);
  CHECK(a.cube_printed->lower == 0);
  CHECK(!a.cube_printed->satisfied);
  CHECK(a.cube_derived->satisfied);
  CHECK(a.cube_derived->lower <= -69);
  CHECK(-69 <= a.cube_derived->upper);
  CHECK(a.cube_discrepancy);
  // 12 degree-3 generators against a 6-dimensional Koszul slice
  CHECK(r.mdr->mdr == 3);
  CHECK(r.mdr->ar_dims[3] == 12);
  CHECK(r.mdr->kr_dims[3] == 6);
}

TEST_CASE("derived q3 window is the tau window rewritten") {
  // q3 = (d-1)^3 - 6 tau, so tau in [L, U] iff q3 in [(d-1)^3 - 6U, (d-1)^3 - 6L]
  for (const auto& b : {BettiData{3, std::vector<int>(9, 2), std::vector<int>(8, 3), std::vector<int>(2, 4)},
                        BettiData{4, std::vector<int>(12, 3), std::vector<int>(12, 4), std::vector<int>(3, 5)}}) {
    auto a = betti_arithmetic(b);
    long long e3 = static_cast<long long>(b.degree - 1) * (b.degree - 1) * (b.degree - 1);
    CHECK(a.cube_derived->lower == e3 - 6 * a.tau_window->upper);
    CHECK(a.cube_derived->upper == e3 - 6 * a.tau_window->lower);
  }
}

TEST_CASE("smooth surfaces have no non-Koszul syzygies up to the bound") {
  auto R = bftest::qring();
  auto r = analyze_surface(parse(R, "x^3+y^3+z^3+t^3"));
  CHECK(!r.mdr->mdr.has_value());
  CHECK(r.mdr->bound == 6);
  CHECK(r.arithmetic.hilbert.sigma == SigmaDimension::kEmpty);
  CHECK(r.arithmetic.betti.d == std::vector<int>(6, 2));
}

TEST_CASE("Chebyshev octic over GF(32003)") {
  auto P = bftest::pring();
  AnalyzeOptions opts;
  opts.assume_nodal = true;
  auto r = analyze_surface(parse(P, kOctic), opts);
  CHECK(*r.arithmetic.hilbert.tau == 144);
  CHECK(r.arithmetic.tau_window->upper == 343);
  CHECK(*r.arithmetic.suspension_bound == 147);
  CHECK(r.mdr->mdr == 9);
  CHECK(*r.nodal_bound == 9);
  CHECK(r.generators_of_degree_d_minus_1 == 6);
}

TEST_CASE("four cubics from one pencil") {
  auto R = bftest::qring();
  auto r = analyze_surface(parse(R, "(x^3-yzt)^4+(t^3-xyz)^4"), AnalyzeOptions{false, false});
  CHECK(r.arithmetic.type->t == -2);
  CHECK(r.arithmetic.type->alpha == std::vector<int>{-6, 1, 1, 2, 2});
  CHECK(r.arithmetic.type->beta == std::vector<int>{1, 1});
  CHECK(r.arithmetic.type->consistent);
}

TEST_CASE("nodal mdr bound") {
  CHECK(nodal_mdr_bound(8) == 9);
  CHECK(nodal_mdr_bound(5) == 5);
  CHECK_THROWS_AS(nodal_mdr_bound(4), DomainError);
}

TEST_CASE("non-reduced input is flagged") {
  auto R = bftest::qring();
  for (const char* s : {"x^3", "xyz^2", "(x+y)^2z"}) {
    try {
      analyze_surface(parse(R, s));
      FAIL("expected NonReducedInput for " << s);
    } catch (const NonReducedInput& e) {
      CHECK(std::string(e.what()).find("dim Sigma >= 2") != std::string::npos);
      CHECK(e.betti().has_value());
    }
  }
}

TEST_CASE("minimal AR generators") {
  auto R = bftest::qring();
  auto f = parse(R, kKummer);
  auto ar = ar_generators_and_mdr(f);
  CHECK(ar.degrees == std::vector<int>(12, 3));
  CHECK(ar.generators.size() == 12);
  for (const auto& g : ar.generators) {
    CHECK(g.degree() == 3);
    CHECK(verify_syzygy(f, g));
  }
}

TEST_CASE("determinant of syzygies") {
  auto R = bftest::qring();
  auto f = parse(R, "(x^3-yzt)^2+(t^3-xyz)^2");
  SyzygyQuadruple<Q> r1{{Polynomial<Q>(R), parse(R, "y"), parse(R, "-z"), Polynomial<Q>(R)}};
  SyzygyQuadruple<Q> ry{{parse(R, "-y(3t^3+xyz)"), Polynomial<Q>(R), parse(R, "y^2z^2-9x^2t^2"), parse(R, "-y(3x^3+yzt)")}};
  SyzygyQuadruple<Q> rz{{parse(R, "z(3t^3+xyz)"), parse(R, "9x^2t^2-y^2z^2"), Polynomial<Q>(R), parse(R, "z(3x^3+yzt)")}};
  auto dep = syzygy_determinant_test(f, r1, ry, rz);
  CHECK(!dep.independent);
  CHECK(dep.g.is_zero());
  // the linear relation behind the vanishing: z ry + y rz = (9x^2t^2 - y^2z^2) r1
  for (std::size_t v = 0; v < 4; ++v)
    CHECK((parse(R, "9x^2t^2-y^2z^2") * r1.comps[v] - parse(R, "z") * ry.comps[v] - parse(R, "y") * rz.comps[v]).is_zero());

  auto rep = syzygy_determinant_test(f, r1, r1, ry);
  CHECK(rep.g.is_zero());

  CHECK_THROWS_AS(syzygy_determinant_test(f, r1, r1, SyzygyQuadruple<Q>{{Polynomial<Q>::constant(R, 1), Polynomial<Q>(R),
                                                                         Polynomial<Q>(R), Polynomial<Q>(R)}}),
                  DomainError);

  auto cay = parse(R, "xyz+xyt+xzt+yzt");
  auto gens = ar_generators_and_mdr(cay).generators;
  auto gb = groebner_basis(std::vector{cay});
  bool found = false;
  for (std::size_t i = 0; i < gens.size() && !found; ++i)
    for (std::size_t j = i + 1; j < gens.size() && !found; ++j)
      for (std::size_t k = j + 1; k < gens.size() && !found; ++k) {
        auto res = syzygy_determinant_test(cay, gens[i], gens[j], gens[k]);
        if (!res.independent) continue;
        found = true;
        CHECK(res.divisible_by_f);
        CHECK(normal_form(res.g, gb).is_zero());
        CHECK(*res.quotient * cay == res.g);
        CHECK(res.degree_sum == 7);
        CHECK(res.t_lower_bound_applies);
      }
  CHECK(found);
}

TEST_CASE("suspension") {
  auto C = curve_ring();
  auto f = suspension(parse(C, "x^3+y^3+z^3"), 3);
  CHECK(f.ring()->vars.names() == std::vector<std::string>{"x", "y", "z", "t"});
  CHECK(f == parse(f.ring(), "x^3+y^3+z^3+t^3"));
  CHECK(suspension(parse(C, "xyz"), 3) == parse(f.ring(), "xyz+t^3"));
  CHECK_THROWS_AS(suspension(parse(C, "xyz"), 4), DomainError);
}

TEST_CASE("suspension of a nodal curve") {
  // conic plus a secant line: two nodes; an A1 point suspended by t^3 is A2
  auto C = curve_ring();
  auto fp = parse(C, "y(xz-y^2)");
  auto curve = analyze_curve(fp);
  CHECK(curve.tau == 2);
  auto f = suspension(fp, 3);
  auto r = analyze_surface(f);
  CHECK(*r.arithmetic.hilbert.tau == 2 * curve.tau);
  CHECK(r.arithmetic.tau_window->satisfied);
  if (r.arithmetic.suspension_bound) CHECK(*r.arithmetic.hilbert.tau <= *r.arithmetic.suspension_bound);
}

TEST_CASE("curves") {
  auto C = curve_ring();
  auto tri = analyze_curve(parse(C, "xyz"));
  CHECK(tri.classification == "free");
  CHECK(*tri.exponents == std::make_pair(1, 1));
  CHECK(tri.tau == 3);
  CHECK(*tri.free_tau_check);
  CHECK(tri.type_t == 0);

  for (const char* s : {"x^3+y^3+z^3", "y(xz-y^2)", "x^4+y^4+z^4", "x^2y^2+y^2z^2+z^2x^2", "xyz(x+y+z)",
                        "y^2z-x^3-x^2z", "(x^2+y^2-z^2)(x^2+y^2-4z^2)+x^3z"}) {
    auto r = analyze_curve(parse(C, s));
    CAPTURE(s);
    CHECK(r.count_check);
    CHECK(r.sum_check);
    if (r.classification != "free") {
      CHECK(r.epsilon_positive);
      CHECK(*r.t_equals_epsilon_sum);
    }
  }
  CHECK_THROWS_AS(analyze_curve(parse(C, "x^2y")), NonReducedInput);
}
