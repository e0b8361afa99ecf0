#include <doctest.h>

#include <random>

#include "bettiforge/diff_form.hpp"
#include "support/test_support.hpp"

using namespace bettiforge;
using bftest::parse;

TEST_CASE("polynomial arithmetic") {
  auto R = bftest::qring();
  auto x = Polynomial<RationalField>::variable(R, "x");
  auto y = Polynomial<RationalField>::variable(R, "y");
  CHECK((x + (-x)).is_zero());
  CHECK((x + y) * (x - y) == parse(R, "x^2-y^2"));
  auto g = parse(R, "x^3-yzt");
  CHECK(g.pow(2) == parse(R, "x^6-2x^3yzt+y^2z^2t^2"));
  CHECK(g.pow(2) == g * g);
  CHECK(g.pow(0) == Polynomial<RationalField>::constant(R, 1));
}

TEST_CASE("partials and the Euler identity") {
  auto R = bftest::qring();
  auto f = parse(R, "xyz-t^3");
  CHECK(f.partial("t") == parse(R, "-3t^2"));
  CHECK(f.partial("x") == parse(R, "yz"));
  CHECK(euler_operator(f) == f.scaled(3));
  CHECK(f.is_homogeneous());
  CHECK(!parse(R, "x^2+y").is_homogeneous());
}

TEST_CASE("division with remainder") {
  auto R = bftest::qring();
  auto [q, r] = divide(parse(R, "x^3+y^3"), parse(R, "x+y"));
  CHECK(q == parse(R, "x^2-xy+y^2"));
  CHECK(r.is_zero());
}

TEST_CASE("operands from different rings are rejected") {
  auto a = bftest::parse(bftest::qring(), "x");
  auto b = bftest::parse(make_ring(VariableSet::curve(), RationalField{}), "x");
  CHECK_THROWS_AS(a + b, IncompatibleOperands);
}

TEST_CASE("content and primitive parts") {
  auto R = bftest::qring();
  auto c1 = content_gcd(std::vector{parse(R, "xy"), parse(R, "xz")});
  CHECK(c1.content == parse(R, "x"));
  CHECK(c1.primitive_parts[0] == parse(R, "y"));
  CHECK(c1.primitive_parts[1] == parse(R, "z"));

  auto h = parse(R, "3t^3+xyz");
  auto c2 = content_gcd(std::vector{Polynomial<RationalField>(R), h * parse(R, "y"), -h * parse(R, "z"),
                                    Polynomial<RationalField>(R)});
  CHECK(c2.content == h.monic());
  // up to the unit absorbed by monic normalization
  auto unit = h.lead_coef();
  CHECK(c2.primitive_parts[1] == parse(R, "y").scaled(unit));
  CHECK(c2.primitive_parts[2] == parse(R, "-z").scaled(unit));

  auto c3 = content_gcd(std::vector{parse(R, "x+y"), parse(R, "x-y")});
  CHECK(c3.content.is_constant());

  auto P = bftest::pring();
  CHECK_THROWS_AS(content_gcd(std::vector{parse(P, "x")}), Unsupported);
}

TEST_CASE("gcd against products of known factors") {
  auto R = bftest::qring();
  std::mt19937_64 rng(7);
  for (int i = 0; i < 40; ++i) {
    auto a = bftest::random_homogeneous(R, 1 + static_cast<int>(rng() % 2), 3, rng);
    auto b = bftest::random_homogeneous(R, 1 + static_cast<int>(rng() % 2), 3, rng);
    auto c = bftest::random_homogeneous(R, 1, 2, rng);
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    auto g = polynomial_gcd(a * c, b * c);
    CHECK(divide(g, c.monic()).second.is_zero());
    CHECK(divide(a * c, g).second.is_zero());
    CHECK(divide(b * c, g).second.is_zero());
  }
}

TEST_CASE("wedge products") {
  auto R = bftest::qring();
  using Form = DifferentialForm<RationalField>;
  auto dx = Form::basis(R, 0), dy = Form::basis(R, 1);
  auto w = wedge(dx, dy);
  CHECK(w.grade() == 2);
  CHECK(w.components().size() == 1);
  CHECK(w.component({0, 1}) == Polynomial<RationalField>::constant(R, 1));
  CHECK(wedge(dx, dx).is_zero());
  CHECK(wedge(dy, dx) == w.scaled(Polynomial<RationalField>::constant(R, -1)));

  auto omega = wedge(differential(parse(R, "x^3-yzt")), differential(parse(R, "t^3-xyz")));
  CHECK(omega.component({0, 3}) == parse(R, "-(y^2z^2-9x^2t^2)"));
}

TEST_CASE("exterior differential") {
  auto R = bftest::qring();
  auto df = differential(parse(R, "xyz-t^3"));
  CHECK(df.component({0}) == parse(R, "yz"));
  CHECK(df.component({1}) == parse(R, "xz"));
  CHECK(df.component({2}) == parse(R, "xy"));
  CHECK(df.component({3}) == parse(R, "-3t^2"));
  CHECK(differential(parse(R, "7")).is_zero());
  auto dg = differential(parse(R, "x^3-yzt"));
  CHECK(dg.component({0}) == parse(R, "3x^2"));
  CHECK(dg.component({1}) == parse(R, "-zt"));
  CHECK(dg.component({2}) == parse(R, "-yt"));
  CHECK(dg.component({3}) == parse(R, "-yz"));
}

TEST_CASE("ring axioms on random polynomials") {
  auto R = bftest::qring();
  auto P = bftest::pring(101);
  std::mt19937_64 rng(20261014);
  auto run = [&](const auto& ring) {
    for (int i = 0; i < 500; ++i) {
      auto a = bftest::random_polynomial(ring, 3, 4, rng);
      auto b = bftest::random_polynomial(ring, 3, 4, rng);
      auto c = bftest::random_polynomial(ring, 3, 4, rng);
      REQUIRE(a + b == b + a);
      REQUIRE(a * b == b * a);
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE((a - a).is_zero());
      REQUIRE((a * b).partial(0) == a.partial(0) * b + a * b.partial(0));
    }
  };
  run(R);
  run(P);
}

TEST_CASE("Euler identity on random homogeneous polynomials") {
  auto R = bftest::qring();
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    int d = 1 + static_cast<int>(rng() % 6);
    auto f = bftest::random_homogeneous(R, d, 5, rng);
    if (f.is_zero()) continue;
    REQUIRE(euler_operator(f) == f.scaled(f.field().from_int(d)));
  }
}

TEST_CASE("wedge antisymmetry and Leibniz rule") {
  auto R = bftest::qring();
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    auto g = bftest::random_homogeneous(R, 2, 4, rng);
    auto h = bftest::random_homogeneous(R, 3, 4, rng);
    auto dg = differential(g), dh = differential(h);
    auto minus_one = Polynomial<RationalField>::constant(R, -1);
    REQUIRE(wedge(dg, dh) == wedge(dh, dg).scaled(minus_one));
    REQUIRE(wedge(dg, dg).is_zero());
    REQUIRE(differential(g * h) == dh.scaled(g) + dg.scaled(h));
    auto w2 = wedge(dg, dh);
    REQUIRE(wedge(w2, dg).is_zero());
    REQUIRE(wedge(wedge(DifferentialForm<RationalField>::basis(R, 0), dg), dh) ==
            wedge(DifferentialForm<RationalField>::basis(R, 0), w2));
  }
}
