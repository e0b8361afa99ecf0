#include <doctest.h>

#include <random>

#include "support/test_support.hpp"

using namespace bettiforge;
using bftest::parse;
using Q = RationalField;

namespace {

std::vector<Polynomial<Q>> as_polys(const GroebnerBasis<Q>& gb) {
  std::vector<Polynomial<Q>> out;
  for (const auto& g : gb.generators) out.push_back(g.components()[0]);
  return out;
}

bool contains(const std::vector<Polynomial<Q>>& v, const Polynomial<Q>& p) {
  return std::find(v.begin(), v.end(), p) != v.end();
}

}  // namespace

TEST_CASE("small bases") {
  auto R = bftest::qring();
  auto gb1 = as_polys(groebner_basis(std::vector{parse(R, "x"), parse(R, "y")}));
  CHECK(gb1.size() == 2);
  CHECK(contains(gb1, parse(R, "x")));
  CHECK(contains(gb1, parse(R, "y")));

  auto gb = groebner_basis(std::vector{parse(R, "x^2"), parse(R, "xy+y^2")});
  auto gens = as_polys(gb);
  CHECK(gens.size() == 3);
  CHECK(contains(gens, parse(R, "x^2")));
  CHECK(contains(gens, parse(R, "xy+y^2")));
  CHECK(contains(gens, parse(R, "y^3")));
  CHECK(satisfies_buchberger_criterion(gb));

  CHECK_THROWS_AS(groebner_basis(std::vector{parse(R, "x^2+y")}), DomainError);
}

TEST_CASE("normal forms") {
  auto R = bftest::qring();
  auto gx2 = groebner_basis(std::vector{parse(R, "x^2")});
  CHECK(normal_form(parse(R, "x^2y"), gx2).is_zero());
  auto gx = groebner_basis(std::vector{parse(R, "x")});
  CHECK(normal_form(parse(R, "y^3+x"), gx) == parse(R, "y^3"));

  auto f = parse(R, "x^3+y^3+z^3+t^3");
  auto J = groebner_basis(jacobian_generators(f));
  CHECK(normal_form(f, J).is_zero());
}

TEST_CASE("Jacobian algebra of the Cayley cubic has constant dimension 4") {
  auto R = bftest::qring();
  auto f = parse(R, "xyz+xyt+xzt+yzt");
  auto gb = groebner_basis(jacobian_generators(f));
  CHECK(bftest::standard_monomial_count(gb, 4, 2) == 6);
  for (int k = 4; k <= 12; ++k) CHECK(bftest::standard_monomial_count(gb, 4, k) == 4);
}

TEST_CASE("Koszul syzygy of two variables") {
  auto R = bftest::qring();
  auto syz = syzygy_generators(std::vector{parse(R, "x"), parse(R, "y")});
  REQUIRE(syz.size() == 1);
  auto c = syz[0].components();
  bool plus = c[0] == parse(R, "y") && c[1] == parse(R, "-x");
  bool minus = c[0] == parse(R, "-y") && c[1] == parse(R, "x");
  CHECK((plus || minus));
}

TEST_CASE("syzygies annihilate the generators") {
  auto R = bftest::qring();
  std::mt19937_64 rng(17);
  for (int i = 0; i < 25; ++i) {
    std::vector<Polynomial<Q>> gens;
    for (int j = 0; j < 3; ++j) gens.push_back(bftest::random_homogeneous(R, 2, 3, rng));
    bool any = false;
    for (auto& g : gens) any = any || !g.is_zero();
    if (!any) continue;
    for (const auto& s : syzygy_generators(gens)) {
      auto c = s.components();
      Polynomial<Q> acc(R);
      for (std::size_t j = 0; j < gens.size(); ++j) acc += c[j] * gens[j];
      REQUIRE(acc.is_zero());
    }
  }
}

TEST_CASE("reduced bases are canonical on random ideals") {
  auto R = bftest::qring();
  std::mt19937_64 rng(23);
  for (int i = 0; i < 25; ++i) {
    std::vector<Polynomial<Q>> gens;
    for (int j = 0; j < 3; ++j) gens.push_back(bftest::random_homogeneous(R, 2, 3, rng));
    auto a = groebner_basis(gens);
    if (a.generators.empty()) continue;
    REQUIRE(satisfies_buchberger_criterion(a));
    // every input reduces to zero
    for (const auto& g : gens) REQUIRE(normal_form(g, a).is_zero());
    // a reshuffled generating set gives the same reduced basis
    std::vector<Polynomial<Q>> mixed{gens[0] + gens[1], gens[1], gens[2] - gens[0]};
    auto b = groebner_basis(mixed);
    auto pa = as_polys(a), pb = as_polys(b);
    REQUIRE(pa.size() == pb.size());
    for (const auto& p : pa) REQUIRE(contains(pb, p));
  }
}

TEST_CASE("truncated bases") {
  auto R = bftest::qring();
  auto gb = groebner_basis(std::vector{parse(R, "x^2"), parse(R, "xy+y^2")}, GroebnerOptions{2});
  CHECK(as_polys(gb).size() == 2);
}

TEST_CASE("radical membership") {
  auto R = bftest::qring();
  CHECK(radical_membership(parse(R, "x"), {parse(R, "x^2")}));
  CHECK(!radical_membership(parse(R, "x"), {parse(R, "y")}));
  CHECK(radical_membership(parse(R, "x+t"), {parse(R, "x"), parse(R, "t")}));
  CHECK(radical_membership(parse(R, "x"), {parse(R, "x^2"), parse(R, "xy")}));
  CHECK(!radical_membership(parse(R, "t"), {parse(R, "x^3-yzt"), parse(R, "t^3-xyz")}));
  CHECK_THROWS_AS(radical_membership(Polynomial<Q>(R), {parse(R, "x")}), DomainError);
}
