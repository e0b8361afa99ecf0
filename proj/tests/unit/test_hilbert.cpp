#include <doctest.h>

#include "bettiforge/hilbert.hpp"
#include "support/test_support.hpp"

using namespace bettiforge;

namespace {

BettiData betti(int d, std::vector<int> ds, std::vector<int> cs, std::vector<int> bs) {
  return BettiData{d, std::move(ds), std::move(cs), std::move(bs)};
}

BettiData cayley() { return betti(3, std::vector<int>(9, 2), std::vector<int>(8, 3), std::vector<int>(2, 4)); }
BettiData kummer() { return betti(4, std::vector<int>(12, 3), std::vector<int>(12, 4), std::vector<int>(3, 5)); }
BettiData smooth(int d) {
  return betti(d, std::vector<int>(6, d - 1), std::vector<int>(4, 2 * d - 2), std::vector<int>{3 * d - 3});
}
BettiData three_cubics() {
  return betti(9, {1, 4, 4, 7, 7, 8, 8, 8}, {5, 8, 9, 9, 9, 10, 10}, {10, 11});
}

/// Cubic through four samples of 6 H(s + d - 1), by Newton forward differences.
std::array<mpq_class, 4> interpolated_coefficients(const BettiData& b) {
  const int s0 = 60;
  std::array<mpq_class, 4> y;
  for (int i = 0; i < 4; ++i)
    y[static_cast<std::size_t>(i)] =
        mpq_class(static_cast<long>(6 * hilbert_function_from_resolution(b, s0 + i + b.degree - 1)));
  mpq_class d1 = y[1] - y[0], d2 = y[2] - 2 * y[1] + y[0], d3 = y[3] - 3 * y[2] + 3 * y[1] - y[0];
  // p(s) = y0 + d1 (s-s0) + d2 (s-s0)(s-s0-1)/2 + d3 (s-s0)(s-s0-1)(s-s0-2)/6, expanded in s.
  mpq_class a = s0;
  mpq_class c3 = d3 / 6;
  mpq_class c2 = d2 / 2 - d3 / 6 * (3 * a + 3);
  mpq_class c1 = d1 - d2 / 2 * (2 * a + 1) + d3 / 6 * (3 * a * a + 6 * a + 2);
  mpq_class c0 = y[0] - d1 * a + d2 / 2 * (a * a + a) - d3 / 6 * (a * a * a + 3 * a * a + 2 * a);
  return {c3, c2, c1, c0};
}

}  // namespace

TEST_CASE("graded dimensions") {
  CHECK(graded_dim(0, 0) == 1);
  CHECK(graded_dim(0, 3) == 20);
  CHECK(graded_dim(-5, 2) == 0);
  CHECK(graded_dim(0, 2, 3) == 6);
}

TEST_CASE("Hilbert function from Betti data") {
  CHECK(hilbert_function_from_resolution(cayley(), 2) == 6);
  CHECK(hilbert_function_from_resolution(cayley(), 10) == 4);
  auto nf = betti(6, {1, 2, 3, 3}, {4}, {});
  CHECK(hilbert_function_from_resolution(nf, 20) == 293);
}

TEST_CASE("classification") {
  auto c = hilbert_data(cayley());
  CHECK(c.sigma == SigmaDimension::kZero);
  CHECK(*c.tau == 4);
  auto k = hilbert_data(kummer());
  CHECK(*k.tau == 16);
  auto e4 = hilbert_data(three_cubics());
  CHECK(e4.sigma == SigmaDimension::kOne);
  CHECK(*e4.A == 76);
  CHECK(*e4.B == 119);
  CHECK(evaluate(e4, 40) == 38 * 40 - 119);
  auto s = hilbert_data(smooth(3));
  CHECK(s.sigma == SigmaDimension::kEmpty);
  CHECK(*s.tau == 0);
  CHECK(to_string(s.sigma) == "empty");
}

TEST_CASE("identity failure means a non-reduced surface") {
  auto bad = betti(3, {0, 0, 0}, {}, {});
  CHECK(hilbert_data(bad).sigma == SigmaDimension::kTwoOrMore);
  CHECK_THROWS_AS(classify_and_polynomial(bad), NonReducedInput);
}

TEST_CASE("Hilbert polynomial agrees with the Hilbert function from k0 on") {
  for (const auto& b : {cayley(), kummer(), three_cubics(), smooth(3), smooth(4), betti(6, {1, 2, 3, 3}, {4}, {})}) {
    auto hp = hilbert_data(b);
    REQUIRE(hp.k0 >= 0);
    for (int k = hp.k0; k <= hp.scan_bound + 20; ++k)
      CHECK(mpq_class(static_cast<long>(hilbert_function_from_resolution(b, k))) == evaluate(hp, k));
    if (hp.k0 > 0) CHECK(mpq_class(static_cast<long>(hilbert_function_from_resolution(b, hp.k0 - 1))) != evaluate(hp, hp.k0 - 1));
  }
}

TEST_CASE("dimension coefficients match interpolation") {
  for (const auto& b : {cayley(), kummer(), three_cubics(), smooth(3), smooth(4), betti(6, {1, 2, 3, 3}, {4}, {}),
                        betti(12, {1, 4, 4, 11, 11, 11, 11, 11}, {5, 12, 12, 13, 13, 13, 13}, {14, 14})}) {
    auto got = dimension_coefficients(b);
    auto want = interpolated_coefficients(b);
    for (std::size_t i = 0; i < 4; ++i) CHECK(mpq_class(got[i]) == want[i]);
    CHECK(got[0] == 0);
    CHECK(got[1] == 0);
  }
  CHECK(dimension_coefficients(cayley())[0] == 0);
  // the linear coefficient is 6 (A/2)
  CHECK(dimension_coefficients(three_cubics())[2] == 228);
  auto s = dimension_coefficients(smooth(3));
  CHECK(s[2] == 0);
  CHECK(s[3] == 0);
}
