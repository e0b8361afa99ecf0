#include <doctest.h>

#include "bettiforge/corpus.hpp"
#include "bettiforge/report.hpp"
#include "support/test_support.hpp"

using namespace bettiforge;
using bftest::parse;
using nlohmann::ordered_json;

TEST_CASE("surface report JSON") {
  auto R = bftest::qring();
  auto j = ordered_json::parse(serialize_report(analyze_surface(parse(R, "xyz+xyt+xzt+yzt"))));
  CHECK(j["schema"] == "betti-forge/1");
  CHECK(j["kind"] == "surface");
  CHECK(j["tau"] == 4);
  CHECK(j["betti"]["d"] == std::vector<int>(9, 2));
  CHECK(j["betti"]["c"] == std::vector<int>(8, 3));
  CHECK(j["betti"]["b"] == std::vector<int>{4, 4});
  CHECK(j["bounds"]["tau_window"]["upper"] == 8);
  CHECK(j["resolution_text"] == "0 -> S(-6)^2 -> S(-5)^8 -> S(-4)^9 -> S(-2)^4 -> S");

  auto s = ordered_json::parse(serialize_report(analyze_surface(parse(R, "x^3+y^3+z^3+t^3"))));
  CHECK(s["sigma_dimension"] == "empty");
  CHECK(s["classification"] == "smooth");
  CHECK(s["tau"] == 0);

  auto n = ordered_json::parse(serialize_report(analyze_surface(parse(R, "x^5z+y^6+x^4yt+xy^5"))));
  CHECK(n["hilbert_polynomial"]["A_half"] == 16);
  CHECK(n["hilbert_polynomial"]["B"] == 27);
  CHECK(n["tau"].is_null());
}

TEST_CASE("key order is stable") {
  auto R = bftest::qring();
  auto r = analyze_surface(parse(R, "xyz-t^3"));
  CHECK(serialize_report(r) == serialize_report(r));
  auto j = ordered_json::parse(serialize_report(r));
  CHECK(j.begin().key() == "schema");
}

TEST_CASE("rationals") {
  CHECK(rational_json(mpq_class(6, 3)) == 2);
  auto h = rational_json(mpq_class(1, 3));
  CHECK(h["num"] == "1");
  CHECK(h["den"] == "3");
}

TEST_CASE("the verifier and the analyzer share one arithmetic path") {
  for (const auto& e : corpus_entries()) {
    if (e.slow) continue;
    auto res = run_corpus_entry(e);
    REQUIRE(res.report.has_value());
    const auto& a = res.report->arithmetic;
    CHECK(arithmetic_json(betti_arithmetic(a.betti)) == arithmetic_json(a));
  }
}

TEST_CASE("verifier on printed Betti data") {
  BettiData e4{9, {1, 4, 4, 7, 7, 8, 8, 8}, {5, 8, 9, 9, 9, 10, 10}, {10, 11}};
  auto a = betti_arithmetic(e4);
  CHECK(ratio(*a.hilbert.A, 2) == 38);
  CHECK(*a.hilbert.B == 119);
  CHECK(a.type->t == 1);
  CHECK(a.type->beta[0] == 0);

  BettiData e5{16, {5, 5, 6, 6, 6, 12, 12, 12, 12, 13, 13, 15}, {7, 7, 8, 13, 13, 13, 13, 14, 14, 14, 16, 16}, {14, 15, 17}};
  auto b = betti_arithmetic(e5);
  CHECK(b.type->t == 1);
  CHECK(b.type->alpha[8] == -1);
  CHECK(b.type->beta[0] == 0);
  CHECK(b.type->beta[1] == -1);
  CHECK(ratio(*b.hilbert.A, 2) == 147);
  CHECK(*b.hilbert.B == 1382);

  BettiData smooth{3, std::vector<int>(6, 2), std::vector<int>(4, 4), {6}};
  CHECK(arithmetic_json(betti_arithmetic(smooth))["classification"] == "smooth");

  BettiData broken{5, {1, 2}, {}, {}};
  auto x = betti_arithmetic(broken);
  CHECK(!x.identities.count_check);
  CHECK(!x.shape_ok);
}

TEST_CASE("text rendering") {
  auto R = bftest::qring();
  auto t = render_text(analyze_surface(parse(R, "x^4+y^4+z^4+t^4-y^2z^2-z^2x^2-x^2y^2-x^2t^2-y^2t^2-z^2t^2")));
  CHECK(t.find("d = (3_12), c = (4_12), b = (5_3)") != std::string::npos);
  CHECK(t.find("tau = 16") != std::string::npos);
}
