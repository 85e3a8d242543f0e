#include "acmgate/errors.hpp"
#include "acmgate/liaison.hpp"
#include "acmgate/report.hpp"
#include "doctest.h"
#include "oracles.hpp"

using acm::CIType;
using acm::GradedComplex;
using acm::Poly;
using acm::Position;

namespace {

std::vector<int> twists(const std::vector<acm::Summand>& term) {
  std::vector<int> out;
  for (const auto& s : term) {
    for (std::int64_t i = 0; i < s.mult.constant_value()->to_int64(); ++i) out.push_back(s.twist);
  }
  return out;
}

// Degree and genus from the numeric Hilbert function of a concrete complex.
std::pair<std::int64_t, std::int64_t> numeric_degree_genus(const GradedComplex& cx) {
  auto h0_ideal = [&](int n) {
    std::int64_t total = 0;
    for (int i = 1; i <= 3; ++i) {
      for (int t : twists(cx.term(i))) total += (i == 2 ? -1 : 1) * oracle::h0_p4(n - t);
    }
    return total;
  };
  return oracle::degree_genus([&](int n) { return oracle::h0_p4(n) - h0_ideal(n); });
}

struct Linkage {
  CIType inner;
  CIType outer;
};

// Complete intersections inside complete intersections: each outer form is a
// multiple of an inner one.
const std::vector<Linkage> battery = {
    {{1, 1, 1}, {1, 1, 2}}, {{1, 1, 2}, {1, 2, 2}}, {{1, 1, 3}, {1, 3, 3}}, {{1, 1, 4}, {1, 2, 4}},
    {{1, 2, 2}, {2, 2, 3}}, {{1, 2, 3}, {2, 3, 3}}, {{2, 2, 2}, {2, 2, 5}}, {{1, 1, 2}, {2, 2, 5}},
    {{1, 2, 5}, {2, 2, 5}}, {{2, 2, 3}, {3, 3, 4}}, {{1, 3, 3}, {3, 3, 5}}, {{2, 3, 4}, {3, 4, 5}},
    {{1, 1, 1}, {2, 3, 4}}, {{1, 1, 5}, {2, 2, 5}},
};

}  // namespace

TEST_CASE("complete intersection types") {
  CHECK_THROWS_AS(CIType(0, 1, 2), acm::InvalidInput);
  CIType ci(2, 2, 5);
  CHECK(ci.sum() == 9);
  CHECK(ci.degree() == 20);
}

TEST_CASE("koszul resolutions") {
  auto k = acm::koszul_resolution(CIType(2, 2, 5));
  CHECK(twists(k.term(1)) == std::vector<int>{2, 2, 5});
  CHECK(twists(k.term(2)) == std::vector<int>{4, 7, 7});
  CHECK(twists(k.term(3)) == std::vector<int>{9});
  CHECK(acm::koszul_resolution(CIType(1, 1, 1)).h0(6) == Poly(203));
  auto cubic = acm::degree_genus(acm::koszul_resolution(CIType(1, 1, 3)));
  CHECK(cubic.d == Poly(3));
  CHECK(cubic.g == Poly(1));
}

TEST_CASE("degree and genus") {
  auto k225 = acm::degree_genus(acm::koszul_resolution(CIType(2, 2, 5)));
  CHECK(k225.d == Poly(20));
  CHECK(k225.g == Poly(1 + (9 - 5) * 20 / 2));
  auto line = acm::degree_genus(acm::koszul_resolution(CIType(1, 1, 1)));
  CHECK(line.d == Poly(1));
  CHECK(line.g == Poly(0));
  auto d55 = acm::degree_genus(acm::as_complex(acm::GorensteinResolution(6, {{5, Poly(11)}})));
  CHECK(d55.d == Poly(55));
  CHECK(d55.g == Poly(166));

  GradedComplex hyperplane({{1, Poly(1)}}, {}, {});
  CHECK_THROWS_AS(acm::degree_genus(hyperplane), acm::NotACurveComplex);
  CHECK_THROWS_WITH(acm::degree_genus(hyperplane), doctest::Contains("not a curve complex"));
}

TEST_CASE("link examples") {
  auto quartic = acm::link(acm::koszul_resolution(CIType(1, 1, 4)), CIType(1, 2, 4));
  auto dg = acm::degree_genus(quartic);
  CHECK(dg.d == Poly(4));
  CHECK(dg.g == Poly(3));
  CHECK(acm::degree_genus(acm::link(acm::koszul_resolution(CIType(1, 1, 3)), CIType(1, 3, 3))).d == Poly(6));

  auto d14 = acm::as_complex(acm::GorensteinResolution(3, {{2, Poly(3)}, {5, Poly(2)}}));
  auto linked = acm::link(d14, CIType(2, 2, 5));
  CHECK(acm::degree_genus(linked).d == Poly(6));
  CHECK(linked.multiplicity(1, 2) != Poly(0));
  CHECK(linked.multiplicity(2, 7) != Poly(0));
  CHECK(linked.rank_alternating_sum() == Poly(1));

  GradedComplex broken({{2, Poly(2)}}, {}, {});
  CHECK_THROWS_AS(acm::link(broken, CIType(2, 2, 5)), acm::NotACurveComplex);
}

TEST_CASE("linkage battery") {
  REQUIRE(battery.size() >= 10);
  for (const auto& [inner, outer] : battery) {
    CAPTURE(inner.str());
    CAPTURE(outer.str());
    GradedComplex c = acm::koszul_resolution(inner);
    GradedComplex linked = acm::link(c, outer);
    auto [d, g] = numeric_degree_genus(c);
    auto [d2, g2] = numeric_degree_genus(linked);
    CHECK(d + d2 == outer.degree());
    CHECK(2 * (g - g2) == (outer.sum() - 5) * (d - d2));
    CHECK(acm::degree_genus(linked).d == Poly(d2));
    CHECK(acm::degree_genus(linked).g == Poly(g2));
    CHECK(linked.rank_alternating_sum() == Poly(1));

    auto back = acm::degree_genus(acm::link(linked, outer));
    CHECK(back.d == Poly(d));
    CHECK(back.g == Poly(g));
  }
}

TEST_CASE("symbolic multiplicities propagate") {
  auto c13 = acm::as_complex(acm::GorensteinResolution(4, {{3, Poly::var("x")}, {4, Poly::var("a")}, {5, Poly::var("b")}}));
  auto linked = acm::link(c13, CIType(3, 3, 5));
  CHECK(linked.multiplicity(3, 8) == Poly::var("x"));
  CHECK(linked.unknowns() == std::set<std::string>{"a", "b", "x"});
}

TEST_CASE("cancelling pairs") {
  auto k = acm::koszul_resolution(CIType(2, 2, 5));
  CHECK(acm::cancel_pair(k, Position::F1F2, 4, Poly(0)) == k);
  CHECK_THROWS_AS(acm::cancel_pair(k, Position::F1F2, 4, Poly(1)), acm::InsufficientMultiplicity);

  auto padded = GradedComplex(
      {{2, Poly(2)}, {5, Poly(1)}, {6, Poly(1)}}, {{4, Poly(1)}, {6, Poly(1)}, {7, Poly(2)}}, {{9, Poly(1)}});
  auto cancelled = acm::cancel_pair(padded, Position::F1F2, 6, Poly(1));
  CHECK(cancelled == k);
  CHECK(acm::degree_genus(padded) == acm::degree_genus(cancelled));
  CHECK(acm::parse_position("23") == Position::F2F3);
  CHECK_THROWS_AS(acm::parse_position("13"), acm::ParseError);
}

TEST_CASE("self-dual reductions") {
  auto k = acm::koszul_resolution(CIType(2, 2, 5));
  auto found = acm::gorenstein_reductions(k, 4);
  REQUIRE(found.size() == 1);
  CHECK(acm::as_complex(found.front()) == k);
  CHECK(acm::gorenstein_reductions(k, 3).empty());
}

TEST_CASE("c1 = 2 curves in three quadrics come from plane quartics") {
  auto solutions = acm::c1_2_lemma_solutions();
  REQUIRE(solutions.size() == 1);
  const auto& s = solutions.front();
  CHECK(s.plane_degree == 4);
  CHECK(s.x == 2);
  CHECK(s.a == 0);
  CHECK(s.b == 0);
  CHECK(s.c == 3);
  CHECK(acm::degree_genus(acm::as_complex(s.resolution)).d == Poly(14));
}

TEST_CASE("c1 = 3 linkage chain") {
  auto steps = acm::c1_3_chain();
  REQUIRE(steps.size() == 4);
  CHECK(steps[0].invariants.d == Poly::var("d"));
  CHECK(steps[1].invariants.d == Poly::parse("45 - d"));
  CHECK(steps[2].invariants.d == Poly::parse("d - 15"));
  CHECK(steps[3].invariants.d == Poly::parse("31 - d"));

  // C' has one quadric generator and the shape printed for it.
  const auto& c1 = steps[1].complex;
  CHECK(twists(c1.term(1)) == std::vector<int>{2, 3, 3, 5});
  CHECK(c1.multiplicity(3, 8) == Poly::parse("x - 2"));
  CHECK(c1.multiplicity(3, 6) == Poly::parse("b - 1"));

  // C'': O(-5)^(x-1) + O(-4)^a + O(-3)^(b+eps-1) -> O(-4)^(b-1) + O(-3)^(a+eps) + O(-2)^(x-1).
  const auto& c2 = steps[2].complex;
  CHECK(c2.multiplicity(1, 2) == Poly::parse("x - 1"));
  CHECK(c2.multiplicity(1, 3) == Poly::parse("a + eps"));
  CHECK(c2.multiplicity(1, 4) == Poly::parse("b - 1"));
  CHECK(c2.multiplicity(2, 5) == Poly::parse("x - 1"));
  CHECK(c2.multiplicity(2, 4) == Poly::var("a"));
  CHECK(c2.multiplicity(2, 3) == Poly::parse("b + eps - 1"));
  CHECK(twists(c2.term(3)) == std::vector<int>{7});

  // C''' lies in a hyperplane and two quadrics.
  const auto& c3 = steps[3].complex;
  CHECK(c3.multiplicity(1, 1) == Poly(1));
  CHECK(c3.multiplicity(1, 2) == Poly(2));
  for (int eps : {0, 1}) {
    auto branch = c3.partial_eval({{"eps", acm::Rational(eps)}});
    CHECK(branch.rank_alternating_sum() == Poly(1));
  }
}
