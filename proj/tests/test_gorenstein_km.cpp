#include <random>

#include "acmgate/binomial.hpp"
#include "acmgate/errors.hpp"
#include "acmgate/gorenstein_km.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using acm::CurveInvariants;
using acm::GorensteinResolution;
using acm::Poly;
using acm::Rational;

namespace {

Poly v(const char* name) { return Poly::var(name); }
CurveInvariants sub(std::int64_t d, int e) { return CurveInvariants::subcanonical(Poly(d), e); }

const GorensteinResolution canonical(1, {{2, Poly(3)}, {3, v("x")}});
const GorensteinResolution degree55(6, {{5, Poly(11)}});
const GorensteinResolution c1_4(5, {{4, Poly(5)}, {5, v("x")}});
const GorensteinResolution degree14(3, {{2, Poly(3)}, {5, Poly(2)}});
const GorensteinResolution degree16(3, {{2, Poly(2)}, {3, v("a")}, {4, v("b")}, {5, v("x")}});
const GorensteinResolution degree18(3, {{2, Poly(1)}, {3, Poly(2)}, {4, v("b")}});
const GorensteinResolution degree20(3, {{3, Poly(4)}, {4, v("b")}});
const GorensteinResolution plane_cubic(0, {{1, Poly(2)}, {3, Poly(1)}});
const GorensteinResolution quartic_ci(0, {{1, Poly(1)}, {2, Poly(2)}});
const GorensteinResolution quintic(0, {{2, Poly(5)}});
const GorensteinResolution c1_3(4, {{3, v("x")}, {4, v("a")}, {5, v("b")}});
const GorensteinResolution line(-2, {{1, Poly(3)}});

Poly under_constraints(const GorensteinResolution& res, const CurveInvariants& inv, const Poly& p) {
  return acm::apply(acm::hilbert_constraints(res, inv), p);
}

}  // namespace

TEST_CASE("curve invariants") {
  auto inv = sub(55, 6);
  CHECK(inv.g == Poly(166));
  CHECK_NOTHROW(inv.validate());
  CHECK_THROWS_AS((CurveInvariants{Poly(5), Poly(2), 0}).validate(), acm::InvalidInput);
  acm::BundleInvariants bundle{5, Poly(55), acm::HypersurfaceContext(6)};
  CHECK(CurveInvariants::from_bundle(bundle) == inv);
  CHECK(sub(40, 5).g == Poly(101));
}

TEST_CASE("resolution construction") {
  CHECK_THROWS_WITH(GorensteinResolution(0, {}), doctest::Contains("no generators"));
  CHECK(degree14.top_twist() == 8);
  auto syz = degree14.syzygies();
  REQUIRE(syz.size() == 2);
  CHECK(syz[0].twist == 3);
  CHECK(syz[1].twist == 6);
  CHECK(c1_3.unknowns() == std::set<std::string>{"a", "b", "x"});
}

TEST_CASE("ideal sections") {
  CHECK(acm::h0_ideal(canonical, 6) == Poly(166));
  CHECK(acm::h0_ideal(degree55, 6) == Poly(44));
  CHECK(acm::h0_ideal(line, 6) == Poly(203));
  CHECK(acm::h0_ideal(plane_cubic, 6) == Poly(192));
  CHECK(acm::h0_ideal(quartic_ci, 6) == Poly(186));
  CHECK(acm::h0_ideal(quintic, 6) == Poly(180));
  for (const auto* res : {&canonical, &degree55, &degree14, &plane_cubic, &line}) {
    CHECK(acm::h0_ideal(*res, 0) == Poly(0));
  }
}

TEST_CASE("curve sections") {
  CHECK(acm::h0_curve(degree55, 5) == Poly(115));
  CHECK(acm::h0_curve(degree55, 1) + Poly(110) == Poly(115));
  CHECK(acm::h0_curve(degree14, 2) == Poly(12));
  CHECK(acm::h0_curve(degree14, 0) == Poly(1));
  CHECK(acm::h0_curve(canonical, 0) == Poly(1));
}

TEST_CASE("curve sections from invariants") {
  auto d14 = CurveInvariants{Poly(14), Poly(15), 2};
  CHECK(acm::h0_curve_from_invariants(d14, 6) == Poly(70));
  CHECK(Poly(acm::hdim(6)) - acm::h0_curve_from_invariants(d14, 6) == Poly(140));
  auto d11 = CurveInvariants{Poly(11), Poly(12), 2};
  CHECK(acm::h0_curve_from_invariants(d11, 6) == Poly(55));
  CHECK(acm::h0_curve_from_invariants(d11, -1) == Poly(0));
  CHECK_THROWS_AS(acm::h0_curve_from_invariants(d11, 2), acm::SpecialRange);
  CHECK_THROWS_WITH(acm::h0_curve_from_invariants(d11, 0), doctest::Contains("special range: resolution required"));
}

TEST_CASE("hilbert constraints") {
  auto c13 = acm::hilbert_constraints(c1_3, CurveInvariants::subcanonical(v("d"), 4), {"x", "b"});
  REQUIRE(c13.size() == 2);
  CHECK(c13[0].unknown == "x");
  CHECK(c13[0].value == Poly::parse("30 - d"));
  CHECK(acm::apply(c13, v("b") - v("a")) == Poly::parse("3*(27 - d)"));

  auto m = acm::hilbert_constraints(GorensteinResolution(6, {{5, v("m")}}), sub(55, 6));
  REQUIRE(m.size() == 1);
  CHECK(m[0].str() == "m = 11");

  auto c = acm::hilbert_constraints(GorensteinResolution(1, {{2, v("c")}, {3, v("x")}}), sub(8, 1));
  REQUIRE(c.size() == 1);
  CHECK(c[0].str() == "c = 3");

  CHECK_THROWS_AS(acm::hilbert_constraints(degree55, sub(54, 6)), acm::InconsistentConstraints);
  CHECK_THROWS_WITH(acm::hilbert_constraints(degree55, sub(54, 6)),
                    doctest::Contains("resolution shape incompatible with (d,g,e)"));
}

TEST_CASE("normal bundle dimensions") {
  CHECK(acm::km_h0_normal(canonical) == Poly(36));
  CHECK(acm::km_h0_normal(degree55) == Poly(154));
  CHECK(acm::km_h0_normal(c1_4) == Poly(125));
  CHECK(acm::km_h0_normal(degree14) == Poly(62));
  CHECK(acm::km_h0_normal(plane_cubic) == Poly(15));
  CHECK(acm::km_h0_normal(quartic_ci) == Poly(20));
  CHECK(acm::km_h0_normal(quintic) == Poly(25));
  CHECK(acm::km_h0_normal(line) == Poly(6));
  CHECK(under_constraints(degree16, sub(16, 3), acm::km_h0_normal(degree16)) == Poly(66));
  CHECK(under_constraints(degree18, sub(18, 3), acm::km_h0_normal(degree18)) == Poly(70));
  CHECK(under_constraints(degree20, sub(20, 3), acm::km_h0_normal(degree20)) == Poly(74));
}

TEST_CASE("unknown multiplicities cancel") {
  CHECK(acm::km_h0_normal(canonical).is_constant());
  CHECK(acm::km_h0_normal(c1_4).is_constant());
  for (const auto* res : {&degree16, &degree18, &degree20}) {
    CurveInvariants inv = sub(res == &degree16 ? 16 : res == &degree18 ? 18 : 20, 3);
    CHECK(under_constraints(*res, inv, acm::km_h0_normal(*res)).is_constant());
    CHECK(under_constraints(*res, inv, acm::h0_ideal(*res, 6)).is_constant());
  }
}

TEST_CASE("master formulas for c1 = 3") {
  auto inv = CurveInvariants::subcanonical(v("d"), 4);
  auto s = acm::hilbert_constraints(c1_3, inv, {"x", "b"});
  CHECK(acm::apply(s, acm::km_h0_normal(c1_3)) == Poly::parse("69 + d"));
  CHECK(acm::apply(s, acm::h0_ideal(c1_3, 6)) == Poly::parse("210 - 4*d"));
  // The free multiplicity cancels whichever way the system is pivoted.
  auto s2 = acm::hilbert_constraints(c1_3, inv, {"x", "a"});
  CHECK(acm::apply(s2, acm::km_h0_normal(c1_3)) == Poly::parse("69 + d"));
}

TEST_CASE("gates") {
  auto r55 = acm::flag_gate(degree55, sub(55, 6));
  CHECK(r55.bound == Poly(197));
  CHECK(r55.verdict == acm::Verdict::DominantImpossible);
  auto r20 = acm::flag_gate(degree20, sub(20, 3));
  CHECK(r20.h0N == Poly(74));
  CHECK(r20.h0I == Poly(120));
  CHECK(r20.bound == Poly(193));
  auto r14 = acm::flag_gate(degree14, sub(14, 3));
  CHECK(r14.bound == Poly(208));
  CHECK(r14.verdict == acm::Verdict::DominantImpossible);
  CHECK(acm::flag_gate(c1_4, sub(40, 5)).bound == Poly(194));

  acm::GateOptions tight;
  tight.ambient_dim = 208;
  auto close = acm::flag_gate(degree14, sub(14, 3), tight);
  CHECK(close.verdict == acm::Verdict::Inconclusive);
  REQUIRE(close.residual.has_value());

  auto line_gate = acm::flag_gate(line, sub(1, -2));
  CHECK(line_gate.h0I == Poly(203));
  CHECK(line_gate.bound == Poly(208));
}

TEST_CASE("symbolic gate and scan") {
  acm::GateOptions options;
  options.pivot_order = {"x", "b"};
  auto report = acm::flag_gate(c1_3, CurveInvariants::subcanonical(v("d"), 4), options);
  CHECK(report.bound == Poly::parse("278 - 3*d"));
  CHECK(report.verdict == acm::Verdict::Inconclusive);
  auto passing = acm::gate_scan(report, "d", 1, 30);
  REQUIRE_FALSE(passing.empty());
  CHECK(passing.front() == 24);
  CHECK(passing.back() == 30);
  CHECK(passing.size() == 7);

  options.domains = {{"d", {24, 30}}, {"a", {0, 50}}};
  CHECK(acm::flag_gate(c1_3, CurveInvariants::subcanonical(v("d"), 4), options).verdict ==
        acm::Verdict::DominantImpossible);
  options.domains["d"] = {20, 30};
  auto witness = acm::flag_gate(c1_3, CurveInvariants::subcanonical(v("d"), 4), options);
  CHECK(witness.verdict == acm::Verdict::Inconclusive);
  REQUIRE(witness.witness.has_value());
  CHECK(witness.witness->at("d") < Rational(24));
}

TEST_CASE("cited gates") {
  const std::int64_t degrees[] = {14, 13, 12, 11};
  const std::int64_t cited[] = {56, 53, 50, 47};
  const std::int64_t ideal[] = {140, 145, 150, 155};
  const std::int64_t bounds[] = {195, 197, 199, 201};
  for (int i = 0; i < 4; ++i) {
    auto report = acm::flag_gate_cited(Poly(cited[i]), sub(degrees[i], 2));
    CHECK(report.h0I == Poly(ideal[i]));
    CHECK(report.bound == Poly(bounds[i]));
    CHECK(report.verdict == acm::Verdict::DominantImpossible);
  }
}

TEST_CASE("fixtures agree with the oracles") {
  auto instances = fixtures::concrete_instances();
  CHECK(instances.size() >= 15);
  for (const auto& c : instances) {
    CAPTURE(c.name);
    auto betti = fixtures::to_betti(c);
    for (int n = -5; n <= c.e + 10; ++n) {
      CHECK(acm::h0_ideal(c.res, n) == Poly(oracle::h0_ideal(betti, n)));
    }
    auto [d, g] = oracle::degree_genus([&](int n) { return oracle::h0_curve(betti, n); });
    CHECK(d == c.d);
    CHECK(g == c.g);
    CHECK(acm::km_h0_normal(c.res) == Poly(oracle::km(betti)));
  }
}

TEST_CASE("fixture properties") {
  for (const auto& c : fixtures::concrete_instances()) {
    CAPTURE(c.name);
    CurveInvariants inv{Poly(c.d), Poly(c.g), c.e};
    for (const auto& p : c.res.pairs()) CHECK(p.twist + c.res.syzygy_twist(p.twist) == c.e + 5);
    for (int n = -5; n <= c.e + 10; ++n) {
      Poly lhs = acm::h0_curve(c.res, n) - acm::h0_curve(c.res, c.e - n);
      CHECK(lhs == Poly(n * c.d + 1 - c.g));
      if (n < 0 || n > c.e) CHECK(acm::h0_curve(c.res, n) == acm::h0_curve_from_invariants(inv, n));
    }
  }
}

TEST_CASE("normal bundle dimension ignores the order of tied pairs") {
  std::vector<acm::GorensteinPair> pairs = {{2, Poly(1)}, {3, v("y")}, {2, Poly(2)}, {5, v("x")}, {3, Poly(1)},
                                             {4, v("b")}, {5, Poly(1)}};
  const Poly expected = acm::km_h0_normal(GorensteinResolution(3, pairs));
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 100; ++trial) {
    std::shuffle(pairs.begin(), pairs.end(), rng);
    CHECK(acm::km_h0_normal(GorensteinResolution(3, pairs)) == expected);
  }
  // Splitting a block into two tied blocks changes nothing either.
  CHECK(acm::km_h0_normal(GorensteinResolution(0, {{2, Poly(2)}, {2, Poly(3)}})) == Poly(25));
}
