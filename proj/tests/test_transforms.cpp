#include <doctest.h>

#include "invariants.hpp"
#include "support.hpp"
#include "transforms.hpp"

using namespace nsvsi;
using namespace nsvsi::testsupport;

namespace {

ParseContext chart_cx(const MetricInstance& m) {
  ParseContext cx;
  cx.coords = m.chart.names;
  cx.registry = m.registry.get();
  for (const auto& [k, v] : m.params) cx.params.insert(k);
  return cx;
}

template <class T>
std::array<T, 4> pt4(SampleStream& rng, double lo4, double hi4) {
  std::array<T, 4> p;
  for (int i = 0; i < 4; ++i) {
    auto [n, d] = rng.next_ratio(i == 3 ? lo4 : -1.0, i == 3 ? hi4 : 1.5);
    p[i] = scalar_traits<T>::from_ratio(n, d);
  }
  return p;
}

// Mobius generator with exact rational inverse, pole outside u1 in (0, 3)
transforms::TransformSpec mobius_rescale(transforms::Kind kind, const MetricInstance& m) {
  transforms::TransformSpec t;
  t.kind = kind;
  auto cx = chart_cx(m);
  t.g = parse("(2*u1 + 1)/(u1 + 3)", cx);
  t.g_inverse = parse("(3*u1 - 1)/(2 - u1)", cx);
  return t;
}

}  // namespace

TEST_CASE("null-shift with h = 0 is the identity on parameters") {
  SampleStream rng(163);
  auto m = random_branchA(rng);
  transforms::TransformSpec t;
  t.kind = transforms::Kind::NullShift;
  t.h = ex::num(0);
  auto mp = transforms::transform_params(m, t);
  for (const char* s : {"H1", "H0", "W1_u2", "W0_u2", "W0_v2"})
    CHECK(structural_equal(m.slot(s), mp.slot(s)));
}

TEST_CASE("form preservation: exact in rational mode for every kind") {
  SampleStream rng(167);

  SUBCASE("null-shift") {
    auto m = random_branchA(rng);
    transforms::TransformSpec t;
    t.kind = transforms::Kind::NullShift;
    auto cx = chart_cx(m);
    t.h = parse("u2*v2 + u1^2*v2", cx);
    auto mp = transforms::transform_params(m, t);
    for (int k = 0; k < 5; ++k) {
      auto p = pt4<Rational>(rng, 0.5, 2.0);
      CHECK(transforms::verify_form_preservation<Rational>(m, mp, t, p) == Rational(0));
    }
  }
  SUBCASE("null-rescale (Mobius)") {
    auto m = random_branchA(rng);
    auto t = mobius_rescale(transforms::Kind::NullRescale, m);
    auto mp = transforms::transform_params(m, t);
    for (int k = 0; k < 5; ++k) {
      auto p = pt4<Rational>(rng, 0.5, 2.0);
      p[1] = scalar_traits<Rational>::from_ratio(1 + static_cast<long long>(k), 4);
      CHECK(transforms::verify_form_preservation<Rational>(m, mp, t, p) == Rational(0));
    }
  }
  SUBCASE("st-shift") {
    auto m = random_st_solution(rng);
    transforms::TransformSpec t;
    t.kind = transforms::Kind::StShift;
    auto cx = chart_cx(m);
    t.h = parse("u1*T + X^2", cx);
    auto mp = transforms::transform_params(m, t);
    for (int k = 0; k < 5; ++k) {
      auto p = pt4<Rational>(rng, 0.5, 3.0);
      CHECK(transforms::verify_form_preservation<Rational>(m, mp, t, p) == Rational(0));
    }
  }
  SUBCASE("st-rescale (Mobius)") {
    auto m = random_st_solution(rng);
    auto t = mobius_rescale(transforms::Kind::StRescale, m);
    auto mp = transforms::transform_params(m, t);
    for (int k = 0; k < 5; ++k) {
      auto p = pt4<Rational>(rng, 0.5, 3.0);
      p[1] = scalar_traits<Rational>::from_ratio(2 + static_cast<long long>(k), 4);
      CHECK(transforms::verify_form_preservation<Rational>(m, mp, t, p) == Rational(0));
    }
  }
  SUBCASE("csi2-shift") {
    auto m = families::csi2_solved(
        {{"B", {1, 2}}, {"a0", {1, 3}}, {"b0", {-1, 2}}, {"d0", {3, 4}}});
    transforms::TransformSpec t;
    t.kind = transforms::Kind::Csi2Shift;
    auto cx = chart_cx(m);
    t.h = parse("u*V^2 + U*u", cx);
    auto mp = transforms::transform_params(m, t);
    for (int k = 0; k < 5; ++k) {
      auto p = pt4<Rational>(rng, 0.5, 3.0);
      CHECK(transforms::verify_form_preservation<Rational>(m, mp, t, p) == Rational(0));
    }
  }
}

TEST_CASE("invariant battery is unchanged at corresponding points") {
  SampleStream rng(173);
  auto m = random_branchB(rng);
  transforms::TransformSpec t;
  t.kind = transforms::Kind::NullShift;
  auto cx = chart_cx(m);
  t.h = parse("u2*v2", cx);
  auto mp = transforms::transform_params(m, t);
  auto F = transforms::coordinate_map(m, t);
  auto params = param_values<double>(m);
  EvalContext<double> ecx{m.registry.get(), &params, 0};
  for (int k = 0; k < 3; ++k) {
    auto p = pt4<double>(rng, 0.5, 2.0);
    std::array<double, 4> img;
    for (int i = 0; i < 4; ++i) img[i] = eval_jet(F[i], m.chart.names, p, ecx).value();
    auto b1 = compute_battery(curvature_at(m, p, 3));
    auto b2 = compute_battery(curvature_at(mp, img, 3));
    for (int i = 0; i < 9; ++i)
      CHECK(std::fabs(b1.v[static_cast<std::size_t>(i)] -
                      b2.v[static_cast<std::size_t>(i)]) < 1e-10);
  }
}

TEST_CASE("null-shift composition: h1 then h2 equals h1 + h2") {
  SampleStream rng(181);
  auto m = random_branchA(rng);
  auto cx = chart_cx(m);
  Expr h1 = parse("u2*v2", cx);
  Expr h2 = parse("u1*v2^2", cx);
  transforms::TransformSpec t1{transforms::Kind::NullShift, h1, nullptr, nullptr};
  transforms::TransformSpec t2{transforms::Kind::NullShift, h2, nullptr, nullptr};
  transforms::TransformSpec t12{transforms::Kind::NullShift, ex::add({h1, h2}), nullptr,
                                nullptr};
  auto seq = transforms::transform_params(transforms::transform_params(m, t1), t2);
  auto oneshot = transforms::transform_params(m, t12);
  auto params = param_values<Rational>(m);
  EvalContext<Rational> ecx{m.registry.get(), &params, 0};
  for (int k = 0; k < 4; ++k) {
    auto p = pt4<Rational>(rng, 0.5, 2.0);
    for (const char* s : {"H1", "H0", "W1_u2", "W0_u2", "W0_v2"}) {
      Rational a = eval_jet(seq.slot(s), seq.chart.names, p, ecx).value();
      Rational b = eval_jet(oneshot.slot(s), oneshot.chart.names, p, ecx).value();
      CHECK(a == b);
    }
  }
}

TEST_CASE("gauge fixing zeroes W0_v2 via a null shift") {
  SampleStream rng(191);
  auto m0 = random_branchA(rng);
  auto cx = chart_cx(m0);
  transforms::TransformSpec mess{transforms::Kind::NullShift, parse("v2^2*u1", cx), nullptr,
                                 nullptr};
  auto m = transforms::transform_params(m0, mess);
  REQUIRE(!is_literal_zero(m.slot("W0_v2")));
  // primed W0_v2 = -d(v2^2*u1)/dv2 = -2*u1*v2; h with h_{,v2} equal to that
  Expr h = parse("-(v2^2*u1)", cx);
  auto fixed = transforms::gauge_fix(m, "W0_v2", h);
  CHECK(is_literal_zero(fixed.metric.slot("W0_v2")));
  // already-zero target: identity transform
  auto again = transforms::gauge_fix(fixed.metric, "W0_v2", ex::num(0));
  CHECK(is_literal_zero(again.metric.slot("W0_v2")));
}

TEST_CASE("gauge fixing uses a registered antiderivative when h is omitted") {
  auto reg = std::make_shared<FunctionRegistry>();
  ParseContext b2;
  b2.coords = {"u1", "u2", "v2"};
  b2.registry = reg.get();
  reg->define("w", {"u1", "u2", "v2"}, parse("u1*v2", b2));
  reg->define("Wanti", {"u1", "u2", "v2"}, parse("u1*v2^2/2", b2));
  reg->declare_antiderivative("w", "v2", "Wanti");
  families::NullVsiParams p;
  p.W1u2 = ex::num(0);
  p.W0u2 = ex::num(0);
  p.W0v2 = ex::apply("w", {ex::coord("u1"), ex::coord("u2"), ex::coord("v2")});
  p.H1 = ex::num(0);
  p.H0 = ex::num(0);
  auto m = families::null_vsi(p, reg, {});
  auto fixed = transforms::gauge_fix(m, "W0_v2");
  CHECK(is_literal_zero(fixed.metric.slot("W0_v2")));
}

TEST_CASE("gauge fixing zeroes WV0 for csi2") {
  families::Csi2Params p;
  p.H1 = ex::num(0);
  p.H0 = ex::num(0);
  p.WU0 = ex::num(0);
  p.WV0 = ex::mul({ex::ratio(1, 2), ex::pow(ex::coord("V"), 2)});
  auto m = families::csi2(p, nullptr, {{"B", {1, 2}}});
  // h_V - 2h/V = WV0; for WV0 = (1/2)V^2 take h = (1/2)V^3
  Expr h = ex::mul({ex::ratio(1, 2), ex::pow(ex::coord("V"), 3)});
  auto fixed = transforms::gauge_fix(m, "WV0", h);
  CHECK(is_literal_zero(fixed.metric.slot("WV0")));
}

TEST_CASE("gauge target epsilon is handled by the branch-B constructor") {
  SampleStream rng(193);
  auto m = random_branchB(rng);
  CHECK_THROWS_WITH_AS(transforms::gauge_fix(m, "epsilon"), doctest::Contains("branch-B"),
                       Error);
}

TEST_CASE("incompatible transform kinds are rejected") {
  SampleStream rng(197);
  auto m = random_branchA(rng);
  transforms::TransformSpec t;
  t.kind = transforms::Kind::StShift;
  t.h = ex::num(0);
  CHECK_THROWS_AS(transforms::transform_params(m, t), Error);
}

TEST_CASE("a wrong rescale inverse is rejected") {
  SampleStream rng(199);
  auto m = random_branchA(rng);
  transforms::TransformSpec t;
  t.kind = transforms::Kind::NullRescale;
  auto cx = chart_cx(m);
  t.g = parse("(2*u1 + 1)/(u1 + 3)", cx);
  t.g_inverse = parse("u1", cx);
  CHECK_THROWS_WITH_AS(transforms::transform_params(m, t), doctest::Contains("g_inverse"),
                       Error);
}
