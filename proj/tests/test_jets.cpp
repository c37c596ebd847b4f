#include <doctest.h>

#include "jets.hpp"
#include "runner.hpp"

using namespace nsvsi;

namespace {

Jet<double> var(int order, int axis, double v) { return Jet<double>::variable(order, axis, v); }

Jet<Rational> rvar(int order, int axis, long n, long d) {
  return Jet<Rational>::variable(order, axis, scalar_traits<Rational>::from_ratio(n, d));
}

Jet<double> random_jet(SampleStream& rng, int order) {
  Jet<double> j(order);
  for (int r = 0; r < j.size(); ++r) j[r] = 2.0 * rng.next_unit() - 1.0;
  return j;
}

Jet<Rational> random_rjet(SampleStream& rng, int order) {
  Jet<Rational> j(order);
  for (int r = 0; r < j.size(); ++r) {
    auto [p, q] = rng.next_ratio(-2.0, 2.0);
    j[r] = scalar_traits<Rational>::from_ratio(p, q);
  }
  return j;
}

double max_abs_diff(const Jet<double>& a, const Jet<double>& b) {
  REQUIRE(a.order() == b.order());
  double m = 0;
  for (int r = 0; r < a.size(); ++r) m = std::max(m, std::fabs(a[r] - b[r]));
  return m;
}

}  // namespace

TEST_CASE("jet multiplication truncates at order") {
  auto x2 = var(2, 0, 1.0);
  auto p = x2 * x2;  // (1+dx)^2 at order 2
  CHECK(p.coeff(0, 0, 0, 0) == 1.0);
  CHECK(p.coeff(1, 0, 0, 0) == 2.0);
  CHECK(p.coeff(2, 0, 0, 0) == 1.0);

  auto x1 = var(1, 0, 1.0);
  auto p1 = x1 * x1;  // order 1: 1 + 2dx
  CHECK(p1.coeff(0, 0, 0, 0) == 1.0);
  CHECK(p1.coeff(1, 0, 0, 0) == 2.0);

  // (dx+dy)^2 = dx^2 + 2 dxdy + dy^2
  Jet<double> s(2);
  s[1] = 1.0;  // dx
  s[2] = 1.0;  // dy  (axis 1 of graded order: ranks 1..4 are the degree-1 block)
  auto q = s * s;
  CHECK(q.coeff(2, 0, 0, 0) == 1.0);
  CHECK(q.coeff(1, 1, 0, 0) == 2.0);
  CHECK(q.coeff(0, 2, 0, 0) == 1.0);
}

TEST_CASE("jet division is the geometric series") {
  auto one = Jet<double>::constant(2, 1.0);
  auto d = one / var(2, 0, 1.0);  // 1/(1+dx) = 1 - dx + dx^2
  CHECK(d.coeff(0, 0, 0, 0) == doctest::Approx(1.0));
  CHECK(d.coeff(1, 0, 0, 0) == doctest::Approx(-1.0));
  CHECK(d.coeff(2, 0, 0, 0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(one / Jet<double>::constant(2, 0.0), Error);
}

TEST_CASE("jet exp and ln") {
  auto e = jet_exp(var(3, 0, 0.0));  // 1 + dx + dx^2/2 + dx^3/6
  CHECK(e.coeff(1, 0, 0, 0) == doctest::Approx(1.0));
  CHECK(e.coeff(2, 0, 0, 0) == doctest::Approx(0.5));
  CHECK(e.coeff(3, 0, 0, 0) == doctest::Approx(1.0 / 6));
  // exp(ln(a)) == a
  SampleStream rng(7);
  for (int k = 0; k < 20; ++k) {
    auto a = random_jet(rng, 4);
    a[0] = 0.5 + rng.next_unit();  // positive constant term
    CHECK(max_abs_diff(jet_exp(jet_ln(a)), a) < 1e-12);
  }
}

TEST_CASE("rational power uses the binomial series") {
  auto r = jet_pow(var(2, 0, 1.0), 1, 2);  // sqrt(1+dx) = 1 + dx/2 - dx^2/8
  CHECK(r.coeff(0, 0, 0, 0) == doctest::Approx(1.0));
  CHECK(r.coeff(1, 0, 0, 0) == doctest::Approx(0.5));
  CHECK(r.coeff(2, 0, 0, 0) == doctest::Approx(-0.125));
  CHECK_THROWS_AS(jet_pow(Jet<double>::constant(2, -1.0), 1, 2), Error);
}

TEST_CASE("partial derivative shifts multi-indices") {
  // a = 1 + 2dx + dx^2 -> da/dx = 2 + 2dx
  Jet<double> a(2);
  a[0] = 1;
  a.coeff(0, 0, 0, 0);
  const JetLayout& L = JetLayout::of(2);
  a[L.rank_of(1, 0, 0, 0)] = 2;
  a[L.rank_of(2, 0, 0, 0)] = 1;
  auto d = partial(a, 0);
  CHECK(d.coeff(0, 0, 0, 0) == 2.0);
  CHECK(d.coeff(1, 0, 0, 0) == 2.0);

  // d(dxdy)/dx = dy
  Jet<double> m(2);
  m[L.rank_of(1, 1, 0, 0)] = 1;
  auto dm = partial(m, 0);
  CHECK(dm.coeff(0, 1, 0, 0) == 1.0);
  CHECK_THROWS_AS(partial(Jet<double>::constant(0, 1.0), 0), Error);

  // mixed partials commute
  SampleStream rng(11);
  for (int k = 0; k < 10; ++k) {
    auto j = random_jet(rng, 4);
    CHECK(max_abs_diff(partial(partial(j, 0), 1), partial(partial(j, 1), 0)) == 0.0);
  }
}

TEST_CASE("ring axioms on random jets") {
  SampleStream rng(3);
  for (int k = 0; k < 200; ++k) {
    auto a = random_jet(rng, 3), b = random_jet(rng, 3), c = random_jet(rng, 3);
    CHECK(max_abs_diff(a * b, b * a) < 1e-14);
    CHECK(max_abs_diff((a * b) * c, a * (b * c)) < 1e-12);
    CHECK(max_abs_diff(a * (b + c), a * b + a * c) < 1e-13);
  }
}

TEST_CASE("rational mode is exact") {
  SampleStream rng(5);
  for (int k = 0; k < 50; ++k) {
    auto a = random_rjet(rng, 3), b = random_rjet(rng, 3), c = random_rjet(rng, 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!scalar_traits<Rational>::is_zero(b.value())) {
      CHECK((a * b) / b == a);  // div inverts mul exactly
    }
  }
  CHECK_THROWS_AS(jet_exp(Jet<Rational>::constant(2, Rational(1))), Error);
  CHECK_THROWS_AS(jet_pow(rvar(2, 0, 1, 1), 1, 2), Error);
  // integer powers stay exact
  auto a = rvar(2, 0, 2, 3);
  CHECK(jet_pow(a, 3, 1) == a * a * a);
}

TEST_CASE("coefficient-prefix property of truncation") {
  SampleStream rng(9);
  for (int k = 0; k < 20; ++k) {
    auto a = random_jet(rng, 4);
    auto t3 = truncate(a, 3);
    auto t2a = truncate(t3, 2);
    auto t2b = truncate(a, 2);
    CHECK(max_abs_diff(t2a, t2b) == 0.0);
  }
  CHECK_THROWS_AS(truncate(Jet<double>::constant(2, 1.0), 3), Error);
}

TEST_CASE("order mismatch is rejected") {
  CHECK_THROWS_AS(var(2, 0, 1.0) + var(3, 0, 1.0), Error);
  CHECK_THROWS_AS(var(2, 0, 1.0) * var(1, 0, 1.0), Error);
}
