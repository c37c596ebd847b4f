#pragma once

// Shared test machinery: exact bivariate polynomials with rational
// coefficients (so instance antiderivatives are exact), random family
// instances for the closed-form solutions, and a small symmetric eigensolver.

#include <map>
#include <numeric>
#include <memory>
#include <string>

#include "families.hpp"
#include "runner.hpp"

namespace nsvsi::testsupport {

struct Q {
  long long n = 0, d = 1;
};

inline Q qnorm(long long n, long long d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  long long g = std::gcd(n < 0 ? -n : n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  return {n, d};
}

inline Q qadd(Q a, Q b) { return qnorm(a.n * b.d + b.n * a.d, a.d * b.d); }
inline Q qmul(Q a, Q b) { return qnorm(a.n * b.n, a.d * b.d); }

// polynomial in two named variables with exact rational coefficients
struct Poly2 {
  std::string x = "x", y = "y";
  std::map<std::pair<int, int>, Q> c;

  bool zero() const { return c.empty(); }
};

inline Poly2 padd(const Poly2& a, const Poly2& b) {
  Poly2 r = a;
  for (const auto& [k, v] : b.c) {
    auto it = r.c.find(k);
    if (it == r.c.end())
      r.c[k] = v;
    else {
      it->second = qadd(it->second, v);
      if (it->second.n == 0) r.c.erase(it);
    }
  }
  return r;
}

inline Poly2 pmul(const Poly2& a, const Poly2& b) {
  Poly2 r;
  r.x = a.x;
  r.y = a.y;
  for (const auto& [ka, va] : a.c)
    for (const auto& [kb, vb] : b.c) {
      auto key = std::make_pair(ka.first + kb.first, ka.second + kb.second);
      Q add = qmul(va, vb);
      auto it = r.c.find(key);
      if (it == r.c.end())
        r.c[key] = add;
      else {
        it->second = qadd(it->second, add);
        if (it->second.n == 0) r.c.erase(it);
      }
    }
  return r;
}

inline Poly2 pscale(const Poly2& a, Q s) {
  Poly2 r;
  r.x = a.x;
  r.y = a.y;
  if (s.n == 0) return r;
  for (const auto& [k, v] : a.c) r.c[k] = qmul(v, s);
  return r;
}

inline Poly2 pderive(const Poly2& a, bool wrt_y) {
  Poly2 r;
  r.x = a.x;
  r.y = a.y;
  for (const auto& [k, v] : a.c) {
    int e = wrt_y ? k.second : k.first;
    if (e == 0) continue;
    auto key = wrt_y ? std::make_pair(k.first, k.second - 1)
                     : std::make_pair(k.first - 1, k.second);
    r.c[key] = qmul(v, {e, 1});
  }
  return r;
}

inline Poly2 pintegrate(const Poly2& a, bool wrt_y) {
  Poly2 r;
  r.x = a.x;
  r.y = a.y;
  for (const auto& [k, v] : a.c) {
    auto key = wrt_y ? std::make_pair(k.first, k.second + 1)
                     : std::make_pair(k.first + 1, k.second);
    long long e = wrt_y ? key.second : key.first;
    r.c[key] = qmul(v, {1, e});
  }
  return r;
}

inline Expr pexpr(const Poly2& a) {
  using namespace ex;
  if (a.c.empty()) return num(0);
  std::vector<Expr> terms;
  for (const auto& [k, v] : a.c) {
    std::vector<Expr> fac;
    fac.push_back(ratio(v.n, v.d));
    if (k.first > 0) fac.push_back(k.first == 1 ? coord(a.x) : pow(coord(a.x), k.first));
    if (k.second > 0) fac.push_back(k.second == 1 ? coord(a.y) : pow(coord(a.y), k.second));
    terms.push_back(fac.size() == 1 ? fac[0] : prod(std::move(fac)));
  }
  return terms.size() == 1 ? terms[0] : sum(std::move(terms));
}

inline Poly2 prandom(SampleStream& rng, const std::string& x, const std::string& y,
                     int degx, int degy, int maxterms) {
  Poly2 r;
  r.x = x;
  r.y = y;
  int terms = 1 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(maxterms));
  for (int t = 0; t < terms; ++t) {
    int i = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(degx + 1));
    int j = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(degy + 1));
    long long n = static_cast<long long>(rng.next_u64() % 9) - 4;
    long long d = 1 + static_cast<long long>(rng.next_u64() % 3);
    if (n == 0) n = 1;
    auto q = qnorm(n, d);
    auto it = r.c.find({i, j});
    if (it == r.c.end())
      r.c[{i, j}] = q;
    else
      it->second = qadd(it->second, q);
  }
  for (auto it = r.c.begin(); it != r.c.end();)
    it = it->second.n == 0 ? r.c.erase(it) : std::next(it);
  if (r.c.empty()) r.c[{0, 0}] = {1, 2};
  return r;
}

// ---- instance generators ------------------------------------------------

// branch A with random polynomial data; all integral slots exact
inline MetricInstance random_branchA(SampleStream& rng) {
  auto reg = std::make_shared<FunctionRegistry>();
  Poly2 alpha = prandom(rng, "u1", "u2", 2, 2, 4);
  Poly2 beta = prandom(rng, "u1", "v2", 2, 2, 4);
  Poly2 gamma = prandom(rng, "u1", "u2", 2, 2, 3);
  Poly2 F1 = prandom(rng, "u1", "u2", 2, 2, 3);
  Poly2 F2 = prandom(rng, "u1", "v2", 2, 2, 3);
  reg->define("alpha", {"u1", "u2"}, pexpr(alpha));
  reg->define("beta", {"u1", "v2"}, pexpr(beta));
  reg->define("gamma", {"u1", "u2"}, pexpr(gamma));
  reg->define("F1", {"u1", "u2"}, pexpr(F1));
  reg->define("F2", {"u1", "v2"}, pexpr(F2));
  reg->define("Ia", {"u1", "u2"}, pexpr(pintegrate(alpha, true)));
  reg->define("Ib", {"u1", "v2"}, pexpr(pintegrate(beta, true)));
  reg->define("Ig", {"u1", "u2"}, pexpr(pintegrate(gamma, true)));
  reg->declare_antiderivative("alpha", "u2", "Ia");
  reg->declare_antiderivative("beta", "v2", "Ib");
  reg->declare_antiderivative("gamma", "u2", "Ig");
  families::BranchAFns f{"alpha", "beta", "gamma", "F1", "F2"};
  return families::null_vsi_branchA(f, reg, {});
}

// branch B with rational slots: delta and eta proportional to (alpha+u2)^2
inline MetricInstance random_branchB(SampleStream& rng) {
  auto reg = std::make_shared<FunctionRegistry>();
  Poly2 alpha = prandom(rng, "u1", "u1", 2, 0, 3);  // alpha(u1) only
  alpha.x = "u1";
  alpha.y = "unused";
  Poly2 q = prandom(rng, "u1", "u2", 1, 1, 3);
  Poly2 rr = prandom(rng, "u1", "u2", 1, 1, 2);
  Poly2 gamma = prandom(rng, "u1", "v2", 1, 2, 3);
  Poly2 F1 = prandom(rng, "u1", "v2", 2, 2, 3);
  Poly2 F2 = prandom(rng, "u1", "u2", 2, 2, 3);
  // keep alpha positive-ish on the box: add a constant
  alpha.c[{0, 0}] = qadd(alpha.c.count({0, 0}) ? alpha.c[{0, 0}] : Q{0, 1}, Q{3, 1});

  // base := alpha(u1) + u2 as a Poly2 in (u1, u2)
  Poly2 base;
  base.x = "u1";
  base.y = "u2";
  for (const auto& [k, v] : alpha.c) base.c[{k.first, 0}] = v;
  base.c[{0, 1}] = qadd(base.c.count({0, 1}) ? base.c[{0, 1}] : Q{0, 1}, Q{1, 1});
  Poly2 base2 = pmul(base, base);
  Poly2 delta = pmul(base2, q);
  Poly2 eta = pmul(base2, rr);

  // slots
  Poly2 G = pintegrate(gamma, true);                       // d/dv2 = gamma
  Poly2 P = pintegrate(pmul(base, q), true);               // d/du2 = f*delta = (a+u2) q
  Poly2 K = pintegrate(q, true);                           // d/du2 = f^2*delta = q
  // f*delta_u1 = 2 alpha' q + (alpha+u2) q_u1
  Poly2 alphap;
  alphap.x = "u1";
  alphap.y = "u2";
  for (const auto& [k, v] : alpha.c)
    if (k.first > 0) alphap.c[{k.first - 1, 0}] = qmul(v, {k.first, 1});
  Poly2 J3 = pintegrate(padd(pscale(pmul(alphap, q), {2, 1}), pmul(base, pderive(q, false))),
                        true);
  Poly2 J8 = pintegrate(rr, true);                          // d/du2 = f^2 eta = r

  reg->define("alpha", {"u1"}, pexpr([&] {
                Poly2 a = alpha;
                a.y = "u1";  // single-variable: only x powers present
                return a;
              }()));
  reg->define("delta", {"u1", "u2"}, pexpr(delta));
  reg->define("gamma", {"u1", "v2"}, pexpr(gamma));
  reg->define("eta", {"u1", "u2"}, pexpr(eta));
  reg->define("F1", {"u1", "v2"}, pexpr(F1));
  reg->define("F2", {"u1", "u2"}, pexpr(F2));
  reg->define("G", {"u1", "v2"}, pexpr(G));
  reg->define("P", {"u1", "u2"}, pexpr(P));
  reg->define("K", {"u1", "u2"}, pexpr(K));
  reg->define("J3", {"u1", "u2"}, pexpr(J3));
  reg->define("J8", {"u1", "u2"}, pexpr(J8));
  families::BranchBFns f{"alpha", "delta", "gamma", "eta", "F1", "F2",
                         "G",     "P",     "K",     "J3",  "J8"};
  return families::null_vsi_branchB(f, reg, {});
}

// spacelike/timelike template: alpha = a2(u1)X^2 + a3(u1)X^3,
// beta = p0 + p1*A, gamma = q0 + q1*B, H0 in closed form
inline MetricInstance random_st_solution(SampleStream& rng) {
  using namespace ex;
  auto reg = std::make_shared<FunctionRegistry>();
  auto rnd1 = [&](const char* nm) {
    Poly2 p = prandom(rng, "u1", "zz", 2, 0, 3);
    reg->define(nm, {"u1"}, pexpr(p));
    return p;
  };
  rnd1("a2");
  rnd1("a3");
  rnd1("p0");
  rnd1("p1");
  rnd1("q0");
  rnd1("q1");
  Poly2 Fp = prandom(rng, "u1", "A", 2, 2, 3);
  Poly2 Gp = prandom(rng, "u1", "B", 2, 2, 3);
  reg->define("F", {"u1", "A"}, pexpr(Fp));
  reg->define("G", {"u1", "B"}, pexpr(Gp));

  Expr u1 = coord("u1"), T = coord("T"), X = coord("X");
  ParseContext bcx;
  bcx.coords = {"u1", "X"};
  bcx.registry = reg.get();
  reg->define("al", {"u1", "X"}, parse("a2(u1)*X^2 + a3(u1)*X^3", bcx));
  ParseContext bcxA;
  bcxA.coords = {"u1", "A"};
  bcxA.registry = reg.get();
  reg->define("be", {"u1", "A"}, parse("p0(u1) + p1(u1)*A", bcxA));
  ParseContext bcxB;
  bcxB.coords = {"u1", "B"};
  bcxB.registry = reg.get();
  reg->define("ga", {"u1", "B"}, parse("q0(u1) + q1(u1)*B", bcxB));

  auto ap = [&](const char* nm) { return apply(nm, {u1}); };
  auto dp = [&](const char* nm) { return slot_deriv(nm, {1}, {u1}); };
  Expr a2 = ap("a2"), a3 = ap("a3"), p0 = ap("p0"), p1 = ap("p1"), q0 = ap("q0"),
       q1 = ap("q1");
  Expr A = add({X, T}), Bc = sub(X, T);
  Expr X2 = pow(X, 2), X3 = pow(X, 3);
  Expr T2 = pow(T, 2);
  // closed-form particular solution of the H0 equation for this template
  Expr H0 = add({
      mul({ratio(-3, 2), T2, X2, pow(a3, 2)}),
      neg(mul({T2, X, a2, a3})),
      neg(mul({T2, X, dp("a3")})),
      mul({ratio(1, 2), T2, pow(p1, 2), pow(X, -2)}),
      neg(mul({T2, p1, q1, pow(X, -2)})),
      mul({ratio(1, 2), T2, pow(q1, 2), pow(X, -2)}),
      neg(mul({T, a2, p1})),
      mul({T, a2, q1}),
      neg(mul({T, dp("p1")})),
      mul({T, dp("q1")}),
      mul({num(2), T, pow(p1, 2), pow(X, -1)}),
      neg(mul({num(2), T, pow(q1, 2), pow(X, -1)})),
      mul({T, p0, p1, pow(X, -2)}),
      neg(mul({T, p0, q1, pow(X, -2)})),
      mul({T, p1, q0, pow(X, -2)}),
      neg(mul({T, q0, q1, pow(X, -2)})),
      mul({X, add({apply("F", {u1, A}), apply("G", {u1, Bc})})}),
      neg(mul({a2, p0})),
      neg(mul({a2, q0})),
      mul({ratio(3, 2), pow(p1, 2)}),
      mul({num(5), p1, q1}),
      mul({ratio(3, 2), pow(q1, 2)}),
      neg(dp("p0")),
      neg(dp("q0")),
      mul({num(2), p0, p1, pow(X, -1)}),
      mul({num(2), p0, q1, pow(X, -1)}),
      mul({num(2), p1, q0, pow(X, -1)}),
      mul({num(2), q0, q1, pow(X, -1)}),
      mul({ratio(1, 2), pow(p0, 2), pow(X, -2)}),
      mul({p0, q0, pow(X, -2)}),
      mul({ratio(1, 2), pow(q0, 2), pow(X, -2)}),
  });
  return families::st_vsi_solution("al", "be", "ga", H0, reg, {});
}

// symmetric 4x4 eigenvalue signs via Jacobi iteration: returns {pos, neg}
inline std::pair<int, int> signature_counts(const Mat4V<double>& gm) {
  double a[4][4];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a[i][j] = gm[i][j];
  for (int sweep = 0; sweep < 60; ++sweep) {
    int p = 0, q = 1;
    double best = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (std::fabs(a[i][j]) > best) {
          best = std::fabs(a[i][j]);
          p = i;
          q = j;
        }
    if (best < 1e-13) break;
    double theta = 0.5 * std::atan2(2 * a[p][q], a[q][q] - a[p][p]);
    double c = std::cos(theta), s2 = std::sin(theta);
    for (int k = 0; k < 4; ++k) {
      double akp = a[k][p], akq = a[k][q];
      a[k][p] = c * akp - s2 * akq;
      a[k][q] = s2 * akp + c * akq;
    }
    for (int k = 0; k < 4; ++k) {
      double apk = a[p][k], aqk = a[q][k];
      a[p][k] = c * apk - s2 * aqk;
      a[q][k] = s2 * apk + c * aqk;
    }
  }
  int pos = 0, neg = 0;
  for (int i = 0; i < 4; ++i) (a[i][i] > 0 ? pos : neg)++;
  return {pos, neg};
}

}  // namespace nsvsi::testsupport
