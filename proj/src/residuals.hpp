#pragma once

// The papers' PDE/constraint systems evaluated as pointwise residuals by jet
// differentiation of the family component functions. Transcriptions follow
// the displayed equations; each one is cross-checked against the directly
// computed Ricci tensor by tests and by [cross_check_vacuum].

#include <functional>

#include "invariants.hpp"
#include "tensor.hpp"

namespace nsvsi {
namespace residuals {

template <class T>
struct EqValue {
  std::string name;
  T value;  // pointwise residual (order-0); jets available via *_jets variants
};

template <class T>
struct SlotJets {
  const MetricInstance* m;
  std::array<T, 4> point;
  EvalContext<T> cx;
  std::map<std::string, T> params;

  SlotJets(const MetricInstance& mi, const std::array<T, 4>& pt, int order)
      : m(&mi), point(pt), params(param_values<T>(mi)) {
    cx = EvalContext<T>{mi.registry.get(), &params, order};
  }
  Jet<T> operator()(const std::string& slot) const {
    return eval_jet(m->slot(slot), m->chart.names, point, cx);
  }
  T pvalue(const std::string& name) const {
    auto it = params.find(name);
    if (it == params.end()) fail(ErrorKind::Family, "missing parameter '" + name + "'");
    return it->second;
  }
};

// ---- null case (chart v1,u1,v2,u2; axes 0,1,2,3) ----------------------
// Equations are the Ricci components of the family metric; the term
// 2 W0v H1_{,u2} corrects the printed display (which has 2 W0v W0v_{,u2}).
template <class T>
std::array<Jet<T>, 4> null_vacuum_jets(const MetricInstance& m, const std::array<T, 4>& pt,
                                       int order) {
  if (m.family != "null_vsi") fail(ErrorKind::Family, "null-vacuum needs a null_vsi instance");
  SlotJets<T> S(m, pt, order + 2);
  const int U1 = 1, V2 = 2, U2 = 3;
  Jet<T> W1j = S("W1_u2"), W0uj = S("W0_u2"), W0vj = S("W0_v2"), H1j = S("H1"), H0j = S("H0");
  const int ord = order;
  auto t = [&](const Jet<T>& j) { return truncate(j, ord); };
  auto d = [&](const Jet<T>& j, int ax) { return truncate(partial(j, ax), ord); };
  auto dd = [&](const Jet<T>& j, int a1, int a2) {
    return truncate(partial(partial(j, a1), a2), ord);
  };
  const T half = scalar_traits<T>::from_ratio(1, 2);
  auto c = [&](long long n) { return scalar_traits<T>::from_ratio(n, 1); };
  Jet<T> v1 = Jet<T>::variable(ord, 0, pt[0]);
  Jet<T> W1 = t(W1j), W0u = t(W0uj), W0v = t(W0vj), H1 = t(H1j), H0 = t(H0j);

  Jet<T> fourth =
      v1 * (W1 * d(H1j, V2) - scale(dd(H1j, V2, U2), c(2))) - scale(dd(H0j, V2, U2), c(2)) -
      W1 * d(H0j, V2) + scale(W0u * d(H1j, V2), c(2)) + H1 * d(W0vj, U2) + H1 * d(W0uj, V2) +
      W1 * W0v * d(W0uj, V2) + scale(W0v * d(H1j, U2), c(2)) + dd(W0vj, U1, U2) -
      W0v * d(W1j, U1) + dd(W0uj, U1, V2) - scale(pow_int(W1 * W0v, 2), half) -
      W1 * W0v * d(W0vj, U2) + d(W0uj, V2) * d(W0vj, U2) -
      scale(pow_int(d(W0uj, V2), 2), half) - scale(pow_int(d(W0vj, U2), 2), half);

  Jet<T> second = d(H1j, V2) - scale(W1 * d(W0vj, V2), half) + scale(dd(W0uj, V2, V2), half) -
                  scale(dd(W0vj, V2, U2), half);

  Jet<T> third = scale(d(W1j, U1), -half) + d(H1j, U2) -
                 scale(W0v * pow_int(W1, 2), half) + scale(W1 * d(W0uj, V2), half) +
                 scale(W0v * d(W1j, U2), half) - scale(dd(W0uj, V2, U2), half) +
                 scale(dd(W0vj, U2, U2), half);

  Jet<T> splurge = d(W1j, U2) - scale(pow_int(W1, 2), half);

  return {fourth, second, third, splurge};
}

// ---- spacelike/timelike case (chart v1,u1,T,X; axes 0,1,2,3) ----------
template <class T>
std::array<Jet<T>, 4> st_vacuum_jets(const MetricInstance& m, const std::array<T, 4>& pt,
                                     int order) {
  if (m.family != "st_vsi") fail(ErrorKind::Family, "st-vacuum needs an st_vsi instance");
  if (!is_literal_zero(m.slot("W0_T")))
    fail(ErrorKind::Family, "st-vacuum residuals assume the W0_T = 0 gauge");
  auto epsit = m.params.find("eps");
  if (epsit == m.params.end() || epsit->second.first != 1)
    fail(ErrorKind::Family, "st-vacuum residuals assume eps = 1 (W1 = -2/X)");
  SlotJets<T> S(m, pt, order + 2);
  const int U1 = 1, Tax = 2, Xax = 3;
  Jet<T> H1 = S("H1"), H0 = S("H0"), WX = S("W0_X");
  const int ord = order;
  auto t = [&](const Jet<T>& j) { return truncate(j, ord); };
  auto d = [](const Jet<T>& j, int ax) { return partial(j, ax); };
  auto dd = [&](const Jet<T>& j, int a1, int a2) { return partial(partial(j, a1), a2); };
  Jet<T> X = Jet<T>::variable(ord, Xax, pt[3]);
  Jet<T> X2 = X * X;
  auto c = [&](long long n) { return scalar_traits<T>::from_ratio(n, 1); };

  // adam1 = 2 X^2 H1_T + 2 X WX_T + X^2 WX_TX
  Jet<T> adam1 = scale(X2 * t(d(H1, Tax)), c(2)) + scale(X * t(d(WX, Tax)), c(2)) +
                 X2 * t(dd(WX, Tax, Xax));
  // adam2 = 2 X^2 H1_TT - 4 X H1_X - 2 X^2 H1_XX + 2 WX_X
  Jet<T> adam2 = scale(X2 * t(dd(H1, Tax, Tax)), c(2)) - scale(X * t(d(H1, Xax)), c(4)) -
                 scale(X2 * t(dd(H1, Xax, Xax)), c(2)) + scale(t(d(WX, Xax)), c(2));
  // adam3 = X^2 WX_TT + 2 X^2 H1_X - 2 WX
  Jet<T> adam3 = X2 * t(dd(WX, Tax, Tax)) + scale(X2 * t(d(H1, Xax)), c(2)) -
                 scale(t(WX), c(2));
  // adam4 = 2X^2 H0_XX - 4X H0_X + 4 H0 - 2X^2 H0_TT
  //         - [ WX (2X^2 H1_X - 2 WX) + 2X^2 WX H1_X + 2X^2 H1 WX_X
  //             - X^2 WX_T^2 + 2X^2 WX_{u1 X} ]
  Jet<T> paren = scale(X2 * t(d(H1, Xax)), c(2)) - scale(t(WX), c(2));
  Jet<T> adam4 = scale(X2 * t(dd(H0, Xax, Xax)), c(2)) - scale(X * t(d(H0, Xax)), c(4)) +
                 scale(t(H0), c(4)) - scale(X2 * t(dd(H0, Tax, Tax)), c(2)) -
                 (t(WX) * paren + scale(X2 * t(WX) * t(d(H1, Xax)), c(2)) +
                  scale(X2 * t(H1) * t(d(WX, Xax)), c(2)) -
                  X2 * pow_int(t(d(WX, Tax)), 2) + scale(X2 * t(dd(WX, U1, Xax)), c(2)));
  return {adam1, adam2, adam3, adam4};
}

// ---- CSI example 1 (chart v,u,T,X); normalization 2 e^{2KX} (R-L g)_{ab} --
// bigDE corrected from the printed display: the stray bare 2 WT_X term is
// dropped, (WT_X)^2 carries e^{2KX}, and H0_XX enters with coefficient -2.
template <class T>
std::array<Jet<T>, 4> csi1_einstein_jets(const MetricInstance& m, const std::array<T, 4>& pt,
                                         int order) {
  if (m.family != "csi1") fail(ErrorKind::Family, "csi1-einstein needs a csi1 instance");
  SlotJets<T> S(m, pt, order + 2);
  const int Uax = 1, Tax = 2, Xax = 3;
  Jet<T> H1 = S("H1"), H0 = S("H0"), WX = S("WX0"), WT = S("WT0");
  const int ord = order;
  auto t = [&](const Jet<T>& j) { return truncate(j, ord); };
  auto d = [](const Jet<T>& j, int ax) { return partial(j, ax); };
  auto dd = [&](const Jet<T>& j, int a1, int a2) { return partial(partial(j, a1), a2); };
  const T K = S.pvalue("K");
  auto c = [&](long long n, long long dn = 1) { return scalar_traits<T>::from_ratio(n, dn); };
  Jet<T> X = Jet<T>::variable(ord, Xax, pt[3]);
  Jet<T> v = Jet<T>::variable(ord, 0, pt[0]);
  Jet<T> eI = jet_exp(scale(X, K));
  Jet<T> eT = jet_exp(scale(X, K + K));

  Jet<T> bigDE =
      scale(t(d(H1, Xax)) * t(WX) * eT, c(4)) + scale(t(d(H0, Xax)) * eT, K * c(2)) +
      scale(t(H0) * eT, K * K * c(4)) + scale(t(d(WT, Xax)) * eI * t(d(WX, Tax)), c(2)) +
      scale(t(d(WX, Uax)) * eT, K * c(2)) - scale(pow_int(t(WT), 2) * eT, K * K) -
      scale(v * t(dd(H1, Xax, Xax)) * eT, c(2)) +
      scale(t(d(WT, Xax)) * eT * t(WT), K * c(2)) -
      scale(eT * v * t(d(H1, Xax)), K * c(6)) + scale(eT * t(H1) * t(WX), K * c(2)) -
      scale(t(WT) * eI * t(d(WX, Tax)), K * c(2)) +
      scale(t(H1) * t(d(WX, Xax)) * eT, c(2)) - scale(t(d(H1, Tax)) * t(WT) * eI, c(4)) -
      scale(t(H1) * t(d(WT, Tax)) * eI, c(2)) - scale(t(dd(WT, Uax, Tax)) * eI, c(2)) +
      scale(v * t(dd(H1, Tax, Tax)), c(2)) + scale(t(dd(H0, Tax, Tax)), c(2)) -
      eT * pow_int(t(d(WT, Xax)), 2) - pow_int(t(d(WX, Tax)), 2) -
      scale(t(dd(H0, Xax, Xax)) * eT, c(2)) + scale(t(dd(WX, Uax, Xax)) * eT, c(2));

  Jet<T> DE2 = scale(t(d(H1, Tax)), c(2)) - scale(t(d(WT, Xax)) * eI, K) +
               scale(t(WT) * eI, K * K * c(2)) + scale(t(d(WX, Tax)), K) -
               t(dd(WT, Xax, Xax)) * eI + t(dd(WX, Xax, Tax));

  Jet<T> DE3 = scale(t(d(H1, Xax)) * eT, c(2)) - t(dd(WT, Xax, Tax)) * eI +
               scale(t(d(WT, Tax)) * eI, K) + t(dd(WX, Tax, Tax));

  Jet<T> vDEP = scale(t(dd(H1, Xax, Xax)) * eT, c(-2)) - scale(eT * t(d(H1, Xax)), K * c(6)) +
                scale(t(dd(H1, Tax, Tax)), c(2));

  return {bigDE, DE2, DE3, vDEP};
}

// ---- CSI example 2 (chart v,u,U,V); normalizations:
// lastBigDE = -2V^2 (R-L g)_{uu}, lastDE1 = 2V[(R-Lg)_{uU} - BV^2 (R-Lg)_{uV}],
// lastDE2 = 2V^2 (R-Lg)_{uV}. Corrections from the printed displays:
// (WV_U)^2 carries V^2 in lastBigDE; the BV^2 WV_U term of lastDE1 has
// coefficient -2.
template <class T>
std::array<Jet<T>, 4> csi2_einstein_jets(const MetricInstance& m, const std::array<T, 4>& pt,
                                         int order) {
  if (m.family != "csi2") fail(ErrorKind::Family, "csi2-einstein needs a csi2 instance");
  SlotJets<T> S(m, pt, order + 2);
  const int uax = 1, Uax = 2, Vax = 3;
  Jet<T> H1 = S("H1"), H0 = S("H0"), WU = S("WU0"), WV = S("WV0");
  const int ord = order;
  auto t = [&](const Jet<T>& j) { return truncate(j, ord); };
  auto d = [](const Jet<T>& j, int ax) { return partial(j, ax); };
  auto dd = [&](const Jet<T>& j, int a1, int a2) { return partial(partial(j, a1), a2); };
  const T B = S.pvalue("B");
  auto c = [&](long long n, long long dn = 1) { return scalar_traits<T>::from_ratio(n, dn); };
  Jet<T> V = Jet<T>::variable(ord, Vax, pt[3]);
  Jet<T> v = Jet<T>::variable(ord, 0, pt[0]);
  Jet<T> V2 = V * V, V3 = V2 * V, V4 = V3 * V;

  Jet<T> lastBigDE =
      scale(V4 * t(dd(H0, Vax, Vax)), B * c(-4)) + scale(v * t(dd(H1, Vax, Uax)) * V2, c(4)) +
      scale(V4 * t(dd(WV, uax, Vax)), B * c(2)) -
      scale(V4 * v * t(dd(H1, Vax, Vax)), B * c(4)) -
      scale(V3 * v * t(d(H1, Vax)), B * c(16)) + scale(t(H1) * V4 * t(d(WV, Vax)), B * c(2)) +
      scale(V3 * t(H1) * t(WV), B * c(4)) +
      scale(t(d(WU, Vax)) * V4 * t(d(WV, Vax)), B * c(2)) -
      scale(V3 * t(d(WV, Vax)) * t(WU), B * c(4)) -
      scale(V4 * t(d(WV, Vax)) * t(d(WV, Uax)), B * c(2)) +
      scale(V4 * t(d(H1, Vax)) * t(WV), B * c(4)) + scale(V * v * t(d(H1, Uax)), c(4)) +
      scale(V2 * t(H0), B * c(8)) - scale(t(H1) * V2 * t(d(WU, Vax)), c(2)) -
      scale(t(H1) * V2 * t(d(WV, Uax)), c(2)) + scale(V3 * t(d(WV, uax)), B * c(4)) -
      scale(t(d(H1, Vax)) * V2 * t(WU), c(4)) - scale(t(d(H1, Uax)) * t(WV) * V2, c(4)) -
      scale(t(d(WU, Vax)) * V * t(WU), c(4)) -
      scale(t(d(WU, Vax)) * V2 * t(d(WV, Uax)), c(2)) +
      scale(V4 * V2 * pow_int(t(d(WV, Vax)), 2), B * B) +
      scale(t(WU) * t(d(WV, Uax)) * V, c(4)) + pow_int(t(d(WU, Vax)), 2) * V2 -
      scale(V * t(d(H0, Uax)), c(4)) + V2 * pow_int(t(d(WV, Uax)), 2) +
      scale(pow_int(t(WU), 2), c(4)) - scale(t(dd(WV, uax, Uax)) * V2, c(2)) -
      scale(t(dd(WU, uax, Vax)) * V2, c(2)) + scale(t(dd(H0, Vax, Uax)) * V2, c(4));

  Jet<T> lastDE1 =
      scale(t(d(H1, Uax)) * V, c(2)) - scale(t(d(H1, Vax)) * V3, B * c(2)) +
      scale(V4 * t(d(WV, Vax)), B * B * c(4)) - scale(V * t(WU), B * c(2)) -
      scale(t(d(WV, Uax)) * V2, B * c(2)) - t(dd(WU, Vax, Uax)) * V -
      scale(V3 * t(dd(WV, Vax, Uax)), B * c(2)) + scale(t(d(WU, Uax)), c(2)) +
      t(dd(WV, Uax, Uax)) * V + scale(V3 * t(dd(WU, Vax, Vax)), B) +
      scale(V4 * V * t(dd(WV, Vax, Vax)), B * B);

  Jet<T> lastDE2 = scale(V3 * t(d(WV, Vax)), B * c(4)) - scale(t(WU), c(2)) -
                   scale(t(d(WV, Uax)) * V, c(2)) + scale(t(d(H1, Vax)) * V2, c(2)) +
                   t(dd(WU, Vax, Vax)) * V2 + scale(V4 * t(dd(WV, Vax, Vax)), B) -
                   t(dd(WV, Vax, Uax)) * V2;

  Jet<T> lastVDEP = scale(t(dd(H1, Vax, Uax)) * V2, c(4)) -
                    scale(V4 * t(dd(H1, Vax, Vax)), B * c(4)) -
                    scale(V3 * t(d(H1, Vax)), B * c(16)) + scale(V * t(d(H1, Uax)), c(4));

  return {lastBigDE, lastDE1, lastDE2, lastVDEP};
}

// paper's printed constraint (CONST): 2 C3 K (1 - e^{-2KX})
template <class T>
T const_residual(const std::map<std::string, T>& params, const std::array<T, 4>& pt) {
  auto get = [&](const char* n) {
    auto it = params.find(n);
    if (it == params.end()) fail(ErrorKind::Family, std::string("missing parameter ") + n);
    return it->second;
  };
  T K = get("K"), C3 = get("C3");
  if constexpr (scalar_traits<T>::exact)
    fail(ErrorKind::RationalTranscendental, "CONST involves exp; use float mode");
  else {
    double e = std::exp(-2.0 * scalar_traits<T>::to_double(K) *
                        scalar_traits<T>::to_double(pt[3]));
    return C3 * K * scalar_traits<T>::from_ratio(2, 1) *
           (scalar_traits<T>::one() - static_cast<T>(e));
  }
}

struct SystemInfo {
  std::string id;
  std::vector<std::string> eq_names;
  std::string family;
};

inline const std::vector<SystemInfo>& systems() {
  static const std::vector<SystemInfo> s = {
      {"null-vacuum", {"fourthDE", "second", "third", "splurge"}, "null_vsi"},
      {"st-vacuum", {"adam1", "adam2", "adam3", "adam4"}, "st_vsi"},
      {"csi1-einstein", {"bigDE", "DE2", "DE3", "vDEP"}, "csi1"},
      {"csi2-einstein", {"lastBigDE", "lastDE1", "lastDE2", "lastVDEP"}, "csi2"},
      {"csi1-H0", {"H0-equation"}, "csi1"},
      {"csi2-H0", {"H0-equation"}, "csi2"},
      {"constraints", {"CONST"}, "csi1"},
  };
  return s;
}

// pointwise residual values for a named system
template <class T>
std::vector<EqValue<T>> evaluate(const std::string& system, const MetricInstance& m,
                                 const std::array<T, 4>& pt, int order = 0) {
  std::vector<EqValue<T>> out;
  auto push = [&](const std::vector<std::string>& names, const std::array<Jet<T>, 4>& js,
                  std::size_t n = 4) {
    for (std::size_t i = 0; i < n; ++i) out.push_back({names[i], js[i].value()});
  };
  if (system == "null-vacuum") {
    push(systems()[0].eq_names, null_vacuum_jets(m, pt, order));
  } else if (system == "st-vacuum") {
    push(systems()[1].eq_names, st_vacuum_jets(m, pt, order));
  } else if (system == "csi1-einstein") {
    push(systems()[2].eq_names, csi1_einstein_jets(m, pt, order));
  } else if (system == "csi2-einstein") {
    push(systems()[3].eq_names, csi2_einstein_jets(m, pt, order));
  } else if (system == "csi1-H0") {
    auto pt0 = pt;
    pt0[0] = scalar_traits<T>::zero();  // v-free part of bigDE
    auto js = csi1_einstein_jets(m, pt0, order);
    out.push_back({"H0-equation", js[0].value()});
  } else if (system == "csi2-H0") {
    auto pt0 = pt;
    pt0[0] = scalar_traits<T>::zero();
    auto js = csi2_einstein_jets(m, pt0, order);
    out.push_back({"H0-equation", js[0].value()});
  } else if (system == "constraints") {
    auto params = param_values<T>(m);
    out.push_back({"CONST", const_residual<T>(params, pt)});
  } else {
    fail(ErrorKind::Config, "unknown residual system '" + system + "'");
  }
  return out;
}

// vacuum-system residual max <-> max |R_ab| agreement at a point
template <class T>
struct CrossCheck {
  T system_max;
  T ricci_max;
  bool consistent;  // both below or both above tol
};

template <class T>
CrossCheck<T> cross_check_vacuum(const MetricInstance& m, const std::array<T, 4>& pt,
                                 double tol) {
  const std::string sys = m.family == "null_vsi" ? "null-vacuum" : "st-vacuum";
  auto vals = evaluate<T>(sys, m, pt, 0);
  T smax = scalar_traits<T>::zero();
  for (const auto& ev : vals) {
    T a = scalar_traits<T>::abs(ev.value);
    if (scalar_traits<T>::to_double(a) > scalar_traits<T>::to_double(smax)) smax = a;
  }
  CurvatureBundle<T> B = curvature_at(m, pt, 2);
  T rmax = max_ricci(B);
  CrossCheck<T> out{smax, rmax, false};
  bool s0 = scalar_traits<T>::to_double(smax) < tol;
  bool r0 = scalar_traits<T>::to_double(rmax) < tol;
  out.consistent = (s0 == r0);
  return out;
}

// the §4.2 dependency: d/dT(adam1) - adam2 - d/dX(adam3) == 0 identically
template <class T>
T adam_dependency_residual(const MetricInstance& m, const std::array<T, 4>& pt, int order) {
  auto js = st_vacuum_jets(m, pt, order + 1);
  Jet<T> lhs = partial(js[0], 2) - truncate(js[1], order) - partial(js[2], 3);
  T mx = scalar_traits<T>::zero();
  for (int r = 0; r < lhs.size(); ++r) {
    T a = scalar_traits<T>::abs(lhs[r]);
    if (scalar_traits<T>::to_double(a) > scalar_traits<T>::to_double(mx)) mx = a;
  }
  return mx;
}

}  // namespace residuals
}  // namespace nsvsi
