#pragma once

// Polynomial scalar curvature invariant battery, VSI/CSI/Einstein verdicts,
// and the boost-weight nilpotency checks.

#include <optional>
#include <string>
#include <vector>

#include "tensor.hpp"

namespace nsvsi {

inline const std::vector<std::string>& battery_names() {
  static const std::vector<std::string> names = {"I1", "I2", "I3", "I4", "I5",
                                                 "I6", "D1", "D2", "D3"};
  return names;
}

template <class T>
struct Battery {
  std::array<T, 9> v{};
  bool has_diff = false;  // D1..D3 available (bundle order >= 3)

  int count() const { return has_diff ? 9 : 6; }
};

template <class T>
Battery<T> compute_battery(const CurvatureBundle<T>& B) {
  Battery<T> out;
  Mat4V<T> gu, ric;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      gu[i][j] = B.ginv[i][j].value();
      ric[i][j] = B.ricci[i][j].value();
    }
  auto zero = scalar_traits<T>::zero;

  out.v[0] = B.ricci_scalar.value();

  Mat4V<T> ric_ud{};  // R_a^b = g^{bc} R_ac
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      T s = zero();
      for (int c = 0; c < 4; ++c) s += gu[b][c] * ric[a][c];
      ric_ud[a][b] = s;
    }
  {
    T s = zero();
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) s += ric_ud[a][b] * ric_ud[b][a];
    out.v[1] = s;  // I2 = R_ab R^ab
  }
  {
    T s = zero();
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c) s += ric_ud[a][b] * ric_ud[b][c] * ric_ud[c][a];
    out.v[4] = s;  // I5
  }

  // raise all four Riemann indices stepwise
  auto raise_all = [&](const Riem4<T>& R) {
    std::array<std::array<std::array<std::array<T, 4>, 4>, 4>, 4> r0, r1;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c)
          for (int d = 0; d < 4; ++d) r0[a][b][c][d] = R.at(a, b, c, d).value();
    for (int step = 0; step < 4; ++step) {
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
          for (int c = 0; c < 4; ++c)
            for (int d = 0; d < 4; ++d) {
              T s = zero();
              for (int e = 0; e < 4; ++e) {
                switch (step) {
                  case 0: s += gu[a][e] * r0[e][b][c][d]; break;
                  case 1: s += gu[b][e] * r0[a][e][c][d]; break;
                  case 2: s += gu[c][e] * r0[a][b][e][d]; break;
                  default: s += gu[d][e] * r0[a][b][c][e]; break;
                }
              }
              r1[a][b][c][d] = s;
            }
      r0 = r1;
    }
    return r0;
  };

  auto riem_up = raise_all(B.riem_dd);
  {
    T s = zero();
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c)
          for (int d = 0; d < 4; ++d) s += riem_up[a][b][c][d] * B.riem_dd.at(a, b, c, d).value();
    out.v[2] = s;  // I3 Kretschmann
  }
  {
    auto weyl_up = raise_all(B.weyl);
    T s = zero();
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c)
          for (int d = 0; d < 4; ++d) s += weyl_up[a][b][c][d] * B.weyl.at(a, b, c, d).value();
    out.v[3] = s;  // I4 Weyl^2
  }
  {
    // I6 = R_{ab}{}^{cd} R_{cd}{}^{ef} R_{ef}{}^{ab}: mixed form, two raised
    std::array<std::array<std::array<std::array<T, 4>, 4>, 4>, 4> rm{};
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c)
          for (int d = 0; d < 4; ++d) {
            T s = zero();
            for (int e = 0; e < 4; ++e)
              for (int f = 0; f < 4; ++f)
                s += gu[c][e] * gu[d][f] * B.riem_dd.at(a, b, e, f).value();
            rm[a][b][c][d] = s;
          }
    T s = zero();
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c)
          for (int d = 0; d < 4; ++d) {
            T t = zero();
            for (int e = 0; e < 4; ++e)
              for (int f = 0; f < 4; ++f) t += rm[c][d][e][f] * rm[e][f][a][b];
            s += rm[a][b][c][d] * t;
          }
    out.v[5] = s;  // I6
  }

  if (B.has_nabla) {
    out.has_diff = true;
    {
      T s = zero();
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
          s += gu[a][b] * B.nabla_scalar[a].value() * B.nabla_scalar[b].value();
      out.v[6] = s;  // D1
    }
    {
      T s = zero();
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
          for (int c = 0; c < 4; ++c) {
            T up = zero();
            for (int p = 0; p < 4; ++p)
              for (int q = 0; q < 4; ++q)
                for (int r = 0; r < 4; ++r)
                  up += gu[a][p] * gu[b][q] * gu[c][r] * B.nabla_ricci[r][p][q].value();
            s += up * B.nabla_ricci[c][a][b].value();
          }
      out.v[7] = s;  // D2
    }
    {
      T s = zero();
      // raise via stepwise contraction to keep it O(4^6)
      for (int e = 0; e < 4; ++e) {
        auto up = raise_all(B.nabla_riem[e]);
        for (int ee = 0; ee < 4; ++ee) {
          if (scalar_traits<T>::is_zero(gu[e][ee]) ) continue;
          for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
              for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d)
                  s += gu[e][ee] * up[a][b][c][d] * B.nabla_riem[ee].at(a, b, c, d).value();
        }
      }
      out.v[8] = s;  // D3
    }
  }
  return out;
}

// max |R_ab - (R/4) g_ab|: zero iff Einstein at the point
template <class T>
T einstein_residual(const CurvatureBundle<T>& B) {
  const T quarter = scalar_traits<T>::from_ratio(1, 4);
  T lam = quarter * B.ricci_scalar.value();
  T mx = scalar_traits<T>::zero();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      T r = scalar_traits<T>::abs(B.ricci[a][b].value() - lam * B.g[a][b].value());
      if (scalar_traits<T>::to_double(r) > scalar_traits<T>::to_double(mx)) mx = r;
    }
  return mx;
}

template <class T>
T max_ricci(const CurvatureBundle<T>& B) {
  T mx = scalar_traits<T>::zero();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      T r = scalar_traits<T>::abs(B.ricci[a][b].value());
      if (scalar_traits<T>::to_double(r) > scalar_traits<T>::to_double(mx)) mx = r;
    }
  return mx;
}

// sigma = R_{0101} in the first null pair (l = du, n from the frame or the
// Kundt-form slots); works without a transverse frame
template <class T>
T sigma_component(const MetricInstance& m, const CurvatureBundle<T>& B) {
  auto params = param_values<T>(m);
  EvalContext<T> cx{m.registry.get(), &params, 0};
  std::array<T, 4> l{}, n{};
  if (m.frame) {
    for (int j = 0; j < 4; ++j) {
      l[j] = eval_jet(m.frame->cov[0][static_cast<std::size_t>(j)], m.chart.names, B.point, cx)
                 .value();
      n[j] = eval_jet(m.frame->cov[1][static_cast<std::size_t>(j)], m.chart.names, B.point, cx)
                 .value();
    }
  } else {
    const char* w2 = nullptr;
    const char* w3 = nullptr;
    if (m.family == "kundt") {
      w2 = "W_x2";
      w3 = "W_x3";
    } else if (m.family == "st_vsi") {
      w2 = "W_T";
      w3 = "W_X";
    } else {
      w2 = "W_v2";
      w3 = "W_u2";
    }
    l[1] = scalar_traits<T>::one();
    n[0] = scalar_traits<T>::one();
    n[1] = eval_jet(m.slot("H"), m.chart.names, B.point, cx).value();
    n[2] = eval_jet(m.slot(w2), m.chart.names, B.point, cx).value();
    n[3] = eval_jet(m.slot(w3), m.chart.names, B.point, cx).value();
  }
  Mat4V<T> E{};
  for (int mu = 0; mu < 4; ++mu) {
    T sl = scalar_traits<T>::zero(), sn = scalar_traits<T>::zero();
    for (int nu = 0; nu < 4; ++nu) {
      sl += B.ginv[mu][nu].value() * l[nu];
      sn += B.ginv[mu][nu].value() * n[nu];
    }
    E[0][static_cast<std::size_t>(mu)] = sl;
    E[1][static_cast<std::size_t>(mu)] = sn;
  }
  return riemann_frame_component(B, E, 0, 1, 0, 1);
}

// boost-weight component matrices in the instance frame (requires m.frame):
// frame labels 0=l1, 1=n1, 2,3 = transverse pair
template <class T>
struct BoostWeightMatrices {
  std::array<std::array<T, 2>, 2> a;   // a_{AB} = R_{01AB},   A,B in {2,3}
  std::array<std::array<T, 2>, 2> s;   // s_{AB} = 2 R_{0(A|1|B)}
  T rt;                                // transverse component R_{2323}
  T sigma;                             // R_{0101}
  std::array<T, 2> vecN;               // R_{010A}
  std::array<std::array<T, 2>, 2> eta; // transverse frame metric <w_A, w_B>
};

template <class T>
BoostWeightMatrices<T> boost_weight_matrices(const MetricInstance& m,
                                             const CurvatureBundle<T>& B) {
  Mat4V<T> E = frame_vectors(m, B);
  Mat4V<T> G = frame_gram(m, B);
  BoostWeightMatrices<T> out{};
  out.sigma = riemann_frame_component(B, E, 0, 1, 0, 1);
  out.rt = riemann_frame_component(B, E, 2, 3, 2, 3);
  for (int A = 0; A < 2; ++A) {
    out.vecN[static_cast<std::size_t>(A)] = riemann_frame_component(B, E, 0, 1, 0, A + 2);
    for (int Bi = 0; Bi < 2; ++Bi) {
      out.a[static_cast<std::size_t>(A)][static_cast<std::size_t>(Bi)] =
          riemann_frame_component(B, E, 0, 1, A + 2, Bi + 2);
      out.s[static_cast<std::size_t>(A)][static_cast<std::size_t>(Bi)] =
          riemann_frame_component(B, E, 0, A + 2, 1, Bi + 2) +
          riemann_frame_component(B, E, 0, Bi + 2, 1, A + 2);
      out.eta[static_cast<std::size_t>(A)][static_cast<std::size_t>(Bi)] =
          G[static_cast<std::size_t>(A + 2)][static_cast<std::size_t>(Bi + 2)];
    }
  }
  return out;
}

// nilpotency of a 2x2 matrix with one index raised by the transverse frame
// metric: trace == 0 and det == 0 (exact in rational mode)
template <class T>
struct NilpotencyVerdict {
  T trace_a, det_a, trace_s, det_s, rt, sigma, max_vecN;
};

template <class T>
NilpotencyVerdict<T> nilpotency_data(const BoostWeightMatrices<T>& bw) {
  // invert eta (2x2)
  T det = bw.eta[0][0] * bw.eta[1][1] - bw.eta[0][1] * bw.eta[1][0];
  if (scalar_traits<T>::is_zero(det))
    fail(ErrorKind::SingularMetric, "degenerate transverse frame metric");
  std::array<std::array<T, 2>, 2> etainv{};
  etainv[0][0] = bw.eta[1][1] / det;
  etainv[1][1] = bw.eta[0][0] / det;
  etainv[0][1] = -bw.eta[0][1] / det;
  etainv[1][0] = -bw.eta[1][0] / det;
  auto mixed = [&](const std::array<std::array<T, 2>, 2>& mdd) {
    std::array<std::array<T, 2>, 2> mud{};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        T s = scalar_traits<T>::zero();
        for (int k = 0; k < 2; ++k) s += etainv[i][k] * mdd[k][j];
        mud[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s;
      }
    return mud;
  };
  NilpotencyVerdict<T> out{};
  auto aud = mixed(bw.a);
  auto sud = mixed(bw.s);
  out.trace_a = aud[0][0] + aud[1][1];
  out.det_a = aud[0][0] * aud[1][1] - aud[0][1] * aud[1][0];
  out.trace_s = sud[0][0] + sud[1][1];
  out.det_s = sud[0][0] * sud[1][1] - sud[0][1] * sud[1][0];
  out.rt = bw.rt;
  out.sigma = bw.sigma;
  T m0 = scalar_traits<T>::abs(bw.vecN[0]);
  T m1 = scalar_traits<T>::abs(bw.vecN[1]);
  out.max_vecN = scalar_traits<T>::to_double(m0) > scalar_traits<T>::to_double(m1) ? m0 : m1;
  return out;
}

}  // namespace nsvsi
