#pragma once

// Pointwise tensor calculus over a chart: metric assembly and inversion,
// Christoffel symbols, Riemann/Ricci/Weyl, covariant derivatives, frame
// projections, Kundt kinematics and the Walker recurrence check.

#include <array>
#include <vector>

#include "geometry.hpp"
#include "jets.hpp"

namespace nsvsi {

template <class T>
using Mat4J = std::array<std::array<Jet<T>, 4>, 4>;

template <class T>
using Mat4V = std::array<std::array<T, 4>, 4>;

template <class T>
struct Riem4 {
  std::vector<Jet<T>> c;
  Riem4() = default;
  explicit Riem4(int order) : c(256, Jet<T>(order)) {}
  Jet<T>& at(int a, int b, int cc, int d) {
    return c[static_cast<std::size_t>(((a * 4 + b) * 4 + cc) * 4 + d)];
  }
  const Jet<T>& at(int a, int b, int cc, int d) const {
    return c[static_cast<std::size_t>(((a * 4 + b) * 4 + cc) * 4 + d)];
  }
};

template <class T>
struct CurvatureBundle {
  int order = 0;  // jet order of g at the point
  std::array<T, 4> point{};
  Mat4J<T> g, ginv;                 // order R
  std::array<Mat4J<T>, 4> gamma;    // gamma[a][b][c], order R-1
  Riem4<T> riem_ud, riem_dd;        // order R-2
  Mat4J<T> ricci;                   // order R-2
  Jet<T> ricci_scalar;              // order R-2
  Riem4<T> weyl;                    // order R-2
  bool has_nabla = false;
  std::array<Riem4<T>, 4> nabla_riem;    // [e], order R-3
  std::array<Mat4J<T>, 4> nabla_ricci;   // [c][a][b], order R-3
  std::array<Jet<T>, 4> nabla_scalar;    // order R-3
};

// 4x4 jet-matrix inverse by Gauss-Jordan; pivots on the constant term
template <class T>
Mat4J<T> invert4(const Mat4J<T>& m, int order) {
  std::array<std::array<Jet<T>, 8>, 4> a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 8; ++j)
      a[i][j] = j < 4 ? m[i][static_cast<std::size_t>(j)]
                      : (j - 4 == i ? Jet<T>::constant(order, scalar_traits<T>::one())
                                    : Jet<T>(order));
  for (int col = 0; col < 4; ++col) {
    int piv = -1;
    if constexpr (scalar_traits<T>::exact) {
      for (int r = col; r < 4; ++r)
        if (!scalar_traits<T>::is_zero(a[r][col].value())) {
          piv = r;
          break;
        }
    } else {
      double best = 0;
      for (int r = col; r < 4; ++r) {
        double v = std::fabs(scalar_traits<T>::to_double(a[r][col].value()));
        if (v > best) {
          best = v;
          piv = r;
        }
      }
    }
    if (piv < 0) fail(ErrorKind::SingularMetric, "metric is singular at the sample point");
    std::swap(a[col], a[piv]);
    Jet<T> inv_p = inverse(a[col][col]);
    for (int j = 0; j < 8; ++j) a[col][j] = a[col][j] * inv_p;
    for (int r = 0; r < 4; ++r) {
      if (r == col) continue;
      if (scalar_traits<T>::is_zero(a[r][col].value())) {
        bool allz = true;
        for (int q = 0; q < a[r][col].size(); ++q)
          if (!scalar_traits<T>::is_zero(a[r][col][q])) {
            allz = false;
            break;
          }
        if (allz) continue;
      }
      Jet<T> f = a[r][col];
      for (int j = 0; j < 8; ++j) a[r][j] = a[r][j] - f * a[col][j];
    }
  }
  Mat4J<T> out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i][j] = a[i][j + 4];
  return out;
}

template <class T>
CurvatureBundle<T> curvature_at(const MetricInstance& m, const std::array<T, 4>& point,
                                int order) {
  if (order < 2) fail(ErrorKind::InsufficientOrder, "curvature needs jet order >= 2");
  CurvatureBundle<T> B;
  B.order = order;
  B.point = point;
  auto params = param_values<T>(m);
  EvalContext<T> cx{m.registry.get(), &params, order};

  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) B.g[i][j] = eval_jet(m.g[i][j], m.chart.names, point, cx);
  B.ginv = invert4(B.g, order);

  const int gammaOrd = order - 1;
  Mat4J<T> ginv1;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) ginv1[i][j] = truncate(B.ginv[i][j], gammaOrd);
  std::array<Mat4J<T>, 4> dg;  // dg[c][a][b] = partial_c g_ab
  for (int c = 0; c < 4; ++c)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) dg[c][i][j] = partial(B.g[i][j], c);
  const T half = scalar_traits<T>::from_ratio(1, 2);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = b; c < 4; ++c) {
        Jet<T> s(gammaOrd);
        for (int d = 0; d < 4; ++d)
          s = s + ginv1[a][d] * (dg[c][d][b] + dg[b][d][c] - dg[d][b][c]);
        s = scale(s, half);
        B.gamma[a][b][c] = s;
        B.gamma[a][c][b] = std::move(s);
      }

  const int riemOrd = order - 2;
  std::array<Mat4J<T>, 4> gam2;  // truncated Gamma for products
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) gam2[a][b][c] = truncate(B.gamma[a][b][c], riemOrd);
  B.riem_ud = Riem4<T>(riemOrd);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = c + 1; d < 4; ++d) {
          Jet<T> r = partial(B.gamma[a][b][d], c) - partial(B.gamma[a][b][c], d);
          for (int e = 0; e < 4; ++e)
            r = r + gam2[a][e][c] * gam2[e][b][d] - gam2[a][e][d] * gam2[e][b][c];
          B.riem_ud.at(a, b, c, d) = r;
          B.riem_ud.at(a, b, d, c) = -r;
        }

  Mat4J<T> g2, ginv2;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      g2[i][j] = truncate(B.g[i][j], riemOrd);
      ginv2[i][j] = truncate(B.ginv[i][j], riemOrd);
    }
  B.riem_dd = Riem4<T>(riemOrd);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = c + 1; d < 4; ++d) {
          Jet<T> r(riemOrd);
          for (int e = 0; e < 4; ++e) r = r + g2[a][e] * B.riem_ud.at(e, b, c, d);
          B.riem_dd.at(a, b, c, d) = r;
          B.riem_dd.at(a, b, d, c) = -r;
        }

  for (int b = 0; b < 4; ++b)
    for (int d = b; d < 4; ++d) {
      Jet<T> r(riemOrd);
      for (int a = 0; a < 4; ++a) r = r + B.riem_ud.at(a, b, a, d);
      B.ricci[b][d] = r;
      B.ricci[d][b] = std::move(r);
    }
  B.ricci_scalar = Jet<T>(riemOrd);
  for (int b = 0; b < 4; ++b)
    for (int d = 0; d < 4; ++d) B.ricci_scalar = B.ricci_scalar + ginv2[b][d] * B.ricci[b][d];

  // 4D Weyl: C = R - 1/2 (g_ac R_bd - g_ad R_bc - g_bc R_ad + g_bd R_ac)
  //            + R/6 (g_ac g_bd - g_ad g_bc)
  const T sixth = scalar_traits<T>::from_ratio(1, 6);
  Jet<T> r6 = scale(B.ricci_scalar, sixth);
  B.weyl = Riem4<T>(riemOrd);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = c + 1; d < 4; ++d) {
          Jet<T> r = B.riem_dd.at(a, b, c, d);
          Jet<T> t = g2[a][c] * B.ricci[b][d] - g2[a][d] * B.ricci[b][c] -
                     g2[b][c] * B.ricci[a][d] + g2[b][d] * B.ricci[a][c];
          r = r - scale(t, half);
          r = r + r6 * (g2[a][c] * g2[b][d] - g2[a][d] * g2[b][c]);
          B.weyl.at(a, b, c, d) = r;
          B.weyl.at(a, b, d, c) = -r;
        }

  if (order >= 3) {
    B.has_nabla = true;
    const int nOrd = order - 3;
    std::array<Mat4J<T>, 4> gam3;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c) gam3[a][b][c] = truncate(B.gamma[a][b][c], nOrd);
    Riem4<T> rdd3(nOrd);
    for (int i = 0; i < 256; ++i) rdd3.c[static_cast<std::size_t>(i)] =
        truncate(B.riem_dd.c[static_cast<std::size_t>(i)], nOrd);
    for (int e = 0; e < 4; ++e) {
      B.nabla_riem[e] = Riem4<T>(nOrd);
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
          for (int c = 0; c < 4; ++c)
            for (int d = 0; d < 4; ++d) {
              Jet<T> r = partial(B.riem_dd.at(a, b, c, d), e);
              for (int f = 0; f < 4; ++f) {
                r = r - gam3[f][e][a] * rdd3.at(f, b, c, d);
                r = r - gam3[f][e][b] * rdd3.at(a, f, c, d);
                r = r - gam3[f][e][c] * rdd3.at(a, b, f, d);
                r = r - gam3[f][e][d] * rdd3.at(a, b, c, f);
              }
              B.nabla_riem[e].at(a, b, c, d) = std::move(r);
            }
    }
    Mat4J<T> ric3;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) ric3[a][b] = truncate(B.ricci[a][b], nOrd);
    for (int c = 0; c < 4; ++c) {
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
          Jet<T> r = partial(B.ricci[a][b], c);
          for (int f = 0; f < 4; ++f)
            r = r - gam3[f][c][a] * ric3[f][b] - gam3[f][c][b] * ric3[a][f];
          B.nabla_ricci[c][a][b] = std::move(r);
        }
      B.nabla_scalar[c] = partial(B.ricci_scalar, c);
    }
  }
  return B;
}

// generic covariant derivative of a fully-lower-index tensor given as jets
template <class T>
std::vector<Jet<T>> covariant_derivative(const CurvatureBundle<T>& B,
                                         const std::vector<Jet<T>>& comp, int rank) {
  if (comp.empty()) fail(ErrorKind::Internal, "covariant_derivative: empty tensor");
  const int srcOrd = comp[0].order();
  if (srcOrd < 1) fail(ErrorKind::InsufficientOrder, "covariant_derivative: order exhausted");
  const int outOrd = srcOrd - 1;
  std::size_t n = comp.size();
  std::vector<Jet<T>> out(4 * n, Jet<T>(outOrd));  // index order: [c][tensor-indices]
  std::vector<int> strides(static_cast<std::size_t>(rank));
  int s = 1;
  for (int k = rank - 1; k >= 0; --k) {
    strides[static_cast<std::size_t>(k)] = s;
    s *= 4;
  }
  for (int c = 0; c < 4; ++c) {
    for (std::size_t idx = 0; idx < n; ++idx) {
      Jet<T> r = partial(comp[idx], c);
      std::size_t rem = idx;
      for (int k = 0; k < rank; ++k) {
        const int stride = strides[static_cast<std::size_t>(k)];
        int ak = static_cast<int>(rem) / stride;
        rem = static_cast<std::size_t>(static_cast<int>(rem) % stride);
        for (int f = 0; f < 4; ++f) {
          std::size_t jdx = static_cast<std::size_t>(static_cast<long long>(idx) +
                                                     static_cast<long long>(f - ak) * stride);
          r = r - truncate(B.gamma[f][c][ak], outOrd) * truncate(comp[jdx], outOrd);
        }
      }
      out[static_cast<std::size_t>(c) * n + idx] = std::move(r);
    }
  }
  return out;
}

template <class T>
struct KundtKinematics {
  T null_norm;       // l.l at the point
  T geodesic;        // max |l^mu l_{nu;mu}|
  T expansion;       // l^mu_{;mu}
  T shear;           // l^{(nu;mu)} l_{(nu;mu)}
  T twist;           // l^{[nu;mu]} l_{[nu;mu]}
  Mat4V<T> L2;       // transverse L^{ij} (2x2 in [0..1])
  Mat4V<T> gram;     // transverse gram matrix <w_i, w_j>
};

// deterministic frame completion: n from the first coordinate covector with
// <l,e> != 0, transverse from the remaining ones projected against span(l,n)
template <class T>
std::array<std::array<T, 4>, 3> complete_frame_covectors(const Mat4V<T>& ginv,
                                                         const std::array<T, 4>& ell) {
  auto ip = [&](const std::array<T, 4>& a, const std::array<T, 4>& b) {
    T s = scalar_traits<T>::zero();
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) s += ginv[i][j] * a[i] * b[j];
    return s;
  };
  std::array<T, 4> n{};
  bool got_n = false;
  std::array<std::array<T, 4>, 2> w{};
  int wcount = 0;
  for (int k = 0; k < 4; ++k) {
    std::array<T, 4> e{};
    e[k] = scalar_traits<T>::one();
    if (!got_n) {
      T le = ip(ell, e);
      if (!scalar_traits<T>::is_zero(le)) {
        // n = (e - (<e,e>/(2<l,e>)) l)/<l,e>
        T ee = ip(e, e);
        T c = ee / (le + le);
        for (int i = 0; i < 4; ++i) n[i] = (e[i] - c * ell[i]) / le;
        got_n = true;
        continue;
      }
    }
    if (got_n && wcount < 2) {
      // project out span(l, n):  w = e - <e,n> l - <e,l> n
      T en = ip(e, n), el = ip(e, ell);
      std::array<T, 4> cand;
      for (int i = 0; i < 4; ++i) cand[i] = e[i] - en * ell[i] - el * n[i];
      bool nz = false;
      for (int i = 0; i < 4; ++i)
        if (!scalar_traits<T>::is_zero(cand[i])) nz = true;
      if (nz) w[static_cast<std::size_t>(wcount++)] = cand;
    }
  }
  if (!got_n || wcount < 2)
    fail(ErrorKind::SingularMetric, "frame completion failed at the sample point");
  return {n, w[0], w[1]};
}

template <class T>
KundtKinematics<T> kundt_kinematics(const MetricInstance& m,
                                    const std::array<Expr, 4>& ell_cov,
                                    const std::array<T, 4>& point, int order = 2) {
  CurvatureBundle<T> B = curvature_at(m, point, order);
  auto params = param_values<T>(m);
  EvalContext<T> cx{m.registry.get(), &params, order};
  std::array<Jet<T>, 4> lj;
  for (int i = 0; i < 4; ++i) lj[i] = eval_jet(ell_cov[i], m.chart.names, point, cx);

  Mat4V<T> ginv, K;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) ginv[i][j] = B.ginv[i][j].value();
  // K[mu][nu] = nabla_mu l_nu
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      T s = partial(lj[nu], mu).value();
      for (int a = 0; a < 4; ++a) s -= B.gamma[a][mu][nu].value() * lj[a].value();
      K[mu][nu] = s;
    }
  std::array<T, 4> l{}, lup{};
  for (int i = 0; i < 4; ++i) l[i] = lj[i].value();
  for (int i = 0; i < 4; ++i) {
    T s = scalar_traits<T>::zero();
    for (int j = 0; j < 4; ++j) s += ginv[i][j] * l[j];
    lup[i] = s;
  }
  KundtKinematics<T> out{};
  {
    T nn = scalar_traits<T>::zero();
    for (int i = 0; i < 4; ++i) nn += lup[i] * l[i];
    out.null_norm = nn;
  }
  {
    T mx = scalar_traits<T>::zero();
    for (int nu = 0; nu < 4; ++nu) {
      T s = scalar_traits<T>::zero();
      for (int mu = 0; mu < 4; ++mu) s += lup[mu] * K[mu][nu];
      T a = scalar_traits<T>::abs(s);
      if (scalar_traits<T>::to_double(a) > scalar_traits<T>::to_double(mx)) mx = a;
    }
    out.geodesic = mx;
  }
  {
    T s = scalar_traits<T>::zero();
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) s += ginv[nu][mu] * K[mu][nu];
    out.expansion = s;
  }
  Mat4V<T> Kup;  // K^{mu nu} = g^{mu a} g^{nu b} K_{a b}
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      T s = scalar_traits<T>::zero();
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) s += ginv[mu][a] * ginv[nu][b] * K[a][b];
      Kup[mu][nu] = s;
    }
  const T half = scalar_traits<T>::from_ratio(1, 2);
  {
    T sh = scalar_traits<T>::zero(), tw = scalar_traits<T>::zero();
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) {
        T su = half * (Kup[mu][nu] + Kup[nu][mu]);
        T sd = half * (K[mu][nu] + K[nu][mu]);
        T au = half * (Kup[mu][nu] - Kup[nu][mu]);
        T ad = half * (K[mu][nu] - K[nu][mu]);
        sh += su * sd;
        tw += au * ad;
      }
    out.shear = sh;
    out.twist = tw;
  }
  // transverse block
  std::array<std::array<T, 4>, 2> w;
  if (m.frame) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 4; ++j)
        w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            eval_jet(m.frame->cov[static_cast<std::size_t>(i + 2)][static_cast<std::size_t>(j)],
                     m.chart.names, point, cx)
                .value();
  } else {
    auto fr = complete_frame_covectors<T>(ginv, l);
    w[0] = fr[1];
    w[1] = fr[2];
  }
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      T s = scalar_traits<T>::zero();
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
          s += Kup[mu][nu] * w[static_cast<std::size_t>(i)][static_cast<std::size_t>(mu)] *
               w[static_cast<std::size_t>(j)][static_cast<std::size_t>(nu)];
      out.L2[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s;
      T gij = scalar_traits<T>::zero();
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
          gij += ginv[a][b] * w[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] *
                 w[static_cast<std::size_t>(j)][static_cast<std::size_t>(b)];
      out.gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = gij;
    }
  return out;
}

template <class T>
struct WalkerResult {
  std::array<T, 4> k;
  T residual;        // max |nabla_c B_ab - k_c B_ab|
  T bivector_norm;   // max |B_ab|
};

template <class T>
WalkerResult<T> walker_recurrence(const MetricInstance& m, const std::array<Expr, 4>& l1e,
                                  const std::array<Expr, 4>& l2e,
                                  const std::array<T, 4>& point, int order = 2) {
  CurvatureBundle<T> B = curvature_at(m, point, order);
  auto params = param_values<T>(m);
  EvalContext<T> cx{m.registry.get(), &params, order};
  std::array<Jet<T>, 4> l1, l2;
  for (int i = 0; i < 4; ++i) {
    l1[i] = eval_jet(l1e[i], m.chart.names, point, cx);
    l2[i] = eval_jet(l2e[i], m.chart.names, point, cx);
  }
  const T half = scalar_traits<T>::from_ratio(1, 2);
  Mat4J<T> F;  // bivector l1_[a] l2_b]
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) F[a][b] = scale(l1[a] * l2[b] - l1[b] * l2[a], half);

  WalkerResult<T> out{};
  T norm2 = scalar_traits<T>::zero();
  T bmax = scalar_traits<T>::zero();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      norm2 += F[a][b].value() * F[a][b].value();
      T aa = scalar_traits<T>::abs(F[a][b].value());
      if (scalar_traits<T>::to_double(aa) > scalar_traits<T>::to_double(bmax)) bmax = aa;
    }
  if (scalar_traits<T>::is_zero(norm2))
    fail(ErrorKind::Family, "walker_recurrence: bivector vanishes at the sample point");
  out.bivector_norm = bmax;
  T resid = scalar_traits<T>::zero();
  for (int c = 0; c < 4; ++c) {
    Mat4V<T> nab;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        T s = partial(F[a][b], c).value();
        for (int e = 0; e < 4; ++e)
          s -= B.gamma[e][c][a].value() * F[e][b].value() +
               B.gamma[e][c][b].value() * F[a][e].value();
        nab[a][b] = s;
      }
    T num = scalar_traits<T>::zero();
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) num += F[a][b].value() * nab[a][b];
    T kc = num / norm2;
    out.k[c] = kc;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        T r = scalar_traits<T>::abs(nab[a][b] - kc * F[a][b].value());
        if (scalar_traits<T>::to_double(r) > scalar_traits<T>::to_double(resid)) resid = r;
      }
  }
  out.residual = resid;
  return out;
}

// frame VECTORS (index raised) at the bundle's point; requires m.frame
template <class T>
Mat4V<T> frame_vectors(const MetricInstance& m, const CurvatureBundle<T>& B) {
  if (!m.frame) fail(ErrorKind::Family, "metric instance carries no null frame");
  auto params = param_values<T>(m);
  EvalContext<T> cx{m.registry.get(), &params, 0};
  Mat4V<T> out{};
  for (int i = 0; i < 4; ++i) {
    std::array<T, 4> cov{};
    for (int j = 0; j < 4; ++j)
      cov[j] = eval_jet(m.frame->cov[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                        m.chart.names, B.point, cx)
                   .value();
    for (int mu = 0; mu < 4; ++mu) {
      T s = scalar_traits<T>::zero();
      for (int nu = 0; nu < 4; ++nu) s += B.ginv[mu][nu].value() * cov[nu];
      out[static_cast<std::size_t>(i)][static_cast<std::size_t>(mu)] = s;
    }
  }
  return out;
}

// frame inner products l^i . l^j as values (for frame validation)
template <class T>
Mat4V<T> frame_gram(const MetricInstance& m, const CurvatureBundle<T>& B) {
  Mat4V<T> E = frame_vectors(m, B);
  auto params = param_values<T>(m);
  EvalContext<T> cx{m.registry.get(), &params, 0};
  Mat4V<T> out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      T s = scalar_traits<T>::zero();
      for (int mu = 0; mu < 4; ++mu)
        s += E[static_cast<std::size_t>(i)][static_cast<std::size_t>(mu)] *
             eval_jet(m.frame->cov[static_cast<std::size_t>(j)][static_cast<std::size_t>(mu)],
                      m.chart.names, B.point, cx)
                 .value();
      out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s;
    }
  return out;
}

// Riemann (all lower) projected on four frame vectors, as values
template <class T>
T riemann_frame_component(const CurvatureBundle<T>& B, const Mat4V<T>& E, int i, int j, int k,
                          int l) {
  T s = scalar_traits<T>::zero();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          const T& r = B.riem_dd.at(a, b, c, d).value();
          if (scalar_traits<T>::is_zero(r)) continue;
          s += r * E[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] *
               E[static_cast<std::size_t>(j)][static_cast<std::size_t>(b)] *
               E[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)] *
               E[static_cast<std::size_t>(l)][static_cast<std::size_t>(d)];
        }
  return s;
}

}  // namespace nsvsi
