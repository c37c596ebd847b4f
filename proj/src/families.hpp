#pragma once

// Constructors for every metric family and closed-form solution.

#include <memory>

#include "geometry.hpp"

namespace nsvsi {
namespace families {

using Params = std::map<std::string, std::pair<long long, long long>>;
using Registry = std::shared_ptr<FunctionRegistry>;

// 2 du1 dv1 + 2 du2 dv2, chart (v1,u1,v2,u2)
MetricInstance flat();

// ds^2 = 2du[dv + H du + W_A dx^A] + g_AB dx^A dx^B, chart (v,u,x2,x3);
// g_AB must not depend on v
MetricInstance kundt(Expr H, Expr W2, Expr W3, std::array<std::array<Expr, 2>, 2> gAB,
                     Registry reg = nullptr, Params params = {});

// 4D Walker canonical form with a 2D invariant null plane, chart (v1,u1,v2,u2):
// ds^2 = du^I (2 delta_IJ dv^J + B_IJ du^J); B may depend on all coordinates
MetricInstance walker_plane(std::array<std::array<Expr, 2>, 2> B, Registry reg = nullptr,
                            Params params = {});

struct NullVsiParams {
  Expr W1u2, W0u2, W0v2, H1, H0;  // coordinate dependences per the family
};
MetricInstance null_vsi(const NullVsiParams& p, Registry reg = nullptr, Params params = {});

struct StVsiParams {
  int eps = 1;  // 0 or 1; fixes W1 = -2 eps / X
  Expr W0T, W0X, H1, H0;
};
MetricInstance st_vsi(const StVsiParams& p, Registry reg = nullptr, Params params = {});

// assembly with a free W1(u1,T,X) slot (used by transformed instances)
MetricInstance st_assemble(Expr W1, Expr W0T, Expr W0X, Expr H1, Expr H0, Registry reg,
                           Params params);

// special Ricci-flat VSI solution: all W = 0, H = F1(u1,v2) + F2(u1,u2)
MetricInstance special_vsi(const std::string& F1, const std::string& F2, Registry reg,
                           Params params = {});

// branch A (W1 = 0): registered alpha(u1,u2), beta(u1,v2), gamma(u1,u2),
// F1(u1,u2), F2(u1,v2); antiderivative declarations required:
// (alpha,u2), (beta,v2), (gamma,u2)
struct BranchAFns {
  std::string alpha, beta, gamma, F1, F2;
};
MetricInstance null_vsi_branchA(const BranchAFns& f, Registry reg, Params params = {});

// branch B (W1 = -2f, f = 1/(alpha(u1)+u2)): registered alpha(u1),
// delta(u1,u2), gamma(u1,v2), eta(u1,u2), F1(u1,v2), F2(u1,u2) plus the
// integral slots, each a registered function verified at construction:
//   G(u1,v2):  dG/dv2  = gamma
//   P(u1,u2):  dP/du2  = f*delta
//   K(u1,u2):  dK/du2  = f^2*delta
//   J3(u1,u2): dJ3/du2 = f*(d delta/d u1)
//   J8(u1,u2): dJ8/du2 = f^2*eta
struct BranchBFns {
  std::string alpha, delta, gamma, eta, F1, F2;
  std::string G, P, K, J3, J8;
};
MetricInstance null_vsi_branchB(const BranchBFns& f, Registry reg, Params params = {});

// spacelike/timelike solution (eps = 1, W_T = 0 gauge): registered
// alpha(u1,X), beta(u1,A), gamma(u1,B); H0 supplied by the caller and
// validated against the st-vacuum residuals downstream
MetricInstance st_vsi_solution(const std::string& alpha, const std::string& beta,
                               const std::string& gamma, Expr H0, Registry reg,
                               Params params = {});

// CSI example 1, chart (v,u,T,X); named params K (and optionally A,B,sigma
// which default to -2K, 0, 0); frame and metric per the paper's display
struct Csi1Params {
  Expr H1, H0, WX0, WT0;
};
MetricInstance csi1(const Csi1Params& p, Registry reg, Params params);

// solved preset: H1 = -K(C1 T + C2)/2, WX0 = C1 T + C2,
// H0 = (C1 T + C2)^2/4 + C0 exp(-K X); Einstein with Lambda = -3K^2
MetricInstance csi1_solved(Params params);  // needs K, C1, C2, C0

// Kaigorodov subcase: H1 = WX0 = WT0 = 0, H0 = C0 exp(-K X)
MetricInstance csi1_kaigorodov(Params params);  // needs K, C0

// CSI example 2 (A=0, alpha=-2, beta=2B), chart (v,u,U,V); named param B != 0
struct Csi2Params {
  Expr H1, H0, WU0, WV0;
};
MetricInstance csi2(const Csi2Params& p, Registry reg, Params params);

// solved preset: H1 = a0 + b0/V^3, WU0 = (-4B b0 U + d0)/V + (3/2) b0/V^2,
// WV0 = 0, with the closed-form H0; Einstein with Lambda = 6B
MetricInstance csi2_solved(Params params);  // needs B, a0, b0, d0

struct FamilyInfo {
  std::string id;
  std::string chart;
  std::string summary;
  std::vector<std::string> slots;
  std::vector<std::string> presets;
};
const std::vector<FamilyInfo>& catalog();

}  // namespace families
}  // namespace nsvsi
