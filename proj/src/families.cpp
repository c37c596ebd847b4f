#include "families.hpp"

#include <algorithm>

#include "eval.hpp"

namespace nsvsi {
namespace families {

namespace {

using namespace ex;

Registry ensure(Registry reg) {
  return reg ? reg : std::make_shared<FunctionRegistry>();
}

void forbid(const Expr& e, const std::string& coordname, const std::string& what) {
  if (uses_symbol(e, coordname))
    fail(ErrorKind::Family, what + " must not depend on " + coordname);
}

void require_args(const FunctionRegistry& reg, const std::string& fn,
                  const std::vector<std::string>& args) {
  const auto& def = reg.get(fn);
  if (def.args != args) {
    std::string want;
    for (const auto& a : args) want += (want.empty() ? "" : ",") + a;
    fail(ErrorKind::Family, "function '" + fn + "' must have arguments (" + want + ")");
  }
}

// dF/d(var) == integrand checked at a few deterministic probe points
void verify_slot(const FunctionRegistry& reg, const std::string& F, const std::string& var,
                 const Expr& integrand, const std::vector<std::string>& chart,
                 const std::vector<std::array<double, 4>>& probes, const Params& fam_params) {
  if (!reg.has(F)) fail(ErrorKind::Family, "missing antiderivative function '" + F + "'");
  const auto& def = reg.get(F);
  auto it = std::find(def.args.begin(), def.args.end(), var);
  if (it == def.args.end())
    fail(ErrorKind::Family, "antiderivative '" + F + "' lacks argument '" + var + "'");
  std::vector<Expr> args;
  for (const auto& a : def.args) args.push_back(coord(a));
  std::vector<int> counts(def.args.size(), 0);
  counts[static_cast<std::size_t>(it - def.args.begin())] = 1;
  Expr dF = slot_deriv(F, counts, args);
  std::map<std::string, double> params;
  for (const auto& [k, v] : fam_params)
    params[k] = scalar_traits<double>::from_ratio(v.first, v.second);
  EvalContext<double> cx{&reg, &params, 1};
  for (const auto& p : probes) {
    double lhs = eval_jet(dF, chart, p, cx).value();
    double rhs = eval_jet(integrand, chart, p, cx).value();
    if (std::fabs(lhs - rhs) > 1e-8 * (1.0 + std::fabs(rhs)))
      fail(ErrorKind::Family, "antiderivative '" + F + "' does not match its integrand wrt " +
                                  var + " (residual " + std::to_string(lhs - rhs) + ")");
  }
}

std::array<std::array<Expr, 4>, 4> zero_metric() {
  std::array<std::array<Expr, 4>, 4> g;
  for (auto& row : g)
    for (auto& e : row) e = num(0);
  return g;
}

NullFrame frame4(std::array<Expr, 4> l1, std::array<Expr, 4> n1, std::array<Expr, 4> l2,
                 std::array<Expr, 4> n2) {
  NullFrame f;
  f.cov = {l1, n1, l2, n2};
  return f;
}

}  // namespace

MetricInstance flat() {
  MetricInstance m;
  m.chart = Chart{{"v1", "u1", "v2", "u2"}};
  m.g = zero_metric();
  m.g[0][1] = m.g[1][0] = num(1);
  m.g[2][3] = m.g[3][2] = num(1);
  m.frame = frame4({num(0), num(1), num(0), num(0)}, {num(1), num(0), num(0), num(0)},
                   {num(0), num(0), num(0), num(1)}, {num(0), num(0), num(1), num(0)});
  m.family = "flat";
  m.slots = {{"W1_u2", num(0)}, {"W0_u2", num(0)}, {"W0_v2", num(0)}, {"H1", num(0)},
             {"H0", num(0)},    {"H", num(0)},     {"W_u2", num(0)},  {"W_v2", num(0)}};
  m.registry = std::make_shared<FunctionRegistry>();
  return m;
}

MetricInstance kundt(Expr H, Expr W2, Expr W3, std::array<std::array<Expr, 2>, 2> gAB,
                     Registry reg, Params params) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) forbid(gAB[i][j], "v", "transverse block g_AB");
  MetricInstance m;
  m.chart = Chart{{"v", "u", "x2", "x3"}};
  m.g = zero_metric();
  m.g[0][1] = m.g[1][0] = num(1);
  m.g[1][1] = mul({num(2), H});
  m.g[1][2] = m.g[2][1] = W2;
  m.g[1][3] = m.g[3][1] = W3;
  m.g[2][2] = gAB[0][0];
  m.g[2][3] = m.g[3][2] = gAB[0][1];
  m.g[3][3] = gAB[1][1];
  m.family = "kundt";
  m.slots = {{"H", H}, {"W_x2", W2}, {"W_x3", W3}};
  m.params = std::move(params);
  m.registry = ensure(std::move(reg));
  return m;
}

MetricInstance walker_plane(std::array<std::array<Expr, 2>, 2> B, Registry reg, Params params) {
  MetricInstance m;
  m.chart = Chart{{"v1", "u1", "v2", "u2"}};
  m.g = zero_metric();
  m.g[0][1] = m.g[1][0] = num(1);
  m.g[2][3] = m.g[3][2] = num(1);
  m.g[1][1] = B[0][0];
  m.g[1][3] = m.g[3][1] = B[0][1];
  m.g[3][3] = B[1][1];
  m.family = "walker";
  m.slots = {{"B11", B[0][0]}, {"B12", B[0][1]}, {"B22", B[1][1]}};
  m.params = std::move(params);
  m.registry = ensure(std::move(reg));
  return m;
}

MetricInstance null_vsi(const NullVsiParams& p, Registry reg, Params params) {
  forbid(p.W1u2, "v1", "W1_u2");
  forbid(p.W1u2, "v2", "W1_u2");
  forbid(p.W0u2, "v1", "W0_u2");
  forbid(p.W0v2, "v1", "W0_v2");
  forbid(p.H1, "v1", "H1");
  forbid(p.H0, "v1", "H0");
  Expr v1 = coord("v1");
  Expr H = add({mul({v1, p.H1}), p.H0});
  Expr Wu2 = add({mul({v1, p.W1u2}), p.W0u2});
  Expr Wv2 = p.W0v2;
  MetricInstance m;
  m.chart = Chart{{"v1", "u1", "v2", "u2"}};
  m.g = zero_metric();
  m.g[0][1] = m.g[1][0] = num(1);
  m.g[1][1] = mul({num(2), H});
  m.g[1][2] = m.g[2][1] = Wv2;
  m.g[1][3] = m.g[3][1] = Wu2;
  m.g[2][3] = m.g[3][2] = num(1);
  m.frame = frame4({num(0), num(1), num(0), num(0)}, {num(1), H, Wv2, Wu2},
                   {num(0), num(0), num(0), num(1)}, {num(0), num(0), num(1), num(0)});
  m.family = "null_vsi";
  m.slots = {{"W1_u2", p.W1u2}, {"W0_u2", p.W0u2}, {"W0_v2", p.W0v2},
             {"H1", p.H1},      {"H0", p.H0},      {"H", H},
             {"W_u2", Wu2},     {"W_v2", Wv2}};
  m.params = std::move(params);
  m.registry = ensure(std::move(reg));
  return m;
}

MetricInstance st_assemble(Expr W1, Expr W0T, Expr W0X, Expr H1, Expr H0, Registry reg,
                           Params params) {
  Expr v1 = coord("v1");
  Expr H = add({mul({pow(v1, 2), pow(W1, 2), ratio(1, 8)}), mul({v1, H1}), H0});
  Expr WX = add({mul({v1, W1}), W0X});
  Expr WT = W0T;
  MetricInstance m;
  m.chart = Chart{{"v1", "u1", "T", "X"}};
  m.g = zero_metric();
  m.g[0][1] = m.g[1][0] = num(1);
  m.g[1][1] = mul({num(2), H});
  m.g[1][2] = m.g[2][1] = WT;
  m.g[1][3] = m.g[3][1] = WX;
  m.g[2][2] = num(-1);
  m.g[3][3] = num(1);
  // l2 = (dX - dT)/2, n2 = dX + dT reproduce -dT^2 + dX^2 with l2.n2 = 1
  m.frame = frame4({num(0), num(1), num(0), num(0)}, {num(1), H, WT, WX},
                   {num(0), num(0), ratio(-1, 2), ratio(1, 2)},
                   {num(0), num(0), num(1), num(1)});
  m.family = "st_vsi";
  m.slots = {{"W1", W1}, {"W0_T", W0T}, {"W0_X", W0X}, {"H1", H1}, {"H0", H0},
             {"H", H},   {"W_T", WT},   {"W_X", WX}};
  m.params = std::move(params);
  m.registry = ensure(std::move(reg));
  return m;
}

MetricInstance st_vsi(const StVsiParams& p, Registry reg, Params params) {
  if (p.eps != 0 && p.eps != 1) fail(ErrorKind::Family, "st_vsi: eps must be 0 or 1");
  for (const auto& [nm, e] :
       std::initializer_list<std::pair<const char*, const Expr*>>{
           {"W0_T", &p.W0T}, {"W0_X", &p.W0X}, {"H1", &p.H1}, {"H0", &p.H0}})
    forbid(*e, "v1", std::string(nm));
  Expr W1 = p.eps == 0 ? num(0) : quot(num(-2), coord("X"));
  MetricInstance m = st_assemble(W1, p.W0T, p.W0X, p.H1, p.H0, std::move(reg), std::move(params));
  m.params["eps"] = {p.eps, 1};
  return m;
}

MetricInstance special_vsi(const std::string& F1, const std::string& F2, Registry reg,
                           Params params) {
  reg = ensure(std::move(reg));
  require_args(*reg, F1, {"u1", "v2"});
  require_args(*reg, F2, {"u1", "u2"});
  NullVsiParams p;
  p.W1u2 = num(0);
  p.W0u2 = num(0);
  p.W0v2 = num(0);
  p.H1 = num(0);
  p.H0 = add({apply(F1, {coord("u1"), coord("v2")}), apply(F2, {coord("u1"), coord("u2")})});
  MetricInstance m = null_vsi(p, std::move(reg), std::move(params));
  m.slots["preset"] = param("special_vsi");
  return m;
}

MetricInstance null_vsi_branchA(const BranchAFns& f, Registry reg, Params params) {
  reg = ensure(std::move(reg));
  require_args(*reg, f.alpha, {"u1", "u2"});
  require_args(*reg, f.beta, {"u1", "v2"});
  require_args(*reg, f.gamma, {"u1", "u2"});
  require_args(*reg, f.F1, {"u1", "u2"});
  require_args(*reg, f.F2, {"u1", "v2"});
  auto anti = [&](const std::string& g, const std::string& var) {
    auto F = reg->antiderivative_of(g, var);
    if (!F)
      fail(ErrorKind::Family,
           "branchA: missing antiderivative declaration for (" + g + ", " + var + ")");
    return *F;
  };
  std::string Ia = anti(f.alpha, "u2");
  std::string Ib = anti(f.beta, "v2");
  std::string Ig = anti(f.gamma, "u2");
  require_args(*reg, Ia, {"u1", "u2"});
  require_args(*reg, Ib, {"u1", "v2"});
  require_args(*reg, Ig, {"u1", "u2"});
  const std::vector<std::string> chart{"v1", "u1", "v2", "u2"};
  std::vector<std::array<double, 4>> probes{
      {0.0, 0.7, 0.9, 1.3}, {0.0, -0.4, 1.7, 0.6}, {0.0, 1.1, -0.8, 2.1}};
  Expr u1 = coord("u1"), u2 = coord("u2"), v2 = coord("v2");
  verify_slot(*reg, Ia, "u2", apply(f.alpha, {u1, u2}), chart, probes, params);
  verify_slot(*reg, Ib, "v2", apply(f.beta, {u1, v2}), chart, probes, params);
  verify_slot(*reg, Ig, "u2", apply(f.gamma, {u1, u2}), chart, probes, params);

  Expr al = apply(f.alpha, {u1, u2});
  Expr be = apply(f.beta, {u1, v2});
  Expr ga = apply(f.gamma, {u1, u2});
  Expr IA = apply(Ia, {u1, u2});
  Expr IB = apply(Ib, {u1, v2});
  Expr IG = apply(Ig, {u1, u2});
  Expr IA_u1 = slot_deriv(Ia, {1, 0}, {u1, u2});
  Expr IB_u1 = slot_deriv(Ib, {1, 0}, {u1, v2});

  NullVsiParams p;
  p.W1u2 = num(0);
  p.W0v2 = num(0);
  p.H1 = add({al, be});
  p.W0u2 = add({mul({num(2), al, v2}), neg(mul({num(2), IB})), ga});
  p.H0 = add({mul({num(2), be, v2, IA}), neg(mul({num(2), be, u2, IB})), mul({be, IG}),
              mul({v2, IA_u1}), neg(mul({u2, IB_u1})),
              apply(f.F1, {u1, u2}), apply(f.F2, {u1, v2})});
  MetricInstance m = null_vsi(p, std::move(reg), std::move(params));
  m.slots["preset"] = param("branchA");
  return m;
}

MetricInstance null_vsi_branchB(const BranchBFns& f, Registry reg, Params params) {
  reg = ensure(std::move(reg));
  require_args(*reg, f.alpha, {"u1"});
  require_args(*reg, f.delta, {"u1", "u2"});
  require_args(*reg, f.gamma, {"u1", "v2"});
  require_args(*reg, f.eta, {"u1", "u2"});
  require_args(*reg, f.F1, {"u1", "v2"});
  require_args(*reg, f.F2, {"u1", "u2"});
  require_args(*reg, f.G, {"u1", "v2"});
  for (const auto& s : {f.P, f.K, f.J3, f.J8}) require_args(*reg, s, {"u1", "u2"});

  Expr u1 = coord("u1"), u2 = coord("u2"), v2 = coord("v2");
  Expr al = apply(f.alpha, {u1});
  Expr alp = slot_deriv(f.alpha, {1}, {u1});  // d alpha / d u1
  Expr de = apply(f.delta, {u1, u2});
  Expr ga = apply(f.gamma, {u1, v2});
  Expr et = apply(f.eta, {u1, u2});
  Expr finv = add({al, u2});             // 1/f = alpha + u2
  Expr fe = quot(num(1), finv);          // f
  const std::vector<std::string> chart{"v1", "u1", "v2", "u2"};
  std::vector<std::array<double, 4>> probes{
      {0.0, 0.8, 0.6, 1.2}, {0.0, 1.3, -0.5, 0.9}, {0.0, 0.5, 1.4, 2.0}};
  verify_slot(*reg, f.G, "v2", ga, chart, probes, params);
  verify_slot(*reg, f.P, "u2", mul({fe, de}), chart, probes, params);
  verify_slot(*reg, f.K, "u2", mul({pow(fe, 2), de}), chart, probes, params);
  verify_slot(*reg, f.J3, "u2", mul({fe, slot_deriv(f.delta, {1, 0}, {u1, u2})}), chart, probes, params);
  verify_slot(*reg, f.J8, "u2", mul({pow(fe, 2), et}), chart, probes, params);

  Expr G = apply(f.G, {u1, v2});
  Expr G_u1 = slot_deriv(f.G, {1, 0}, {u1, v2});
  Expr P = apply(f.P, {u1, u2});
  Expr K = apply(f.K, {u1, u2});
  Expr J3 = apply(f.J3, {u1, u2});
  Expr J8 = apply(f.J8, {u1, u2});
  Expr F1 = apply(f.F1, {u1, v2});
  Expr F2 = apply(f.F2, {u1, u2});

  NullVsiParams p;
  p.W1u2 = mul({num(-2), fe});
  p.W0v2 = num(0);
  p.H1 = add({mul({ratio(1, 2), de}), neg(mul({alp, fe})), P, mul({fe, ga})});
  p.W0u2 = add({mul({de, v2}), neg(mul({num(2), fe, G})), et});
  // H0 derived by integrating the R_{u1u1} equation (the paper's display does
  // not satisfy it; see the verification notes)
  Expr vblock = add({mul({ratio(-1, 2), alp, K}), mul({ratio(1, 4), pow(P, 2)}),
                     mul({ratio(1, 2), J3})});
  p.H0 = add({mul({finv, add({mul({v2, vblock}), mul({K, sub(mul({v2, ga}), G)}),
                              mul({J8, ga}), F1})}),
              mul({P, G}), mul({fe, G, sub(ga, alp)}), G_u1, F2});
  MetricInstance m = null_vsi(p, std::move(reg), std::move(params));
  m.slots["preset"] = param("branchB");
  return m;
}

MetricInstance st_vsi_solution(const std::string& alpha, const std::string& beta,
                               const std::string& gamma, Expr H0, Registry reg,
                               Params params) {
  reg = ensure(std::move(reg));
  require_args(*reg, alpha, {"u1", "X"});
  require_args(*reg, beta, {"u1", "A"});
  require_args(*reg, gamma, {"u1", "B"});
  Expr u1 = coord("u1"), T = coord("T"), X = coord("X");
  Expr A = add({X, T});
  Expr Bc = sub(X, T);
  Expr al = apply(alpha, {u1, X});
  Expr be = apply(beta, {u1, A});
  Expr ga = apply(gamma, {u1, Bc});
  Expr al_X = slot_deriv(alpha, {0, 1}, {u1, X});
  Expr beP = slot_deriv(beta, {0, 1}, {u1, A});
  Expr gaP = slot_deriv(gamma, {0, 1}, {u1, Bc});

  StVsiParams p;
  p.eps = 1;
  p.W0T = num(0);
  p.W0X = add({mul({quot(num(2), X), add({be, ga, neg(al)})}), al_X});
  p.H1 = mul({quot(num(1), pow(X, 2)),
              add({al, neg(be), neg(ga), neg(mul({X, beP})), neg(mul({X, gaP}))})});
  p.H0 = std::move(H0);
  MetricInstance m = st_vsi(p, std::move(reg), std::move(params));
  m.slots["preset"] = param("st_solution");
  return m;
}

namespace {
Expr require_param(const Params& params, const std::string& name) {
  if (!params.count(name)) fail(ErrorKind::Family, "missing named parameter '" + name + "'");
  return param(name);
}
}  // namespace

MetricInstance csi1(const Csi1Params& p, Registry reg, Params params) {
  Expr K = require_param(params, "K");
  if (params.at("K").first == 0)
    fail(ErrorKind::Family, "csi1: K=0 is not consistent with the Einstein system");
  for (const auto& [nm, e] :
       std::initializer_list<std::pair<const char*, const Expr*>>{
           {"H1", &p.H1}, {"H0", &p.H0}, {"WX0", &p.WX0}, {"WT0", &p.WT0}})
    forbid(*e, "v", std::string(nm));
  Expr v = coord("v"), X = coord("X");
  Expr eI = ex::exp(mul({K, X}));
  Expr eT = ex::exp(mul({num(2), K, X}));
  // A = -2K, B = 0, sigma = 0
  Expr H = add({mul({v, p.H1}), p.H0});
  Expr WX = add({mul({num(-2), K, v}), p.WX0});
  Expr WT = mul({p.WT0, eI});
  MetricInstance m;
  m.chart = Chart{{"v", "u", "T", "X"}};
  m.g = zero_metric();
  m.g[0][1] = m.g[1][0] = num(1);
  m.g[1][1] = mul({num(2), H});
  m.g[1][2] = m.g[2][1] = WT;
  m.g[1][3] = m.g[3][1] = WX;
  m.g[2][2] = neg(eT);
  m.g[3][3] = num(1);
  // l2 = (dX - e^{KX} dT)/2, n2 = dX + e^{KX} dT
  m.frame = frame4({num(0), num(1), num(0), num(0)}, {num(1), H, WT, WX},
                   {num(0), num(0), mul({ratio(-1, 2), eI}), ratio(1, 2)},
                   {num(0), num(0), eI, num(1)});
  m.family = "csi1";
  m.slots = {{"H1", p.H1}, {"H0", p.H0}, {"WX0", p.WX0}, {"WT0", p.WT0}};
  m.params = std::move(params);
  m.registry = ensure(std::move(reg));
  return m;
}

MetricInstance csi1_solved(Params params) {
  Expr K = require_param(params, "K");
  Expr C1 = require_param(params, "C1");
  Expr C2 = require_param(params, "C2");
  Expr C0 = require_param(params, "C0");
  Expr T = coord("T"), X = coord("X");
  Expr lin = add({mul({C1, T}), C2});  // C1 T + C2
  Csi1Params p;
  p.H1 = mul({ratio(-1, 2), K, lin});
  p.WX0 = lin;
  p.WT0 = num(0);
  p.H0 = add({mul({ratio(1, 4), pow(lin, 2)}), mul({C0, ex::exp(mul({neg(K), X}))})});
  MetricInstance m = csi1(p, nullptr, std::move(params));
  m.slots["preset"] = param("csi1_solved");
  return m;
}

MetricInstance csi1_kaigorodov(Params params) {
  params["C1"] = {0, 1};
  params["C2"] = {0, 1};
  MetricInstance m = csi1_solved(std::move(params));
  m.slots["preset"] = param("kaigorodov");
  return m;
}

MetricInstance csi2(const Csi2Params& p, Registry reg, Params params) {
  Expr B = require_param(params, "B");
  if (params.at("B").first == 0) fail(ErrorKind::Family, "csi2: B must be nonzero");
  for (const auto& [nm, e] :
       std::initializer_list<std::pair<const char*, const Expr*>>{
           {"H1", &p.H1}, {"H0", &p.H0}, {"WU0", &p.WU0}, {"WV0", &p.WV0}})
    forbid(*e, "v", std::string(nm));
  Expr v = coord("v"), U = coord("U"), V = coord("V");
  Expr H = add({mul({v, p.H1}), p.H0});
  Expr guU = add({p.WU0, mul({B, pow(V, 2), p.WV0})});  // v-terms cancel identically
  Expr guV = add({mul({num(-2), quot(v, V)}), p.WV0});
  MetricInstance m;
  m.chart = Chart{{"v", "u", "U", "V"}};
  m.g = zero_metric();
  m.g[0][1] = m.g[1][0] = num(1);
  m.g[1][1] = mul({num(2), H});
  m.g[1][2] = m.g[2][1] = guU;
  m.g[1][3] = m.g[3][1] = guV;
  m.g[2][2] = mul({num(2), B, pow(V, 2)});
  m.g[2][3] = m.g[3][2] = num(1);
  m.frame = frame4({num(0), num(1), num(0), num(0)}, {num(1), H, guU, guV},
                   {num(0), num(0), num(1), num(0)},
                   {num(0), num(0), mul({B, pow(V, 2)}), num(1)});
  m.family = "csi2";
  m.slots = {{"H1", p.H1}, {"H0", p.H0}, {"WU0", p.WU0}, {"WV0", p.WV0}};
  m.params = std::move(params);
  m.registry = ensure(std::move(reg));
  return m;
}

MetricInstance csi2_solved(Params params) {
  Expr B = require_param(params, "B");
  Expr a0 = require_param(params, "a0");
  Expr b0 = require_param(params, "b0");
  Expr d0 = require_param(params, "d0");
  Expr U = coord("U"), V = coord("V");
  Csi2Params p;
  p.H1 = add({a0, quot(b0, pow(V, 3))});
  p.WU0 = add({quot(add({mul({num(-4), B, b0, U}), d0}), V),
               mul({ratio(3, 2), quot(b0, pow(V, 2))})});
  p.WV0 = num(0);
  p.H0 = add({neg(quot(mul({a0, b0, U}), mul({num(2), pow(V, 2)}))),
              quot(mul({num(2), B, pow(b0, 2), pow(U, 2)}), pow(V, 4)),
              neg(quot(mul({b0, d0, U}), pow(V, 4))),
              neg(mul({ratio(5, 2), quot(mul({pow(b0, 2), U}), pow(V, 5))})),
              quot(mul({a0, d0}), mul({num(8), B, pow(V, 2)})),
              quot(mul({num(3), a0, b0}), mul({num(10), B, pow(V, 3)})),
              quot(pow(d0, 2), mul({num(8), B, pow(V, 4)})),
              quot(mul({num(5), b0, d0}), mul({num(8), B, pow(V, 5)})),
              quot(mul({num(3), pow(b0, 2)}), mul({num(4), B, pow(V, 6)}))});
  MetricInstance m = csi2(p, nullptr, std::move(params));
  m.slots["preset"] = param("csi2_solved");
  return m;
}

const std::vector<FamilyInfo>& catalog() {
  static const std::vector<FamilyInfo> cat = {
      {"flat", "(v1,u1,v2,u2)", "flat neutral metric 2du1dv1 + 2du2dv2", {}, {}},
      {"kundt", "(v,u,x2,x3)",
       "generic Kundt form 2du[dv+Hdu+W_A dx^A]+g_AB dx^A dx^B", {"H", "W_x2", "W_x3",
       "g22", "g23", "g33"}, {}},
      {"walker", "(v1,u1,v2,u2)",
       "4D Walker canonical form with a 2D invariant null plane", {"B11", "B12", "B22"}, {}},
      {"null_vsi", "(v1,u1,v2,u2)", "null-case VSI family",
       {"W1_u2", "W0_u2", "W0_v2", "H1", "H0"},
       {"special_vsi", "branchA", "branchB"}},
      {"st_vsi", "(v1,u1,T,X)", "spacelike/timelike VSI family (W1 = -2 eps/X)",
       {"W0_T", "W0_X", "H1", "H0"}, {"st_solution"}},
      {"null_vsi_branchA", "(v1,u1,v2,u2)",
       "vacuum solution branch with W1 = 0 (registered alpha,beta,gamma,F1,F2)",
       {}, {}},
      {"null_vsi_branchB", "(v1,u1,v2,u2)",
       "vacuum solution branch with W1 = -2/(alpha+u2) and verified integral slots",
       {}, {}},
      {"st_solution", "(v1,u1,T,X)",
       "spacelike/timelike vacuum solution from alpha(u,X), beta(u,A), gamma(u,B)",
       {}, {}},
      {"csi1", "(v,u,T,X)", "CSI example 1 (A=-2K, B=0): Einstein with Lambda=-3K^2",
       {"H1", "H0", "WX0", "WT0"}, {"csi1_solved", "kaigorodov"}},
      {"csi2", "(v,u,U,V)", "CSI example 2 (A=0, alpha=-2, beta=2B): Einstein with Lambda=6B",
       {"H1", "H0", "WU0", "WV0"}, {"csi2_solved"}},
  };
  return cat;
}

}  // namespace families
}  // namespace nsvsi
