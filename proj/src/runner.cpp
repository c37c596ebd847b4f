#include "runner.hpp"

#include <fstream>

#include <json.hpp>

#include "families.hpp"
#include "invariants.hpp"
#include "residuals.hpp"
#include "transforms.hpp"

namespace nsvsi {

std::uint64_t SampleStream::next_u64() {
  // splitmix64: stable across platforms
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double SampleStream::next_unit() {
  return static_cast<double>(next_u64() >> 11) * (1.0 / 9007199254740992.0);
}

std::pair<long long, long long> SampleStream::next_ratio(double lo, double hi) {
  long long q = 1 + static_cast<long long>(next_u64() % 24);  // denominator <= 24
  long long nlo = static_cast<long long>(std::ceil(lo * static_cast<double>(q)));
  long long nhi = static_cast<long long>(std::floor(hi * static_cast<double>(q)));
  if (nhi < nlo) nhi = nlo;
  long long span = nhi - nlo + 1;
  long long p = nlo + static_cast<long long>(next_u64() % static_cast<std::uint64_t>(span));
  return {p, q};
}

namespace {

using families::Params;

struct BuiltInstance {
  MetricInstance m;
};

std::map<std::string, std::pair<double, double>> default_box(const std::string& family) {
  std::map<std::string, std::pair<double, double>> box;
  auto set = [&](const char* n, double lo, double hi) { box[n] = {lo, hi}; };
  if (family == "st_vsi" || family == "st_solution") {
    set("v1", -1, 1);
    set("u1", 0.25, 2);
    set("T", -1, 1);
    set("X", 0.5, 3);
  } else if (family == "csi1" || family == "csi1_solved" || family == "kaigorodov") {
    set("v", -1, 1);
    set("u", 0.25, 2);
    set("T", -1, 1);
    set("X", 0.5, 3);
  } else if (family == "csi2" || family == "csi2_solved") {
    set("v", -1, 1);
    set("u", 0.25, 2);
    set("U", -1, 1);
    set("V", 0.5, 3);
  } else if (family == "kundt") {
    set("v", -1, 1);
    set("u", 0.25, 2);
    set("x2", 0.25, 2);
    set("x3", 0.25, 2);
  } else {
    // null-case charts: keep u2 positive so branch-B poles stay away
    set("v1", -1, 1);
    set("u1", 0.25, 2);
    set("v2", -1, 1);
    set("u2", 0.5, 2.5);
  }
  return box;
}

std::string role(const VerificationConfig& cfg, const std::string& r) {
  auto it = cfg.roles.find(r);
  if (it == cfg.roles.end())
    fail(ErrorKind::Config, "config.roles: family '" + cfg.family + "' needs role '" + r + "'");
  return it->second;
}

}  // namespace

MetricInstance build_instance(const VerificationConfig& cfg) {
  auto reg = std::make_shared<FunctionRegistry>();
  std::set<std::string> param_names;
  for (const auto& [k, v] : cfg.params) param_names.insert(k);
  for (const auto& f : cfg.functions) {
    ParseContext bcx;
    bcx.coords = f.args;
    bcx.params = param_names;
    bcx.registry = reg.get();
    reg->define(f.name, f.args, parse(f.body, bcx));
  }
  for (const auto& a : cfg.antiderivatives)
    reg->declare_antiderivative(a.function, a.wrt, a.antiderivative);

  auto chart_of = [&](const std::string& fam) -> std::vector<std::string> {
    if (fam == "kundt") return {"v", "u", "x2", "x3"};
    if (fam == "st_vsi" || fam == "st_solution") return {"v1", "u1", "T", "X"};
    if (fam == "csi1" || fam == "csi1_solved" || fam == "kaigorodov")
      return {"v", "u", "T", "X"};
    if (fam == "csi2" || fam == "csi2_solved") return {"v", "u", "U", "V"};
    return {"v1", "u1", "v2", "u2"};
  };
  ParseContext cx;
  cx.coords = chart_of(cfg.family);
  cx.params = param_names;
  cx.registry = reg.get();
  auto comp = [&](const std::string& name, const char* dflt = nullptr) -> Expr {
    auto it = cfg.components.find(name);
    if (it == cfg.components.end()) {
      if (dflt) return parse(dflt, cx);
      fail(ErrorKind::Config, "config.components: missing component '" + name + "'");
    }
    return parse(it->second, cx);
  };

  const std::string& fam = cfg.family;
  if (fam == "flat") return families::flat();
  if (fam == "kundt") {
    std::array<std::array<Expr, 2>, 2> gAB;
    gAB[0][0] = comp("g22", "1");
    gAB[0][1] = gAB[1][0] = comp("g23", "0");
    gAB[1][1] = comp("g33", "1");
    return families::kundt(comp("H", "0"), comp("W_x2", "0"), comp("W_x3", "0"), gAB, reg,
                           cfg.params);
  }
  if (fam == "walker") {
    std::array<std::array<Expr, 2>, 2> B;
    B[0][0] = comp("B11", "0");
    B[0][1] = B[1][0] = comp("B12", "0");
    B[1][1] = comp("B22", "0");
    return families::walker_plane(B, reg, cfg.params);
  }
  if (fam == "null_vsi") {
    families::NullVsiParams p;
    p.W1u2 = comp("W1_u2", "0");
    p.W0u2 = comp("W0_u2", "0");
    p.W0v2 = comp("W0_v2", "0");
    p.H1 = comp("H1", "0");
    p.H0 = comp("H0", "0");
    return families::null_vsi(p, reg, cfg.params);
  }
  if (fam == "st_vsi") {
    families::StVsiParams p;
    auto it = cfg.params.find("eps");
    p.eps = it == cfg.params.end() ? 1 : static_cast<int>(it->second.first);
    p.W0T = comp("W0_T", "0");
    p.W0X = comp("W0_X", "0");
    p.H1 = comp("H1", "0");
    p.H0 = comp("H0", "0");
    return families::st_vsi(p, reg, cfg.params);
  }
  if (fam == "special_vsi")
    return families::special_vsi(role(cfg, "F1"), role(cfg, "F2"), reg, cfg.params);
  if (fam == "branchA") {
    families::BranchAFns f;
    f.alpha = role(cfg, "alpha");
    f.beta = role(cfg, "beta");
    f.gamma = role(cfg, "gamma");
    f.F1 = role(cfg, "F1");
    f.F2 = role(cfg, "F2");
    return families::null_vsi_branchA(f, reg, cfg.params);
  }
  if (fam == "branchB") {
    families::BranchBFns f;
    f.alpha = role(cfg, "alpha");
    f.delta = role(cfg, "delta");
    f.gamma = role(cfg, "gamma");
    f.eta = role(cfg, "eta");
    f.F1 = role(cfg, "F1");
    f.F2 = role(cfg, "F2");
    f.G = role(cfg, "G");
    f.P = role(cfg, "P");
    f.K = role(cfg, "K");
    f.J3 = role(cfg, "J3");
    f.J8 = role(cfg, "J8");
    return families::null_vsi_branchB(f, reg, cfg.params);
  }
  if (fam == "st_solution")
    return families::st_vsi_solution(role(cfg, "alpha"), role(cfg, "beta"),
                                     role(cfg, "gamma"), comp("H0", "0"), reg, cfg.params);
  if (fam == "csi1") {
    families::Csi1Params p;
    p.H1 = comp("H1", "0");
    p.H0 = comp("H0", "0");
    p.WX0 = comp("WX0", "0");
    p.WT0 = comp("WT0", "0");
    return families::csi1(p, reg, cfg.params);
  }
  if (fam == "csi1_solved") return families::csi1_solved(cfg.params);
  if (fam == "kaigorodov") return families::csi1_kaigorodov(cfg.params);
  if (fam == "csi2") {
    families::Csi2Params p;
    p.H1 = comp("H1", "0");
    p.H0 = comp("H0", "0");
    p.WU0 = comp("WU0", "0");
    p.WV0 = comp("WV0", "0");
    return families::csi2(p, reg, cfg.params);
  }
  if (fam == "csi2_solved") return families::csi2_solved(cfg.params);
  fail(ErrorKind::Config, "config.family: unknown family '" + cfg.family + "'");
}

namespace {

template <class T>
std::vector<std::array<T, 4>> draw_points(const VerificationConfig& cfg,
                                          const MetricInstance& m,
                                          std::vector<std::array<double, 4>>* display) {
  auto box = default_box(cfg.family);
  for (const auto& [k, v] : cfg.sample.box) box[k] = v;
  SampleStream rng(cfg.sample.seed);
  std::vector<std::array<T, 4>> pts;
  for (int i = 0; i < cfg.sample.count; ++i) {
    std::array<T, 4> p{};
    std::array<double, 4> pd{};
    for (int c = 0; c < 4; ++c) {
      const std::string& nm = m.chart.names[static_cast<std::size_t>(c)];
      auto it = box.find(nm);
      double lo = it == box.end() ? -1.0 : it->second.first;
      double hi = it == box.end() ? 1.0 : it->second.second;
      auto [pn, q] = rng.next_ratio(lo, hi);
      p[c] = scalar_traits<T>::from_ratio(pn, q);
      pd[c] = static_cast<double>(pn) / static_cast<double>(q);
    }
    pts.push_back(p);
    if (display) display->push_back(pd);
  }
  return pts;
}

double tol_for(const VerificationConfig& cfg, const std::string& check) {
  auto it = cfg.check_tolerances.find(check);
  return it == cfg.check_tolerances.end() ? cfg.tolerance : it->second;
}

template <class T>
void run_checks(const VerificationConfig& cfg, const MetricInstance& m,
                VerificationReport& rep) {
  std::vector<std::array<double, 4>> display;
  auto pts = draw_points<T>(cfg, m, &display);
  rep.sample_points = display;
  const int order = cfg.order;

  auto residual_system = [&](const std::string& id) {
    CheckResult cr;
    cr.id = id;
    double tol = tol_for(cfg, id);
    double mx = 0;
    std::map<std::string, double> per_eq;
    for (const auto& p : pts) {
      auto vals = residuals::evaluate<T>(id, m, p, 0);
      for (const auto& ev : vals) {
        double a = std::fabs(scalar_traits<T>::to_double(ev.value));
        mx = std::max(mx, a);
        auto [it, fresh] = per_eq.emplace(ev.name, a);
        if (!fresh) it->second = std::max(it->second, a);
      }
    }
    cr.max_residual = mx;
    cr.pass = mx < tol;
    for (const auto& [k, v] : per_eq) cr.details.emplace_back(k, v);
    rep.checks.push_back(std::move(cr));
  };

  for (const auto& check : cfg.checks) {
    double tol = tol_for(cfg, check);
    if (check == "vacuum") {
      CheckResult cr;
      cr.id = check;
      double mx = 0;
      for (const auto& p : pts)
        mx = std::max(mx, scalar_traits<T>::to_double(max_ricci(curvature_at(m, p, 2))));
      cr.max_residual = mx;
      cr.pass = mx < tol;
      rep.checks.push_back(std::move(cr));
    } else if (check == "einstein") {
      CheckResult cr;
      cr.id = check;
      double mx = 0;
      double lambda = 0;
      bool first = true;
      for (const auto& p : pts) {
        auto B = curvature_at(m, p, 2);
        if (first) {
          lambda = scalar_traits<T>::to_double(B.ricci_scalar.value()) / 4.0;
          first = false;
        }
        mx = std::max(mx, scalar_traits<T>::to_double(einstein_residual(B)));
      }
      cr.max_residual = mx;
      cr.pass = mx < tol;
      cr.details.emplace_back("lambda", lambda);
      rep.checks.push_back(std::move(cr));
    } else if (check == "vsi-battery") {
      CheckResult cr;
      cr.id = check;
      double mx = 0;
      for (const auto& p : pts) {
        auto bat = compute_battery(curvature_at(m, p, order));
        for (int i = 0; i < bat.count(); ++i)
          mx = std::max(mx, std::fabs(scalar_traits<T>::to_double(bat.v[static_cast<std::size_t>(i)])));
        if (!bat.has_diff) cr.note = "order < 3: D1-D3 unavailable";
      }
      cr.max_residual = mx;
      cr.pass = mx < tol;
      rep.checks.push_back(std::move(cr));
    } else if (check == "csi") {
      CheckResult cr;
      cr.id = check;
      std::array<double, 9> mn{}, mxv{}, mean{};
      bool first = true;
      int nb = 9;
      for (const auto& p : pts) {
        auto bat = compute_battery(curvature_at(m, p, order));
        nb = bat.count();
        for (int i = 0; i < nb; ++i) {
          double v = scalar_traits<T>::to_double(bat.v[static_cast<std::size_t>(i)]);
          if (first) {
            mn[static_cast<std::size_t>(i)] = mxv[static_cast<std::size_t>(i)] = v;
          } else {
            mn[static_cast<std::size_t>(i)] = std::min(mn[static_cast<std::size_t>(i)], v);
            mxv[static_cast<std::size_t>(i)] = std::max(mxv[static_cast<std::size_t>(i)], v);
          }
          mean[static_cast<std::size_t>(i)] += v;
        }
        first = false;
      }
      double worst = 0;
      bool pass = true;
      for (int i = 0; i < nb; ++i) {
        double mu = mean[static_cast<std::size_t>(i)] / static_cast<double>(pts.size());
        double spread = mxv[static_cast<std::size_t>(i)] - mn[static_cast<std::size_t>(i)];
        double rel = spread / (1.0 + std::fabs(mu));
        worst = std::max(worst, rel);
        if (rel >= tol) pass = false;
        cr.details.emplace_back(battery_names()[static_cast<std::size_t>(i)] + "_mean", mu);
      }
      cr.max_residual = worst;
      cr.pass = pass;
      rep.checks.push_back(std::move(cr));
    } else if (check == "kundt") {
      CheckResult cr;
      cr.id = check;
      std::array<Expr, 4> ell{ex::num(0), ex::num(1), ex::num(0), ex::num(0)};  // du1
      double mx = 0;
      for (const auto& p : pts) {
        auto kk = kundt_kinematics<T>(m, ell, p, 2);
        for (double r : {scalar_traits<T>::to_double(kk.geodesic),
                         scalar_traits<T>::to_double(kk.expansion),
                         scalar_traits<T>::to_double(kk.shear),
                         scalar_traits<T>::to_double(kk.twist)})
          mx = std::max(mx, std::fabs(r));
      }
      cr.max_residual = mx;
      cr.pass = mx < tol;
      rep.checks.push_back(std::move(cr));
    } else if (check == "walker") {
      CheckResult cr;
      cr.id = check;
      if (m.chart.names != std::vector<std::string>{"v1", "u1", "v2", "u2"})
        fail(ErrorKind::Family, "walker check expects the (v1,u1,v2,u2) chart");
      std::array<Expr, 4> l1{ex::num(0), ex::num(1), ex::num(0), ex::num(0)};  // du1
      std::array<Expr, 4> l2{ex::num(0), ex::num(0), ex::num(0), ex::num(1)};  // du2
      double mx = 0;
      for (const auto& p : pts) {
        auto wr = walker_recurrence<T>(m, l1, l2, p, 2);
        mx = std::max(mx, scalar_traits<T>::to_double(wr.residual));
      }
      cr.max_residual = mx;
      cr.pass = mx < tol;
      rep.checks.push_back(std::move(cr));
    } else if (check == "nilpotency") {
      CheckResult cr;
      cr.id = check;
      double mx = 0;
      for (const auto& p : pts) {
        auto B = curvature_at(m, p, 2);
        auto nv = nilpotency_data(boost_weight_matrices(m, B));
        for (double r : {scalar_traits<T>::to_double(nv.trace_a),
                         scalar_traits<T>::to_double(nv.det_a),
                         scalar_traits<T>::to_double(nv.trace_s),
                         scalar_traits<T>::to_double(nv.det_s),
                         scalar_traits<T>::to_double(nv.rt),
                         scalar_traits<T>::to_double(nv.sigma),
                         scalar_traits<T>::to_double(nv.max_vecN)})
          mx = std::max(mx, std::fabs(r));
      }
      cr.max_residual = mx;
      cr.pass = mx < tol;
      rep.checks.push_back(std::move(cr));
    } else if (check == "vsi-preconditions") {
      CheckResult cr;
      cr.id = check;
      // W_{A,vv} = 0 (jets in the v direction) and sigma = R_{0101} = 0
      double mx = 0;
      auto params = param_values<T>(m);
      EvalContext<T> cx{m.registry.get(), &params, 2};
      std::vector<Expr> wslots;
      if (m.family == "null_vsi" || m.family == "flat" || m.family == "walker") {
        wslots = {m.slot("W_u2"), m.slot("W_v2")};
      } else if (m.family == "st_vsi") {
        wslots = {m.slot("W_T"), m.slot("W_X")};
      } else if (m.family == "kundt") {
        wslots = {m.slot("W_x2"), m.slot("W_x3")};
      } else {
        fail(ErrorKind::Family, "vsi-preconditions needs a Kundt-form family");
      }
      for (const auto& p : pts) {
        for (const auto& w : wslots) {
          auto wj = eval_jet(w, m.chart.names, p, cx);
          double wvv = scalar_traits<T>::to_double(partial(partial(wj, 0), 0).value());
          mx = std::max(mx, std::fabs(wvv));
        }
        auto B = curvature_at(m, p, 2);
        mx = std::max(mx, std::fabs(scalar_traits<T>::to_double(sigma_component(m, B))));
      }
      cr.max_residual = mx;
      cr.pass = mx < tol;
      rep.checks.push_back(std::move(cr));
    } else if (check == "antiderivatives") {
      CheckResult cr;
      cr.id = check;
      double mx = 0;
      int checked = 0;
      auto params = param_values<T>(m);
      for (const auto& [key, F] : m.registry->antiderivatives()) {
        const auto& [gname, var] = key;
        const auto& gdef = m.registry->get(gname);
        const auto& Fdef = m.registry->get(F);
        auto it = std::find(Fdef.args.begin(), Fdef.args.end(), var);
        if (it == Fdef.args.end())
          fail(ErrorKind::Config, "antiderivative '" + F + "' lacks argument '" + var + "'");
        std::vector<int> counts(Fdef.args.size(), 0);
        counts[static_cast<std::size_t>(it - Fdef.args.begin())] = 1;
        EvalContext<T> cx{m.registry.get(), &params, 2};
        SampleStream rng(cfg.sample.seed ^ 0xabcdefull);
        for (int k = 0; k < 4; ++k) {
          // probe in the function argument space, padded into 4 slots
          std::array<T, 4> probe{};
          std::vector<std::string> chart(4);
          for (std::size_t a = 0; a < 4; ++a) {
            chart[a] = a < Fdef.args.size() ? Fdef.args[a] : "_pad" + std::to_string(a);
            auto [pn, q] = rng.next_ratio(0.5, 2.0);
            probe[a] = scalar_traits<T>::from_ratio(pn, q);
          }
          std::vector<Expr> args;
          for (const auto& a : Fdef.args) args.push_back(ex::coord(a));
          Expr dF = ex::slot_deriv(F, counts, args);
          std::vector<Expr> gargs;
          for (const auto& a : gdef.args) gargs.push_back(ex::coord(a));
          Expr gap = ex::apply(gname, gargs);
          auto dj = eval_jet(dF, chart, probe, cx);
          auto gj = eval_jet(gap, chart, probe, cx);
          for (int r = 0; r < dj.size(); ++r)
            mx = std::max(mx, std::fabs(scalar_traits<T>::to_double(dj[r] - gj[r])));
          ++checked;
        }
      }
      cr.max_residual = mx;
      cr.pass = mx < tol;
      cr.note = "entries checked: " + std::to_string(checked / 4);
      rep.checks.push_back(std::move(cr));
    } else if (check == "cross-check") {
      CheckResult cr;
      cr.id = check;
      bool ok = true;
      double worst = 0;
      for (const auto& p : pts) {
        auto cc = residuals::cross_check_vacuum<T>(m, p, tol);
        if (!cc.consistent) ok = false;
        worst = std::max(worst,
                         std::fabs(scalar_traits<T>::to_double(cc.system_max) -
                                   scalar_traits<T>::to_double(cc.ricci_max)));
      }
      cr.max_residual = worst;
      cr.pass = ok;
      rep.checks.push_back(std::move(cr));
    } else {
      bool is_system = false;
      for (const auto& s : residuals::systems())
        if (s.id == check) is_system = true;
      if (is_system) {
        residual_system(check);
      } else {
        fail(ErrorKind::Config, "unknown check '" + check + "'");
      }
    }
  }

  // configured transforms
  for (std::size_t ti = 0; ti < cfg.transforms.size(); ++ti) {
    const auto& td = cfg.transforms[ti];
    transforms::TransformSpec spec;
    spec.kind = transforms::kind_from_name(td.kind);
    ParseContext cx;
    cx.coords = m.chart.names;
    std::set<std::string> pn;
    for (const auto& [k, v] : cfg.params) pn.insert(k);
    cx.params = pn;
    cx.registry = m.registry.get();
    if (!td.h.empty()) spec.h = parse(td.h, cx);
    if (!td.g.empty()) spec.g = parse(td.g, cx);
    if (!td.g_inverse.empty()) spec.g_inverse = parse(td.g_inverse, cx);
    CheckResult cr;
    cr.id = "transform:" + td.kind + "[" + std::to_string(ti) + "]";
    double tol = tol_for(cfg, "transform");
    MetricInstance mp = transforms::transform_params(m, spec);
    double mx = 0;
    for (const auto& p : pts)
      mx = std::max(mx, scalar_traits<T>::to_double(
                            transforms::verify_form_preservation<T>(m, mp, spec, p)));
    // invariant battery at corresponding points
    auto params = param_values<T>(m);
    EvalContext<T> cx1{m.registry.get(), &params, 0};
    auto F = transforms::coordinate_map(m, spec);
    double bmax = 0;
    for (const auto& p : pts) {
      std::array<T, 4> image{};
      for (int i = 0; i < 4; ++i) image[i] = eval_jet(F[i], m.chart.names, p, cx1).value();
      auto b1 = compute_battery(curvature_at(m, p, cfg.order));
      auto b2 = compute_battery(curvature_at(mp, image, cfg.order));
      for (int i = 0; i < std::min(b1.count(), b2.count()); ++i)
        bmax = std::max(bmax, std::fabs(scalar_traits<T>::to_double(
                                  b1.v[static_cast<std::size_t>(i)] -
                                  b2.v[static_cast<std::size_t>(i)])));
    }
    cr.max_residual = std::max(mx, bmax);
    cr.details.emplace_back("pullback", mx);
    cr.details.emplace_back("battery_delta", bmax);
    cr.pass = cr.max_residual < tol;
    rep.checks.push_back(std::move(cr));
  }
}

}  // namespace

VerificationReport run(const VerificationConfig& cfg) {
  VerificationReport rep;
  rep.family = cfg.family;
  rep.mode = cfg.mode;
  rep.order = cfg.order;
  rep.seed = cfg.sample.seed;
  rep.points = cfg.sample.count;
  rep.tolerance = cfg.tolerance;
  MetricInstance m = build_instance(cfg);
  if (cfg.mode == Mode::Float)
    run_checks<double>(cfg, m, rep);
  else
    run_checks<Rational>(cfg, m, rep);
  if (!cfg.report_path.empty()) {
    std::ofstream f(cfg.report_path, std::ios::binary);
    if (!f) fail(ErrorKind::Config, "cannot write report to '" + cfg.report_path + "'");
    f << rep.to_json();
  }
  return rep;
}

std::string list_families_json() {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& f : families::catalog()) {
    nlohmann::ordered_json j;
    j["id"] = f.id;
    j["chart"] = f.chart;
    j["summary"] = f.summary;
    j["components"] = f.slots;
    j["presets"] = f.presets;
    out.push_back(j);
  }
  return out.dump(2) + "\n";
}

std::string explain(const std::string& id) {
  static const std::map<std::string, std::string> docs = {
      {"vacuum", "max |R_ab| over the sample points; passes when below tolerance."},
      {"einstein",
       "fits Lambda = R/4 at the first sample point and checks max |R_ab - Lambda g_ab| "
       "at every point."},
      {"vsi-battery",
       "computes I1=R, I2=R_ab R^ab, I3=R_abcd R^abcd, I4=C_abcd C^abcd, I5=R_a^b R_b^c "
       "R_c^a, I6=R_ab^cd R_cd^ef R_ef^ab, D1=R_;a R^;a, D2=R_ab;c R^ab;c, D3=R_abcd;e "
       "R^abcd;e and requires all of them to vanish. The nine invariants are a finite "
       "proxy for the full polynomial battery, not a proof."},
      {"csi",
       "computes the nine-invariant battery at every sample point and passes when each "
       "invariant's spread (max-min) is below tol*(1+|mean|)."},
      {"kundt",
       "checks that l = du1 is geodesic, expansion-free, shear-free and twist-free: the "
       "four contractions l^mu l_{nu;mu}, l^mu_{;mu}, l^{(nu;mu)}l_{(nu;mu)}, "
       "l^{[nu;mu]}l_{[nu;mu]} must vanish."},
      {"walker",
       "checks the recurrence [l1_[a l2_b]]_{;c} = [l1_[a l2_b]] k_c for l1=du1, l2=du2: "
       "the bivector of the null 2-plane must be recurrent; k is extracted by least "
       "squares and the residual reported."},
      {"nilpotency",
       "builds the boost-weight matrices a_AB = R_{01AB} and s_AB = 2R_{0(A|1|B)} in the "
       "instance frame and requires trace and determinant to vanish (2x2 nilpotency), "
       "plus R_{0101} = sigma = 0, R_{010A} = 0 and the vanishing of the transverse "
       "component R_{2323}."},
      {"vsi-preconditions",
       "checks W_{A,vv} = 0 (so R_{010A} = -(1/2) W_{A,vv} = 0) and sigma = R_{0101} = 0 "
       "on a Kundt-form instance."},
      {"antiderivatives",
       "verifies every declared antiderivative entry: d(F)/d(var) must equal the "
       "declared integrand as a jet at probe points."},
      {"cross-check",
       "evaluates the family's transcribed vacuum PDE system and the directly computed "
       "Ricci tensor at each point and requires them to vanish together or fail "
       "together."},
      {"null-vacuum", "residuals of the four null-case vacuum equations (R_u1u1, R_u1v2, "
                      "R_u1u2, R_u2u2 in family variables)."},
      {"st-vacuum", "residuals of the four spacelike/timelike vacuum equations."},
      {"csi1-einstein", "residuals of the CSI example 1 Einstein system (Lambda=-3K^2)."},
      {"csi2-einstein", "residuals of the CSI example 2 Einstein system (Lambda=6B)."},
      {"csi1-H0", "the v-independent part of the csi1 'big' equation: the H0 equation."},
      {"csi2-H0", "the v-independent part of the csi2 'big' equation: the H0 equation."},
      {"constraints", "the printed constraint 2 C3 K (1 - exp(-2KX)): zero iff C3 = 0."},
      {"null-shift", "v1 -> v1 + h(u1,u2,v2) with the printed component laws."},
      {"null-rescale", "u1 -> g(u1), v1 -> v1/g'(u1); needs g and its exact inverse."},
      {"st-shift", "v1 -> v1 + h(u1,T,X) with the printed component laws."},
      {"st-rescale", "u1 -> g(u1), v1 -> v1/g'(u1) in the spacelike/timelike chart."},
      {"csi2-shift", "v -> v + h(u,U,V) with the W_V redefinition."},
  };
  auto it = docs.find(id);
  if (it != docs.end()) return it->second;
  for (const auto& f : families::catalog())
    if (f.id == id) return f.summary;
  fail(ErrorKind::Config, "unknown id '" + id + "'");
}

}  // namespace nsvsi
