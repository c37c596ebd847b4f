#include "transforms.hpp"

#include "eval.hpp"

namespace nsvsi {
namespace transforms {

using namespace ex;

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::NullShift: return "null-shift";
    case Kind::NullRescale: return "null-rescale";
    case Kind::StShift: return "st-shift";
    case Kind::StRescale: return "st-rescale";
    case Kind::Csi2Shift: return "csi2-shift";
  }
  return "?";
}

Kind kind_from_name(const std::string& s) {
  if (s == "null-shift") return Kind::NullShift;
  if (s == "null-rescale") return Kind::NullRescale;
  if (s == "st-shift") return Kind::StShift;
  if (s == "st-rescale") return Kind::StRescale;
  if (s == "csi2-shift") return Kind::Csi2Shift;
  fail(ErrorKind::Config, "unknown transform kind '" + s + "'");
}

namespace {

void check_compat(const MetricInstance& m, Kind k) {
  const std::string& f = m.family;
  bool ok = false;
  switch (k) {
    case Kind::NullShift:
    case Kind::NullRescale:
      ok = f == "null_vsi";
      break;
    case Kind::StShift:
    case Kind::StRescale:
      ok = f == "st_vsi";
      break;
    case Kind::Csi2Shift:
      ok = f == "csi2";
      break;
  }
  if (!ok)
    fail(ErrorKind::Family,
         std::string("transform ") + kind_name(k) + " is incompatible with family " + f);
}

// substitute u1 -> g_inverse(u1) everywhere (for rescale laws)
Expr comp(const Expr& e, const std::string& u1name, const Expr& ginv) {
  return substitute(e, u1name, ginv);
}

void verify_inverse(const MetricInstance& m, const TransformSpec& t) {
  if (!t.g || !t.g_inverse) fail(ErrorKind::Config, "rescale transform needs g and g_inverse");
  // g(g_inverse(x)) == x at probes
  const std::string u1 = m.chart.names[1];
  Expr compo = substitute(t.g, u1, t.g_inverse);
  auto params = param_values<double>(m);
  EvalContext<double> cx{m.registry.get(), &params, 0};
  for (double x : {0.4, 0.9, 1.7}) {
    std::array<double, 4> pt{0.0, 0.0, 0.0, 0.0};
    pt[1] = x;
    double y = eval_jet(compo, m.chart.names, pt, cx).value();
    if (std::fabs(y - x) > 1e-9 * (1.0 + std::fabs(x)))
      fail(ErrorKind::Config, "g_inverse does not invert g (residual " +
                                  std::to_string(y - x) + " at u1=" + std::to_string(x) + ")");
  }
}

}  // namespace

MetricInstance transform_params(const MetricInstance& m, const TransformSpec& t) {
  check_compat(m, t.kind);
  auto reg = m.registry;
  auto params = m.params;
  switch (t.kind) {
    case Kind::NullShift: {
      if (!t.h) fail(ErrorKind::Config, "null-shift needs a generator h(u1,u2,v2)");
      if (uses_symbol(t.h, "v1")) fail(ErrorKind::Config, "h must not depend on v1");
      Expr h = t.h;
      Expr h_u1 = derive(h, "u1"), h_u2 = derive(h, "u2"), h_v2 = derive(h, "v2");
      families::NullVsiParams p;
      p.W1u2 = m.slot("W1_u2");
      p.H1 = m.slot("H1");
      p.H0 = ex::add({m.slot("H0"), neg(mul({h, m.slot("H1")})), neg(h_u1)});
      p.W0u2 = ex::add({m.slot("W0_u2"), neg(mul({h, m.slot("W1_u2")})), neg(h_u2)});
      p.W0v2 = ex::sub(m.slot("W0_v2"), h_v2);
      return families::null_vsi(p, reg, params);
    }
    case Kind::NullRescale: {
      verify_inverse(m, t);
      Expr gp = derive(t.g, "u1");
      Expr gpp = derive(gp, "u1");
      Expr gp2 = mul({gp, gp});
      families::NullVsiParams p;
      p.H1 = quot(ex::add({mul({gp, m.slot("H1")}), gpp}), gp2);
      p.H0 = quot(m.slot("H0"), gp2);
      p.W1u2 = m.slot("W1_u2");
      p.W0u2 = quot(m.slot("W0_u2"), gp);
      p.W0v2 = quot(m.slot("W0_v2"), gp);
      for (Expr* e : {&p.H1, &p.H0, &p.W1u2, &p.W0u2, &p.W0v2})
        *e = comp(*e, "u1", t.g_inverse);
      return families::null_vsi(p, reg, params);
    }
    case Kind::StShift: {
      if (!t.h) fail(ErrorKind::Config, "st-shift needs a generator h(u1,T,X)");
      if (uses_symbol(t.h, "v1")) fail(ErrorKind::Config, "h must not depend on v1");
      Expr h = t.h;
      Expr h_u1 = derive(h, "u1"), h_T = derive(h, "T"), h_X = derive(h, "X");
      Expr W1 = m.slot("W1");
      // H1' = H1 - h W1^2/4; H0' = H0 - h H1 - h_u1 + (h W1)^2/8
      Expr H1p = ex::sub(m.slot("H1"), mul({h, pow(W1, 2), ratio(1, 4)}));
      Expr H0p = ex::add({m.slot("H0"), neg(mul({h, m.slot("H1")})), neg(h_u1),
                          mul({ratio(1, 8), pow(mul({h, W1}), 2)})});
      Expr WXp = ex::add({m.slot("W0_X"), neg(mul({h, W1})), neg(h_X)});
      Expr WTp = ex::sub(m.slot("W0_T"), h_T);
      return families::st_assemble(W1, WTp, WXp, H1p, H0p, reg, params);
    }
    case Kind::StRescale: {
      verify_inverse(m, t);
      Expr gp = derive(t.g, "u1");
      Expr gpp = derive(gp, "u1");
      Expr gp2 = mul({gp, gp});
      // H1' = (g' H1 + g'')/g'^2 ; W'(1) = W1/g'
      Expr H1p = quot(ex::add({mul({gp, m.slot("H1")}), gpp}), gp2);
      Expr H0p = quot(m.slot("H0"), gp2);
      Expr WXp = quot(m.slot("W0_X"), gp);
      Expr WTp = quot(m.slot("W0_T"), gp);
      Expr W1p = m.slot("W1");
      for (Expr* e : {&H1p, &H0p, &WXp, &WTp, &W1p}) *e = comp(*e, "u1", t.g_inverse);
      return families::st_assemble(W1p, WTp, WXp, H1p, H0p, reg, params);
    }
    case Kind::Csi2Shift: {
      if (!t.h) fail(ErrorKind::Config, "csi2-shift needs a generator h(u,U,V)");
      if (uses_symbol(t.h, "v")) fail(ErrorKind::Config, "h must not depend on v");
      Expr h = t.h;
      Expr h_u = derive(h, "u"), h_U = derive(h, "U"), h_V = derive(h, "V");
      Expr B = param("B");
      Expr V = coord("V");
      families::Csi2Params p;
      p.H1 = m.slot("H1");
      p.H0 = ex::add({m.slot("H0"), neg(mul({h, m.slot("H1")})), neg(h_u)});
      p.WU0 = ex::add({m.slot("WU0"), neg(h_U), mul({B, pow(V, 2), h_V}),
                       neg(mul({num(2), B, V, h}))});
      // Wbar_V = W_V - h_V + 2h/V
      p.WV0 = ex::add({m.slot("WV0"), neg(h_V), mul({num(2), quot(h, V)})});
      return families::csi2(p, reg, params);
    }
  }
  fail(ErrorKind::Internal, "unhandled transform kind");
}

std::array<Expr, 4> coordinate_map(const MetricInstance& m, const TransformSpec& t) {
  const auto& n = m.chart.names;
  Expr c0 = coord(n[0]), c1 = coord(n[1]), c2 = coord(n[2]), c3 = coord(n[3]);
  switch (t.kind) {
    case Kind::NullShift:
    case Kind::StShift:
    case Kind::Csi2Shift:
      return {ex::add({c0, t.h}), c1, c2, c3};
    case Kind::NullRescale:
    case Kind::StRescale: {
      Expr gp = derive(t.g, n[1]);
      return {quot(c0, gp), t.g, c2, c3};
    }
  }
  fail(ErrorKind::Internal, "unhandled transform kind");
}

GaugeFixResult gauge_fix(const MetricInstance& m, const std::string& target,
                         std::optional<Expr> h) {
  if (target == "epsilon")
    fail(ErrorKind::Family,
         "the epsilon(u1) gauge is applied inside the branch-B constructor; "
         "it is not reachable as a shift");
  Kind kind;
  std::string shift_coord;
  if (target == "W0_v2" && m.family == "null_vsi") {
    kind = Kind::NullShift;
    shift_coord = "v2";
  } else if (target == "W0_T" && m.family == "st_vsi") {
    kind = Kind::StShift;
    shift_coord = "T";
  } else if (target == "WV0" && m.family == "csi2") {
    kind = Kind::Csi2Shift;
    shift_coord = "V";
  } else {
    fail(ErrorKind::Family,
         "gauge target '" + target + "' is not reachable for family '" + m.family + "'");
  }
  const Expr& slot = m.slot(target);
  if (!h) {
    // plain-shift targets admit a registry antiderivative when the slot is a
    // single function application on coordinates
    if (kind != Kind::Csi2Shift && slot->kind == NodeKind::Apply && m.registry) {
      auto F = m.registry->antiderivative_of(slot->name, shift_coord);
      if (F) h = apply(*F, slot->kids);
    }
    if (!h)
      fail(ErrorKind::Family, "gauge_fix: no generator supplied and no registered "
                              "antiderivative for the target");
  }
  TransformSpec t;
  t.kind = kind;
  t.h = *h;
  MetricInstance primed = transform_params(m, t);
  // the primed target must vanish; verify at probes, then zero the slot
  auto params = param_values<double>(primed);
  EvalContext<double> cx{primed.registry.get(), &params, 0};
  const Expr& ptgt = primed.slot(target);
  for (const auto& pt : std::initializer_list<std::array<double, 4>>{
           {0.3, 0.7, 0.9, 1.4}, {-0.2, 1.1, 1.6, 0.8}, {0.5, 0.6, -0.7, 2.2}}) {
    double r = eval_jet(ptgt, primed.chart.names, pt, cx).value();
    if (std::fabs(r) > 1e-9)
      fail(ErrorKind::Family,
           "gauge_fix: supplied generator does not zero the target (residual " +
               std::to_string(r) + ")");
  }
  // rebuild with the exact zero slot
  MetricInstance fixed;
  if (m.family == "null_vsi") {
    families::NullVsiParams p;
    p.W1u2 = primed.slot("W1_u2");
    p.W0u2 = primed.slot("W0_u2");
    p.W0v2 = num(0);
    p.H1 = primed.slot("H1");
    p.H0 = primed.slot("H0");
    fixed = families::null_vsi(p, primed.registry, primed.params);
  } else if (m.family == "st_vsi") {
    fixed = families::st_assemble(primed.slot("W1"), num(0), primed.slot("W0_X"),
                                  primed.slot("H1"), primed.slot("H0"), primed.registry,
                                  primed.params);
  } else {
    families::Csi2Params p;
    p.H1 = primed.slot("H1");
    p.H0 = primed.slot("H0");
    p.WU0 = primed.slot("WU0");
    p.WV0 = num(0);
    fixed = families::csi2(p, primed.registry, primed.params);
  }
  return {std::move(fixed), std::move(t)};
}

}  // namespace transforms
}  // namespace nsvsi
