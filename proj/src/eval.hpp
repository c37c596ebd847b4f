#pragma once

// Jet evaluation of expression trees: the bridge between the DSL and the
// differentiation engine. Pure; safe to call concurrently.

#include <array>
#include <map>

#include "expr.hpp"
#include "jets.hpp"
#include "registry.hpp"

namespace nsvsi {

template <class T>
struct EvalContext {
  const FunctionRegistry* registry = nullptr;
  const std::map<std::string, T>* params = nullptr;  // named parameter values
  int order = 0;
};

namespace detail {

template <class T>
struct Scope {
  const Scope* parent = nullptr;
  const std::vector<std::string>* names = nullptr;
  const std::vector<Jet<T>>* jets = nullptr;

  const Jet<T>* find(const std::string& n) const {
    for (const Scope* s = this; s; s = s->parent) {
      if (!s->names) continue;
      for (std::size_t i = 0; i < s->names->size(); ++i)
        if ((*s->names)[i] == n) return &(*s->jets)[i];
    }
    return nullptr;
  }
};

template <class T>
Jet<T> eval_node(const Expr& e, const EvalContext<T>& cx, const Scope<T>& scope) {
  switch (e->kind) {
    case NodeKind::Constant:
      return Jet<T>::constant(cx.order, scalar_traits<T>::from_ratio(e->num, e->den));
    case NodeKind::Coord: {
      const Jet<T>* j = scope.find(e->name);
      if (!j) fail(ErrorKind::UnknownSymbol, "unbound coordinate '" + e->name + "'");
      return *j;
    }
    case NodeKind::Param: {
      if (cx.params) {
        auto it = cx.params->find(e->name);
        if (it != cx.params->end()) return Jet<T>::constant(cx.order, it->second);
      }
      fail(ErrorKind::UnknownSymbol, "unbound parameter '" + e->name + "'");
    }
    case NodeKind::Sum: {
      Jet<T> r = eval_node(e->kids[0], cx, scope);
      for (std::size_t i = 1; i < e->kids.size(); ++i) r = r + eval_node(e->kids[i], cx, scope);
      return r;
    }
    case NodeKind::Product: {
      Jet<T> r = eval_node(e->kids[0], cx, scope);
      for (std::size_t i = 1; i < e->kids.size(); ++i) r = r * eval_node(e->kids[i], cx, scope);
      return r;
    }
    case NodeKind::Quotient:
      return eval_node(e->kids[0], cx, scope) / eval_node(e->kids[1], cx, scope);
    case NodeKind::Power:
      return jet_pow(eval_node(e->kids[0], cx, scope), e->num, e->den);
    case NodeKind::Exp:
      return jet_exp(eval_node(e->kids[0], cx, scope));
    case NodeKind::Ln:
      return jet_ln(eval_node(e->kids[0], cx, scope));
    case NodeKind::Neg:
      return -eval_node(e->kids[0], cx, scope);
    case NodeKind::Apply:
    case NodeKind::SlotDeriv: {
      if (!cx.registry) fail(ErrorKind::UnknownSymbol, "no registry for '" + e->name + "'");
      const FunctionDef& def = cx.registry->get(e->name);
      if (def.args.size() != e->kids.size())
        fail(ErrorKind::Arity, "arity mismatch applying '" + e->name + "'");
      std::vector<Jet<T>> argjets;
      argjets.reserve(e->kids.size());
      for (const auto& a : e->kids) argjets.push_back(eval_node(a, cx, scope));
      Expr body = e->kind == NodeKind::Apply
                      ? def.body
                      : cx.registry->slot_deriv_body(e->name, e->dcounts);
      Scope<T> inner{nullptr, &def.args, &argjets};
      return eval_node(body, cx, inner);
    }
  }
  fail(ErrorKind::Internal, "eval: unhandled node kind");
}

}  // namespace detail

// evaluate at a chart point; point[i] pairs with chart[i]; seeds d(chart[i])
template <class T>
Jet<T> eval_jet(const Expr& e, const std::vector<std::string>& chart,
                const std::array<T, 4>& point, const EvalContext<T>& cx) {
  std::vector<Jet<T>> seeds;
  seeds.reserve(4);
  for (int i = 0; i < 4; ++i) seeds.push_back(Jet<T>::variable(cx.order, i, point[i]));
  detail::Scope<T> scope{nullptr, &chart, &seeds};
  return detail::eval_node(e, cx, scope);
}

// plain (order-0) evaluation convenience
template <class T>
T eval_value(const Expr& e, const std::vector<std::string>& chart,
             const std::array<T, 4>& point, const FunctionRegistry* reg,
             const std::map<std::string, T>* params) {
  EvalContext<T> cx{reg, params, 0};
  return eval_jet(e, chart, point, cx).value();
}

}  // namespace nsvsi
