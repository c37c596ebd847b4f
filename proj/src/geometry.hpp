#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "eval.hpp"
#include "expr.hpp"
#include "registry.hpp"

namespace nsvsi {

struct Chart {
  std::vector<std::string> names;  // exactly four, distinct
  std::string signature = "neutral";

  int index_of(const std::string& n) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == n) return static_cast<int>(i);
    fail(ErrorKind::Config, "chart has no coordinate '" + n + "'");
  }
};

// covector fields l1, n1, l2, n2 (rows), each with four Expr components
struct NullFrame {
  std::array<std::array<Expr, 4>, 4> cov;
};

struct MetricInstance {
  Chart chart;
  std::array<std::array<Expr, 4>, 4> g;  // symmetric by construction
  std::optional<NullFrame> frame;
  std::string family;
  std::map<std::string, Expr> slots;  // named component functions (H, W_u2, ...)
  std::map<std::string, std::pair<long long, long long>> params;  // exact bindings
  std::shared_ptr<FunctionRegistry> registry;

  const Expr& slot(const std::string& name) const {
    auto it = slots.find(name);
    if (it == slots.end())
      fail(ErrorKind::Family, "family '" + family + "' has no component '" + name + "'");
    return it->second;
  }
};

template <class T>
std::map<std::string, T> param_values(const MetricInstance& m) {
  std::map<std::string, T> out;
  for (const auto& [k, v] : m.params) out[k] = scalar_traits<T>::from_ratio(v.first, v.second);
  return out;
}

}  // namespace nsvsi
