#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "expr.hpp"

namespace nsvsi {

struct FunctionDef {
  std::vector<std::string> args;
  Expr body;
};

// Named scalar functions (the papers' arbitrary alpha, beta, ...) plus declared
// antiderivative relations between them. Immutable after setup; the derivative
// cache is internally synchronized.
class FunctionRegistry {
 public:
  // body's Coord symbols must all be declared args
  void define(const std::string& name, std::vector<std::string> args, Expr body);

  bool has(const std::string& name) const { return fns_.count(name) != 0; }
  const FunctionDef& get(const std::string& name) const;

  // declares: dF/d(var) == g  (var is an argument name of both g and F)
  void declare_antiderivative(const std::string& g, const std::string& var,
                              const std::string& F);
  std::optional<std::string> antiderivative_of(const std::string& g,
                                               const std::string& var) const;
  const std::map<std::pair<std::string, std::string>, std::string>& antiderivatives() const {
    return anti_;
  }

  // body of d^{counts} f / d(slots), memoized symbolic differentiation
  Expr slot_deriv_body(const std::string& name, const std::vector<int>& counts) const;

  std::vector<std::string> names() const;

 private:
  std::map<std::string, FunctionDef> fns_;
  std::map<std::pair<std::string, std::string>, std::string> anti_;
  mutable std::mutex mu_;
  mutable std::map<std::string, Expr> deriv_cache_;
};

}  // namespace nsvsi
