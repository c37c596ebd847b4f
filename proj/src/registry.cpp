#include "registry.hpp"

#include <algorithm>

namespace nsvsi {

void FunctionRegistry::define(const std::string& name, std::vector<std::string> args,
                              Expr body) {
  std::set<std::string> free;
  free_symbols(body, free);
  // Coord nodes in a body are its formal arguments; Params pass through.
  // We cannot distinguish here, so require: every free symbol that is not a
  // declared arg must have been parsed as Param (callers parse bodies with
  // coords = args). Validate Coord usage directly:
  struct V {
    static void coords(const Expr& e, std::set<std::string>& out) {
      if (e->kind == NodeKind::Coord) out.insert(e->name);
      for (const auto& k : e->kids) coords(k, out);
    }
  };
  std::set<std::string> used;
  V::coords(body, used);
  for (const auto& s : used)
    if (std::find(args.begin(), args.end(), s) == args.end())
      fail(ErrorKind::Config,
           "function '" + name + "': body uses undeclared argument '" + s + "'");
  fns_[name] = FunctionDef{std::move(args), std::move(body)};
}

const FunctionDef& FunctionRegistry::get(const std::string& name) const {
  auto it = fns_.find(name);
  if (it == fns_.end()) fail(ErrorKind::UnknownSymbol, "unknown function '" + name + "'");
  return it->second;
}

void FunctionRegistry::declare_antiderivative(const std::string& g, const std::string& var,
                                              const std::string& F) {
  if (!has(g)) fail(ErrorKind::Config, "antiderivative declared for unknown function '" + g + "'");
  if (!has(F)) fail(ErrorKind::Config, "unknown antiderivative function '" + F + "'");
  anti_[{g, var}] = F;
}

std::optional<std::string> FunctionRegistry::antiderivative_of(const std::string& g,
                                                               const std::string& var) const {
  auto it = anti_.find({g, var});
  if (it == anti_.end()) return std::nullopt;
  return it->second;
}

Expr FunctionRegistry::slot_deriv_body(const std::string& name,
                                       const std::vector<int>& counts) const {
  std::string key = name;
  for (int c : counts) {
    key += '|';
    key += std::to_string(c);
  }
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = deriv_cache_.find(key);
    if (it != deriv_cache_.end()) return it->second;
  }
  const FunctionDef& def = get(name);
  if (counts.size() != def.args.size())
    fail(ErrorKind::Arity, "slot derivative arity mismatch for '" + name + "'");
  Expr body = def.body;
  for (std::size_t s = 0; s < counts.size(); ++s)
    for (int k = 0; k < counts[s]; ++k) body = derive(body, def.args[s]);
  std::lock_guard<std::mutex> lk(mu_);
  deriv_cache_.emplace(key, body);
  return body;
}

std::vector<std::string> FunctionRegistry::names() const {
  std::vector<std::string> out;
  out.reserve(fns_.size());
  for (const auto& [k, v] : fns_) out.push_back(k);
  return out;
}

}  // namespace nsvsi
