#pragma once

// Expression trees for metric components and the papers' arbitrary functions.
// Immutable after construction; shared subtrees are fine.

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "scalars.hpp"

namespace nsvsi {

class FunctionRegistry;

enum class NodeKind {
  Constant,   // exact rational literal (num/den)
  Coord,      // chart coordinate, or formal argument inside a function body
  Param,      // named parameter bound to a constant at evaluation time
  Sum,        // n-ary
  Product,    // n-ary
  Quotient,   // binary
  Power,      // base ^ (num/den), exponent is an exact rational
  Exp,
  Ln,
  Neg,
  Apply,      // registered function application
  SlotDeriv,  // derivative of a registered function w.r.t. formal slots,
              // evaluated at the given arguments
};

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  NodeKind kind;
  long long num = 0, den = 1;  // Constant value, or Power exponent
  std::string name;            // Coord/Param/Apply/SlotDeriv
  std::vector<Expr> kids;
  std::vector<int> dcounts;    // SlotDeriv: derivative multiplicity per slot
};

// ---- builders
namespace ex {
Expr ratio(long long n, long long d);
inline Expr num(long long n) { return ratio(n, 1); }
Expr coord(std::string name);
Expr param(std::string name);
Expr sum(std::vector<Expr> kids);
Expr prod(std::vector<Expr> kids);
Expr quot(Expr a, Expr b);
Expr pow(Expr base, long long pnum, long long pden = 1);
Expr exp(Expr a);
Expr ln(Expr a);
Expr neg(Expr a);
Expr apply(std::string fname, std::vector<Expr> args);
Expr slot_deriv(std::string fname, std::vector<int> dcounts, std::vector<Expr> args);

// folding convenience used when assembling formulas programmatically:
// drops zero terms / unit factors, returns literal 0/1 where forced
Expr add(std::initializer_list<Expr> kids);
Expr mul(std::initializer_list<Expr> kids);
Expr sub(Expr a, Expr b);
}  // namespace ex

bool structural_equal(const Expr& a, const Expr& b);
bool is_literal_zero(const Expr& e);
bool is_literal_one(const Expr& e);

std::string to_string(const Expr& e);

// free Coord/Param symbol names (args of Apply nodes included; function bodies
// are closed over their formals and do not contribute)
void free_symbols(const Expr& e, std::set<std::string>& out);
bool uses_symbol(const Expr& e, const std::string& name);

// replace every Coord/Param node named `name` by `replacement`
Expr substitute(const Expr& e, const std::string& name, const Expr& replacement);

// symbolic derivative with respect to a Coord symbol; Apply nodes produce
// SlotDeriv children via the chain rule
Expr derive(const Expr& e, const std::string& sym);

struct ParseContext {
  std::vector<std::string> coords;           // chart names (or formal args for bodies)
  std::set<std::string> params;              // declared named parameters
  const FunctionRegistry* registry = nullptr;
};

// parse a DSL expression; throws Error(Syntax/UnknownSymbol/Arity) with byte offsets
Expr parse(const std::string& src, const ParseContext& cx);

}  // namespace nsvsi
