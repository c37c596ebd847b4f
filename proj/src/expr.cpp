#include "expr.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "registry.hpp"

namespace nsvsi {

namespace ex {

namespace {
Expr make(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }
}  // namespace

Expr ratio(long long n, long long d) {
  if (d == 0) fail(ErrorKind::DivisionByZero, "literal with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  long long g = std::gcd(n < 0 ? -n : n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  ExprNode e;
  e.kind = NodeKind::Constant;
  e.num = n;
  e.den = d;
  return make(std::move(e));
}

Expr coord(std::string name) {
  ExprNode e;
  e.kind = NodeKind::Coord;
  e.name = std::move(name);
  return make(std::move(e));
}

Expr param(std::string name) {
  ExprNode e;
  e.kind = NodeKind::Param;
  e.name = std::move(name);
  return make(std::move(e));
}

Expr sum(std::vector<Expr> kids) {
  ExprNode e;
  e.kind = NodeKind::Sum;
  e.kids = std::move(kids);
  return make(std::move(e));
}

Expr prod(std::vector<Expr> kids) {
  ExprNode e;
  e.kind = NodeKind::Product;
  e.kids = std::move(kids);
  return make(std::move(e));
}

Expr quot(Expr a, Expr b) {
  if (a->kind == NodeKind::Constant && b->kind == NodeKind::Constant) {
    if (b->num == 0) fail(ErrorKind::DivisionByZero, "constant division by zero");
    return ratio(a->num * b->den, a->den * b->num);
  }
  ExprNode e;
  e.kind = NodeKind::Quotient;
  e.kids = {std::move(a), std::move(b)};
  return make(std::move(e));
}

Expr pow(Expr base, long long pnum, long long pden) {
  if (pden == 0) fail(ErrorKind::DivisionByZero, "power with zero exponent denominator");
  if (pden < 0) {
    pnum = -pnum;
    pden = -pden;
  }
  long long g = std::gcd(pnum < 0 ? -pnum : pnum, pden);
  if (g > 1) {
    pnum /= g;
    pden /= g;
  }
  ExprNode e;
  e.kind = NodeKind::Power;
  e.kids = {std::move(base)};
  e.num = pnum;
  e.den = pden;
  return make(std::move(e));
}

Expr exp(Expr a) {
  ExprNode e;
  e.kind = NodeKind::Exp;
  e.kids = {std::move(a)};
  return make(std::move(e));
}

Expr ln(Expr a) {
  ExprNode e;
  e.kind = NodeKind::Ln;
  e.kids = {std::move(a)};
  return make(std::move(e));
}

Expr neg(Expr a) {
  if (a->kind == NodeKind::Constant) return ratio(-a->num, a->den);
  ExprNode e;
  e.kind = NodeKind::Neg;
  e.kids = {std::move(a)};
  return make(std::move(e));
}

Expr apply(std::string fname, std::vector<Expr> args) {
  ExprNode e;
  e.kind = NodeKind::Apply;
  e.name = std::move(fname);
  e.kids = std::move(args);
  return make(std::move(e));
}

Expr slot_deriv(std::string fname, std::vector<int> dcounts, std::vector<Expr> args) {
  ExprNode e;
  e.kind = NodeKind::SlotDeriv;
  e.name = std::move(fname);
  e.kids = std::move(args);
  e.dcounts = std::move(dcounts);
  return make(std::move(e));
}

Expr add(std::initializer_list<Expr> kids) {
  std::vector<Expr> ks;
  for (const auto& k : kids)
    if (!is_literal_zero(k)) ks.push_back(k);
  if (ks.empty()) return num(0);
  if (ks.size() == 1) return ks[0];
  return sum(std::move(ks));
}

Expr mul(std::initializer_list<Expr> kids) {
  std::vector<Expr> ks;
  for (const auto& k : kids) {
    if (is_literal_zero(k)) return num(0);
    if (!is_literal_one(k)) ks.push_back(k);
  }
  if (ks.empty()) return num(1);
  if (ks.size() == 1) return ks[0];
  return prod(std::move(ks));
}

Expr sub(Expr a, Expr b) {
  if (is_literal_zero(b)) return a;
  if (is_literal_zero(a)) return neg(std::move(b));
  return add({std::move(a), neg(std::move(b))});
}

}  // namespace ex

bool is_literal_zero(const Expr& e) {
  return e->kind == NodeKind::Constant && e->num == 0;
}

bool is_literal_one(const Expr& e) {
  return e->kind == NodeKind::Constant && e->num == 1 && e->den == 1;
}

bool structural_equal(const Expr& a, const Expr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind || a->num != b->num || a->den != b->den || a->name != b->name ||
      a->dcounts != b->dcounts || a->kids.size() != b->kids.size())
    return false;
  for (std::size_t i = 0; i < a->kids.size(); ++i)
    if (!structural_equal(a->kids[i], b->kids[i])) return false;
  return true;
}

namespace {

void print_node(const ExprNode& e, std::string& out);

// signed or fractional literals are parenthesized so they stay atomic as
// operands of *, /, ^
void print_const(long long n, long long d, std::string& out) {
  const bool wrap = n < 0 || d != 1;
  if (wrap) out += '(';
  out += std::to_string(n);
  if (d != 1) {
    out += '/';
    out += std::to_string(d);
  }
  if (wrap) out += ')';
}

void print_node(const Expr& e, std::string& out) { print_node(*e, out); }

void print_node(const ExprNode& e, std::string& out) {
  switch (e.kind) {
    case NodeKind::Constant:
      print_const(e.num, e.den, out);
      break;
    case NodeKind::Coord:
    case NodeKind::Param:
      out += e.name;
      break;
    case NodeKind::Sum: {
      out += '(';
      bool first = true;
      for (const auto& k : e.kids) {
        if (k->kind == NodeKind::Neg) {
          out += first ? "-" : " - ";
          print_node(k->kids[0], out);
        } else {
          if (!first) out += " + ";
          print_node(k, out);
        }
        first = false;
      }
      out += ')';
      break;
    }
    case NodeKind::Product: {
      out += '(';
      for (std::size_t i = 0; i < e.kids.size(); ++i) {
        if (i) out += '*';
        print_node(e.kids[i], out);
      }
      out += ')';
      break;
    }
    case NodeKind::Quotient:
      out += '(';
      print_node(e.kids[0], out);
      out += '/';
      print_node(e.kids[1], out);
      out += ')';
      break;
    case NodeKind::Power:
      out += '(';
      print_node(e.kids[0], out);
      out += '^';
      print_const(e.num, e.den, out);
      out += ')';
      break;
    case NodeKind::Exp:
      out += "exp(";
      print_node(e.kids[0], out);
      out += ')';
      break;
    case NodeKind::Ln:
      out += "ln(";
      print_node(e.kids[0], out);
      out += ')';
      break;
    case NodeKind::Neg:
      out += "(-";
      print_node(e.kids[0], out);
      out += ')';
      break;
    case NodeKind::Apply: {
      out += e.name;
      out += '(';
      for (std::size_t i = 0; i < e.kids.size(); ++i) {
        if (i) out += ", ";
        print_node(e.kids[i], out);
      }
      out += ')';
      break;
    }
    case NodeKind::SlotDeriv: {
      // printed as nested diff(...) by ascending slot; the parser folds them back
      std::string inner;
      inner += e.name;
      inner += '(';
      for (std::size_t i = 0; i < e.kids.size(); ++i) {
        if (i) inner += ", ";
        print_node(e.kids[i], inner);
      }
      inner += ')';
      // slot names are positional here: we print "#<slot>"-style markers only if
      // no registry is available; to_string uses slot indices 1-based
      for (std::size_t s = 0; s < e.dcounts.size(); ++s)
        for (int k = 0; k < e.dcounts[s]; ++k) {
          std::string w = "diff(" + inner + ", " + std::to_string(s + 1) + ")";
          inner = std::move(w);
        }
      out += inner;
      break;
    }
  }
}

}  // namespace

std::string to_string(const Expr& e) {
  std::string out;
  print_node(e, out);
  return out;
}

void free_symbols(const Expr& e, std::set<std::string>& out) {
  switch (e->kind) {
    case NodeKind::Coord:
    case NodeKind::Param:
      out.insert(e->name);
      break;
    default:
      for (const auto& k : e->kids) free_symbols(k, out);
  }
}

bool uses_symbol(const Expr& e, const std::string& name) {
  switch (e->kind) {
    case NodeKind::Coord:
    case NodeKind::Param:
      return e->name == name;
    default:
      for (const auto& k : e->kids)
        if (uses_symbol(k, name)) return true;
      return false;
  }
}

Expr substitute(const Expr& e, const std::string& name, const Expr& replacement) {
  switch (e->kind) {
    case NodeKind::Coord:
    case NodeKind::Param:
      return e->name == name ? replacement : e;
    default: {
      bool changed = false;
      std::vector<Expr> kids;
      kids.reserve(e->kids.size());
      for (const auto& k : e->kids) {
        Expr nk = substitute(k, name, replacement);
        changed |= nk.get() != k.get();
        kids.push_back(std::move(nk));
      }
      if (!changed) return e;
      ExprNode n = *e;
      n.kids = std::move(kids);
      return std::make_shared<const ExprNode>(std::move(n));
    }
  }
}

Expr derive(const Expr& e, const std::string& sym) {
  using namespace ex;
  switch (e->kind) {
    case NodeKind::Constant:
      return num(0);
    case NodeKind::Coord:
    case NodeKind::Param:
      return e->name == sym ? num(1) : num(0);
    case NodeKind::Sum: {
      std::vector<Expr> kids;
      for (const auto& k : e->kids) {
        Expr d = derive(k, sym);
        if (!is_literal_zero(d)) kids.push_back(std::move(d));
      }
      if (kids.empty()) return num(0);
      if (kids.size() == 1) return kids[0];
      return sum(std::move(kids));
    }
    case NodeKind::Product: {
      std::vector<Expr> terms;
      for (std::size_t i = 0; i < e->kids.size(); ++i) {
        Expr d = derive(e->kids[i], sym);
        if (is_literal_zero(d)) continue;
        std::vector<Expr> fac;
        for (std::size_t j = 0; j < e->kids.size(); ++j)
          if (j != i && !is_literal_one(e->kids[j])) fac.push_back(e->kids[j]);
        if (!is_literal_one(d)) fac.push_back(std::move(d));
        if (fac.empty())
          terms.push_back(num(1));
        else if (fac.size() == 1)
          terms.push_back(fac[0]);
        else
          terms.push_back(prod(std::move(fac)));
      }
      if (terms.empty()) return num(0);
      if (terms.size() == 1) return terms[0];
      return sum(std::move(terms));
    }
    case NodeKind::Quotient: {
      const Expr& a = e->kids[0];
      const Expr& b = e->kids[1];
      Expr da = derive(a, sym);
      Expr db = derive(b, sym);
      if (is_literal_zero(db)) return quot(da, b);  // (a/b)' = a'/b when b' = 0
      return quot(sub(mul({da, b}), mul({a, db})), mul({b, b}));
    }
    case NodeKind::Power: {
      Expr da = derive(e->kids[0], sym);
      if (is_literal_zero(da)) return num(0);
      // d(a^r) = r a^(r-1) a'
      Expr rm1 = pow(e->kids[0], e->num - e->den, e->den);
      return mul({ratio(e->num, e->den), std::move(rm1), std::move(da)});
    }
    case NodeKind::Exp: {
      Expr da = derive(e->kids[0], sym);
      if (is_literal_zero(da)) return num(0);
      return mul({e, std::move(da)});
    }
    case NodeKind::Ln: {
      Expr da = derive(e->kids[0], sym);
      if (is_literal_zero(da)) return num(0);
      return quot(std::move(da), e->kids[0]);
    }
    case NodeKind::Neg: {
      Expr da = derive(e->kids[0], sym);
      if (is_literal_zero(da)) return num(0);
      return neg(std::move(da));
    }
    case NodeKind::Apply:
    case NodeKind::SlotDeriv: {
      std::vector<Expr> terms;
      for (std::size_t k = 0; k < e->kids.size(); ++k) {
        Expr dk = derive(e->kids[k], sym);
        if (is_literal_zero(dk)) continue;
        std::vector<int> counts =
            e->kind == NodeKind::Apply ? std::vector<int>(e->kids.size(), 0) : e->dcounts;
        counts.resize(e->kids.size(), 0);
        counts[k] += 1;
        Expr sd = slot_deriv(e->name, std::move(counts), e->kids);
        if (is_literal_one(dk))
          terms.push_back(std::move(sd));
        else
          terms.push_back(mul({std::move(sd), std::move(dk)}));
      }
      if (terms.empty()) return num(0);
      if (terms.size() == 1) return terms[0];
      return sum(std::move(terms));
    }
  }
  fail(ErrorKind::Internal, "derive: unhandled node kind");
}

// ---------------- parser ----------------

namespace {

struct Token {
  enum Kind { Num, Ident, Op, LParen, RParen, Comma, End } kind;
  std::size_t pos;
  char op = 0;
  long long num = 0, den = 1;
  std::string text;
};

struct Lexer {
  const std::string& src;
  std::size_t i = 0;

  explicit Lexer(const std::string& s) : src(s) {}

  [[noreturn]] void err(std::size_t pos, const std::string& msg) const {
    fail(ErrorKind::Syntax, "syntax error at offset " + std::to_string(pos) + ": " + msg);
  }

  Token next() {
    while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) ++i;
    Token t;
    t.pos = i;
    if (i >= src.size()) {
      t.kind = Token::End;
      return t;
    }
    char c = src[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long intpart = 0;
      std::size_t start = i;
      int digits = 0;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
        if (++digits > 18) err(start, "numeric literal too long");
        intpart = intpart * 10 + (src[i] - '0');
        ++i;
      }
      long long n = intpart, d = 1;
      if (i < src.size() && src[i] == '.') {
        ++i;
        int fdigits = 0;
        while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
          if (++fdigits + digits > 18) err(start, "numeric literal too long");
          n = n * 10 + (src[i] - '0');
          d *= 10;
          ++i;
        }
        if (fdigits == 0) err(i, "expected digits after decimal point");
      }
      t.kind = Token::Num;
      t.num = n;
      t.den = d;
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i;
      while (i < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_'))
        ++i;
      t.kind = Token::Ident;
      t.text = src.substr(start, i - start);
      return t;
    }
    ++i;
    switch (c) {
      case '+':
      case '-':
      case '*':
      case '/':
      case '^':
        t.kind = Token::Op;
        t.op = c;
        return t;
      case '(':
        t.kind = Token::LParen;
        return t;
      case ')':
        t.kind = Token::RParen;
        return t;
      case ',':
        t.kind = Token::Comma;
        return t;
      default:
        err(t.pos, std::string("unexpected character '") + c + "'");
    }
  }
};

struct Parser {
  Lexer lex;
  Token cur;
  const ParseContext& cx;

  Parser(const std::string& s, const ParseContext& c) : lex(s), cx(c) { cur = lex.next(); }

  [[noreturn]] void err(const std::string& msg) const {
    fail(ErrorKind::Syntax, "syntax error at offset " + std::to_string(cur.pos) + ": " + msg);
  }

  void advance() { cur = lex.next(); }

  bool at_op(char c) const { return cur.kind == Token::Op && cur.op == c; }

  void expect_rparen() {
    if (cur.kind != Token::RParen) err("expected ')'");
    advance();
  }

  // ex::neg / ex::quot canonicalize constants, keeping round-trips structural
  static Expr fold(Expr e) { return e; }

  Expr parse_expr() {
    std::vector<Expr> terms;
    bool lead_neg = false;
    if (at_op('-')) {
      lead_neg = true;
      advance();
    } else if (at_op('+')) {
      advance();
    }
    Expr first = parse_term();
    terms.push_back(lead_neg ? fold(ex::neg(first)) : first);
    while (at_op('+') || at_op('-')) {
      bool minus = cur.op == '-';
      advance();
      Expr t = parse_term();
      terms.push_back(minus ? fold(ex::neg(t)) : t);
    }
    if (terms.size() == 1) return terms[0];
    return ex::sum(std::move(terms));
  }

  Expr parse_term() {
    Expr acc = parse_factor();
    std::vector<Expr> factors{acc};
    auto flush = [&]() -> Expr {
      if (factors.size() == 1) return factors[0];
      return ex::prod(std::move(factors));
    };
    while (at_op('*') || at_op('/')) {
      bool div = cur.op == '/';
      advance();
      Expr f = parse_factor();
      if (div) {
        Expr lhs = flush();
        factors = {fold(ex::quot(lhs, f))};
      } else {
        factors.push_back(f);
      }
    }
    return flush();
  }

  Expr parse_factor() {
    if (at_op('-')) {
      advance();
      return fold(ex::neg(parse_factor()));
    }
    if (at_op('+')) {
      advance();
      return parse_factor();
    }
    return parse_power();
  }

  Expr parse_power() {
    Expr base = parse_atom();
    if (at_op('^')) {
      advance();
      Expr e = parse_factor();  // right-associative; must fold to a constant
      e = fold(e);
      if (e->kind != NodeKind::Constant)
        err("exponent must be an exact rational constant");
      return ex::pow(std::move(base), e->num, e->den);
    }
    return base;
  }

  std::vector<Expr> parse_args() {
    std::vector<Expr> args;
    if (cur.kind == Token::RParen) {
      advance();
      return args;
    }
    for (;;) {
      args.push_back(parse_expr());
      if (cur.kind == Token::Comma) {
        advance();
        continue;
      }
      expect_rparen();
      return args;
    }
  }

  Expr parse_diff() {
    // diff(  f(args...) or nested diff , argname )
    if (cur.kind != Token::LParen) err("expected '(' after diff");
    advance();
    Expr inner = parse_expr();
    if (cur.kind != Token::Comma) err("diff requires a second argument");
    advance();
    if (cur.kind != Token::Ident && cur.kind != Token::Num) err("expected argument name or slot");
    std::string wname;
    long long slot1 = -1;
    if (cur.kind == Token::Ident)
      wname = cur.text;
    else
      slot1 = cur.num;
    advance();
    expect_rparen();
    if (inner->kind != NodeKind::Apply && inner->kind != NodeKind::SlotDeriv)
      err("diff applies to a registered function application");
    if (!cx.registry || !cx.registry->has(inner->name))
      fail(ErrorKind::UnknownSymbol, "unknown function '" + inner->name + "'");
    const auto& def = cx.registry->get(inner->name);
    std::size_t slot = 0;
    if (!wname.empty()) {
      auto it = std::find(def.args.begin(), def.args.end(), wname);
      if (it == def.args.end())
        fail(ErrorKind::UnknownSymbol,
             "'" + wname + "' is not an argument of '" + inner->name + "'");
      slot = static_cast<std::size_t>(it - def.args.begin());
    } else {
      if (slot1 < 1 || static_cast<std::size_t>(slot1) > def.args.size())
        fail(ErrorKind::Arity, "diff slot out of range for '" + inner->name + "'");
      slot = static_cast<std::size_t>(slot1 - 1);
    }
    std::vector<int> counts = inner->kind == NodeKind::Apply
                                  ? std::vector<int>(inner->kids.size(), 0)
                                  : inner->dcounts;
    counts.resize(inner->kids.size(), 0);
    counts[slot] += 1;
    return ex::slot_deriv(inner->name, std::move(counts), inner->kids);
  }

  Expr parse_atom() {
    switch (cur.kind) {
      case Token::Num: {
        Expr e = ex::ratio(cur.num, cur.den);
        advance();
        return e;
      }
      case Token::LParen: {
        advance();
        Expr e = parse_expr();
        expect_rparen();
        return e;
      }
      case Token::Ident: {
        std::string name = cur.text;
        std::size_t pos = cur.pos;
        advance();
        if (cur.kind == Token::LParen) {
          if (name == "exp" || name == "ln") {
            advance();
            Expr a = parse_expr();
            expect_rparen();
            return name == "exp" ? ex::exp(std::move(a)) : ex::ln(std::move(a));
          }
          if (name == "diff") return parse_diff();
          if (!cx.registry || !cx.registry->has(name))
            fail(ErrorKind::UnknownSymbol, "unknown function '" + name + "' at offset " +
                                               std::to_string(pos));
          advance();
          std::vector<Expr> args = parse_args();
          const auto& def = cx.registry->get(name);
          if (args.size() != def.args.size())
            fail(ErrorKind::Arity, "function '" + name + "' expects " +
                                       std::to_string(def.args.size()) + " arguments, got " +
                                       std::to_string(args.size()));
          return ex::apply(name, std::move(args));
        }
        if (std::find(cx.coords.begin(), cx.coords.end(), name) != cx.coords.end())
          return ex::coord(name);
        if (cx.params.count(name)) return ex::param(name);
        fail(ErrorKind::UnknownSymbol,
             "unknown symbol '" + name + "' at offset " + std::to_string(pos));
      }
      default:
        err("expected expression");
    }
  }
};

}  // namespace

Expr parse(const std::string& src, const ParseContext& cx) {
  Parser p(src, cx);
  Expr e = p.parse_expr();
  if (p.cur.kind != Token::End)
    fail(ErrorKind::Syntax,
         "syntax error at offset " + std::to_string(p.cur.pos) + ": trailing input");
  return e;
}

}  // namespace nsvsi
