#include "adelic/parse.hpp"

#include <array>
#include <map>
#include <memory>

#include "json.hpp"

namespace adelic::parse {

using series::BivPoly;
using series::BivRatFn;

namespace {

struct Token {
  enum Kind { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } kind;
  long long value = 0;
  std::string name;
  size_t pos = 0;
};

[[noreturn]] void fail(size_t pos, const std::string& msg) {
  throw ContractViolation("parse error at offset " + std::to_string(pos) + ": " + msg);
}

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      long long v = 0;
      while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) {
        v = v * 10 + (s[j] - '0');
        if (v > (1LL << 40)) fail(i, "integer literal too large");
        ++j;
      }
      out.push_back({Token::Int, v, "", i});
      i = j;
      continue;
    }
    if (isalpha(static_cast<unsigned char>(c))) {
      size_t j = i;
      std::string name;
      while (j < s.size() && isalnum(static_cast<unsigned char>(s[j]))) name += s[j++];
      out.push_back({Token::Ident, 0, name, i});
      i = j;
      continue;
    }
    Token::Kind k;
    switch (c) {
      case '+': k = Token::Plus; break;
      case '-': k = Token::Minus; break;
      case '*': k = Token::Star; break;
      case '/': k = Token::Slash; break;
      case '^': k = Token::Caret; break;
      case '(': k = Token::LParen; break;
      case ')': k = Token::RParen; break;
      default: fail(i, std::string("unexpected character '") + c + "'");
    }
    out.push_back({k, 0, "", i});
    ++i;
  }
  out.push_back({Token::End, 0, "", s.size()});
  return out;
}

struct Ast {
  enum Kind { Int, Var, Add, Sub, Neg, Mul, Div, Pow } kind;
  long long value = 0;
  std::string name;
  std::unique_ptr<Ast> a, b;
  long exp = 0;
  size_t pos = 0;
};
using AstPtr = std::unique_ptr<Ast>;

class Parser {
 public:
  explicit Parser(std::vector<Token> t) : toks_(std::move(t)) {}

  AstPtr parse() {
    auto e = expr();
    if (cur().kind != Token::End) fail(cur().pos, "trailing input");
    return e;
  }

  AstPtr expr() {
    bool neg = false;
    if (cur().kind == Token::Minus) {
      neg = true;
      ++i_;
    } else if (cur().kind == Token::Plus) {
      ++i_;
    }
    auto lhs = term();
    if (neg) lhs = mk_unary(Ast::Neg, std::move(lhs));
    while (cur().kind == Token::Plus || cur().kind == Token::Minus) {
      auto k = cur().kind == Token::Plus ? Ast::Add : Ast::Sub;
      ++i_;
      lhs = mk_bin(k, std::move(lhs), term());
    }
    return lhs;
  }

  AstPtr term() {
    auto lhs = factor();
    while (cur().kind == Token::Star || cur().kind == Token::Slash) {
      auto k = cur().kind == Token::Star ? Ast::Mul : Ast::Div;
      ++i_;
      lhs = mk_bin(k, std::move(lhs), factor());
    }
    return lhs;
  }

  AstPtr factor() {
    auto base = atom();
    if (cur().kind == Token::Caret) {
      ++i_;
      if (cur().kind != Token::Int) fail(cur().pos, "exponent must be a nonnegative integer");
      long e = static_cast<long>(cur().value);
      ++i_;
      auto n = std::make_unique<Ast>();
      n->kind = Ast::Pow;
      n->a = std::move(base);
      n->exp = e;
      return n;
    }
    return base;
  }

  AstPtr atom() {
    const Token& t = cur();
    if (t.kind == Token::Int) {
      ++i_;
      auto n = std::make_unique<Ast>();
      n->kind = Ast::Int;
      n->value = t.value;
      n->pos = t.pos;
      return n;
    }
    if (t.kind == Token::Ident) {
      ++i_;
      auto n = std::make_unique<Ast>();
      n->kind = Ast::Var;
      n->name = t.name;
      n->pos = t.pos;
      return n;
    }
    if (t.kind == Token::LParen) {
      ++i_;
      auto e = expr();
      if (cur().kind != Token::RParen) fail(cur().pos, "expected ')'");
      ++i_;
      return e;
    }
    fail(t.pos, "expected a number, variable or '('");
  }

  const Token& cur() const { return toks_[i_]; }

 private:
  static AstPtr mk_bin(Ast::Kind k, AstPtr a, AstPtr b) {
    auto n = std::make_unique<Ast>();
    n->kind = k;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
  }
  static AstPtr mk_unary(Ast::Kind k, AstPtr a) {
    auto n = std::make_unique<Ast>();
    n->kind = k;
    n->a = std::move(a);
    return n;
  }
  std::vector<Token> toks_;
  size_t i_ = 0;
};

// evaluation into the bivariate rational function field with variables u, t
BivRatFn eval_biv(const Ast& n, const FqPtr& F) {
  switch (n.kind) {
    case Ast::Int:
      return BivRatFn::from_poly(BivPoly::constant(F, F->from_int(n.value)));
    case Ast::Var:
      if (n.name == "u") return BivRatFn::from_poly(BivPoly::var_u(F));
      if (n.name == "t") return BivRatFn::from_poly(BivPoly::var_t(F));
      fail(n.pos, "unknown variable '" + n.name + "' (expected u or t)");
    case Ast::Add:
      return eval_biv(*n.a, F) + eval_biv(*n.b, F);
    case Ast::Sub:
      return eval_biv(*n.a, F) - eval_biv(*n.b, F);
    case Ast::Neg:
      return -eval_biv(*n.a, F);
    case Ast::Mul:
      return eval_biv(*n.a, F) * eval_biv(*n.b, F);
    case Ast::Div: {
      auto d = eval_biv(*n.b, F);
      if (d.is_zero()) fail(n.pos, "division by zero");
      return eval_biv(*n.a, F) / d;
    }
    case Ast::Pow: {
      auto base = eval_biv(*n.a, F);
      auto acc = BivRatFn::from_poly(BivPoly::constant(F, F->one()));
      for (long i = 0; i < n.exp; ++i) acc = acc * base;
      return acc;
    }
  }
  throw ContractViolation("parse: bad AST");
}

// multiplicative leaves of an expression; used for the denominator of 2-forms
void collect_factors(const Ast& n, const FqPtr& F, std::vector<BivPoly>& out) {
  switch (n.kind) {
    case Ast::Mul:
      collect_factors(*n.a, F, out);
      collect_factors(*n.b, F, out);
      return;
    case Ast::Pow:
    case Ast::Neg:
      collect_factors(*n.a, F, out);
      return;
    default: {
      auto v = eval_biv(n, F);
      if (!v.den.level(0).is_zero() && v.den.deg_t() == 0 && v.den.level(0).deg() == 0) {
        // polynomial factor
        if (v.num.deg_t() == 0 && v.num.level(0).deg() == 0) return;  // constant, not a branch
        for (const auto& f : out)
          if (f == v.num) return;
        out.push_back(v.num);
      } else {
        fail(n.pos, "two-form denominator must be a product of polynomial factors");
      }
      return;
    }
  }
}

}  // namespace

BivRatFn rational_2d(const FqPtr& F, const std::string& text) {
  Parser p(tokenize(text));
  auto ast = p.parse();
  return eval_biv(*ast, F);
}

BivPoly biv_poly(const FqPtr& F, const std::string& text) {
  auto r = rational_2d(F, text);
  if (r.den.deg_t() != 0 || r.den.level(0).deg() != 0)
    throw ContractViolation("expected a polynomial, got a quotient: " + text);
  // clear the constant denominator
  auto c = r.den.level(0).coeff(0);
  return r.num * BivPoly::constant(F, F->inv(c));
}

Poly<FqHandle> poly_1d(const FqPtr& F, const std::string& text) {
  auto b = biv_poly(F, text);
  FqHandle h{F};
  std::vector<algebra::Fq> c(static_cast<size_t>(b.deg_t()) + 1, 0);
  for (int j = 0; j <= b.deg_t(); ++j) {
    auto l = b.level(j);
    if (l.deg() > 0) throw ContractViolation("expected a polynomial in t only: " + text);
    c[static_cast<size_t>(j)] = l.coeff(0);
  }
  return Poly<FqHandle>(h, c);
}

Poly<FqHandle> poly_in_u(const FqPtr& F, const std::string& text) {
  auto b = biv_poly(F, text);
  if (b.deg_t() > 0) throw ContractViolation("expected a polynomial in u only: " + text);
  return b.level(0);
}

series::FqRat rational_1d(const FqPtr& F, const std::string& text) {
  auto r = rational_2d(F, text);
  auto univ = [&](const BivPoly& b) {
    std::vector<algebra::Fq> c(static_cast<size_t>(b.deg_t() + 1), 0);
    for (int j = 0; j <= b.deg_t(); ++j) {
      auto l = b.level(j);
      if (l.deg() > 0) throw ContractViolation("expected a rational function of t only: " + text);
      c[static_cast<size_t>(j)] = l.coeff(0);
    }
    return Poly<FqHandle>(FqHandle{F}, c);
  };
  return series::FqRat(univ(r.num), univ(r.den));
}

series::TwoForm two_form(const FqPtr& F, const std::string& text) {
  // strip the trailing volume element
  auto toks = tokenize(text);
  size_t n = toks.size();  // includes End
  if (n < 4) throw ContractViolation("two_form: expected '... du^dt'");
  const Token& a = toks[n - 4];
  const Token& b = toks[n - 3];
  const Token& c = toks[n - 2];
  if (!(a.kind == Token::Ident && a.name == "du" && b.kind == Token::Caret &&
        c.kind == Token::Ident && c.name == "dt"))
    throw ContractViolation("two_form: input must end with du^dt");
  size_t cut = a.pos;
  std::string head = text.substr(0, cut);
  // drop a trailing '*'
  size_t last = head.find_last_not_of(" \t");
  if (last != std::string::npos && head[last] == '*') head = head.substr(0, last);
  Parser p(tokenize(head));
  auto ast = p.parse();
  series::TwoForm w{eval_biv(*ast, F), {}};
  // structural denominator factors
  const Ast* node = ast.get();
  std::vector<const Ast*> dens;
  // walk the top-level product chain collecting divisors
  std::vector<const Ast*> stack = {node};
  while (!stack.empty()) {
    const Ast* cur = stack.back();
    stack.pop_back();
    if (cur->kind == Ast::Mul) {
      stack.push_back(cur->a.get());
      stack.push_back(cur->b.get());
    } else if (cur->kind == Ast::Div) {
      stack.push_back(cur->a.get());
      dens.push_back(cur->b.get());
    } else if (cur->kind == Ast::Neg || cur->kind == Ast::Pow) {
      stack.push_back(cur->a.get());
    }
  }
  for (const Ast* d : dens) collect_factors(*d, F, w.den_factors);
  return w;
}

curve::Divisor divisor(const FqPtr& F, const std::string& text) {
  curve::Divisor D(F);
  auto toks = tokenize(text);
  size_t i = 0;
  bool first = true;
  while (toks[i].kind != Token::End) {
    long sign = 1;
    if (toks[i].kind == Token::Plus) {
      ++i;
    } else if (toks[i].kind == Token::Minus) {
      sign = -1;
      ++i;
    } else if (!first) {
      fail(toks[i].pos, "expected '+' or '-' between divisor terms");
    }
    first = false;
    long mult = 1;
    if (toks[i].kind == Token::Int) {
      mult = static_cast<long>(toks[i].value);
      ++i;
      if (toks[i].kind != Token::Star) fail(toks[i].pos, "expected '*' after multiplicity");
      ++i;
    }
    if (toks[i].kind != Token::LParen) fail(toks[i].pos, "expected '(place)'");
    size_t open = toks[i].pos;
    ++i;
    int depth = 1;
    size_t j = i;
    while (toks[j].kind != Token::End && depth > 0) {
      if (toks[j].kind == Token::LParen) ++depth;
      if (toks[j].kind == Token::RParen) --depth;
      ++j;
    }
    if (depth != 0) fail(open, "unbalanced parenthesis in place");
    size_t close_pos = toks[j - 1].pos;
    std::string inner = text.substr(open + 1, close_pos - open - 1);
    i = j;
    series::ClosedPoint x =
        inner == "inf" ? series::ClosedPoint::infinity(F) : series::ClosedPoint::finite(poly_1d(F, inner));
    D.set(x, D.coeff(x) + sign * mult);
  }
  return D;
}

curve::CurveModel curve_model_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const std::exception& e) {
    throw ContractViolation(std::string("curve model: bad JSON: ") + e.what());
  }
  if (!j.contains("q") || !j.contains("model")) throw ContractViolation("curve model: need q and model");
  long q = j["q"].get<long>();
  // q = p^k with smallest prime p
  long p = 2;
  while (p <= q && q % p != 0) ++p;
  int k = 0;
  long v = q;
  while (v > 1) {
    if (v % p != 0) throw ContractViolation("curve model: q must be a prime power");
    v /= p;
    ++k;
  }
  auto F = algebra::FqField::make(p, k);
  std::string model = j["model"].get<std::string>();
  if (model == "p1") return curve::P1Model{F};
  if (model != "plane") throw ContractViolation("curve model: model must be p1 or plane");
  if (!j.contains("poly")) throw ContractViolation("curve model: plane model needs poly");
  // trivariate homogeneous polynomial in x, y, z
  std::string poly = j["poly"].get<std::string>();
  Parser pr(tokenize(poly));
  auto ast = pr.parse();
  using Tri = std::map<std::array<int, 3>, algebra::Fq>;
  std::function<Tri(const Ast&)> ev = [&](const Ast& n) -> Tri {
    auto add = [&](Tri a, const Tri& b) {
      for (const auto& [e, c] : b) {
        auto it = a.find(e);
        algebra::Fq s = F->add(it == a.end() ? 0 : it->second, c);
        if (s == 0)
          a.erase(e);
        else
          a[e] = s;
      }
      return a;
    };
    auto mul = [&](const Tri& a, const Tri& b) {
      Tri r;
      for (const auto& [e1, c1] : a)
        for (const auto& [e2, c2] : b) {
          std::array<int, 3> e{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]};
          auto it = r.find(e);
          algebra::Fq s = F->add(it == r.end() ? 0 : it->second, F->mul(c1, c2));
          if (s == 0)
            r.erase(e);
          else
            r[e] = s;
        }
      return r;
    };
    switch (n.kind) {
      case Ast::Int: {
        Tri r;
        auto c = F->from_int(n.value);
        if (c != 0) r[{0, 0, 0}] = c;
        return r;
      }
      case Ast::Var: {
        Tri r;
        if (n.name == "x") r[{1, 0, 0}] = F->one();
        else if (n.name == "y") r[{0, 1, 0}] = F->one();
        else if (n.name == "z") r[{0, 0, 1}] = F->one();
        else fail(n.pos, "plane model variables are x, y, z");
        return r;
      }
      case Ast::Add: return add(ev(*n.a), ev(*n.b));
      case Ast::Sub: {
        Tri b = ev(*n.b);
        for (auto& [e, c] : b) c = F->neg(c);
        return add(ev(*n.a), b);
      }
      case Ast::Neg: {
        Tri a = ev(*n.a);
        for (auto& [e, c] : a) c = F->neg(c);
        return a;
      }
      case Ast::Mul: return mul(ev(*n.a), ev(*n.b));
      case Ast::Pow: {
        Tri acc;
        acc[{0, 0, 0}] = F->one();
        Tri base = ev(*n.a);
        for (long i = 0; i < n.exp; ++i) acc = mul(acc, base);
        return acc;
      }
      case Ast::Div: fail(n.pos, "plane model must be polynomial");
    }
    throw ContractViolation("parse: bad AST");
  };
  Tri tri = ev(*ast);
  if (tri.empty()) throw ContractViolation("curve model: zero polynomial");
  curve::PlaneModel pm;
  pm.F = F;
  int degree = -1;
  for (const auto& [e, c] : tri) {
    int d = e[0] + e[1] + e[2];
    if (degree == -1) degree = d;
    if (d != degree) throw ContractViolation("curve model: polynomial is not homogeneous");
    pm.poly.push_back({e[0], e[1], e[2], c});
  }
  pm.degree = degree;
  return pm;
}

}  // namespace adelic::parse
