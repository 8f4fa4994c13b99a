#include "latdeg/lattice/expression.hpp"

#include <cctype>

namespace latdeg {

std::string_view placeholder_name(Placeholder p) {
  switch (p) {
    case Placeholder::X00:
      return "x00";
    case Placeholder::X10:
      return "x10";
    case Placeholder::X01:
      return "x01";
  }
  return "?";
}

ExprPtr Expr::constant(const mpz_class& v) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Const;
  e->value = v;
  return e;
}

ExprPtr Expr::placeholder(Placeholder p) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Cell;
  e->cell = p;
  return e;
}

ExprPtr Expr::coefficient() {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Coeff;
  return e;
}

ExprPtr Expr::binary(Kind k, ExprPtr a, ExprPtr b) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->lhs = std::move(a);
  e->rhs = std::move(b);
  return e;
}

ExprPtr Expr::negate(ExprPtr a) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Neg;
  e->lhs = std::move(a);
  return e;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ExprPtr expr() {
    ExprPtr e = term();
    while (true) {
      if (accept('+'))
        e = Expr::binary(Expr::Kind::Add, e, term());
      else if (accept('-'))
        e = Expr::binary(Expr::Kind::Sub, e, term());
      else
        return e;
    }
  }

  ExprPtr term() {
    ExprPtr e = unary();
    while (true) {
      if (accept('*'))
        e = Expr::binary(Expr::Kind::Mul, e, unary());
      else if (accept('/'))
        e = Expr::binary(Expr::Kind::Div, e, unary());
      else
        return e;
    }
  }

  ExprPtr unary() {
    if (accept('-')) return Expr::negate(unary());
    return primary();
  }

  ExprPtr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      ExprPtr e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Expr::constant(mpz_class(std::string(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string_view id = s_.substr(start, pos_ - start);
      if (id == "x00") return Expr::placeholder(Placeholder::X00);
      if (id == "x10") return Expr::placeholder(Placeholder::X10);
      if (id == "x01") return Expr::placeholder(Placeholder::X01);
      if (id == "z") return Expr::coefficient();
      pos_ = start;
      fail("unknown identifier '" + std::string(id) + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
      return 2;
    case Expr::Kind::Neg:
      return 3;
    default:
      return 4;
  }
}

void print_into(const Expr& e, std::string& out) {
  auto child = [&out](const Expr& c, bool parens) {
    if (parens) out += "(";
    print_into(c, out);
    if (parens) out += ")";
  };
  switch (e.kind) {
    case Expr::Kind::Const:
      out += e.value.get_str();
      return;
    case Expr::Kind::Cell:
      out += placeholder_name(e.cell);
      return;
    case Expr::Kind::Coeff:
      out += "z";
      return;
    case Expr::Kind::Neg:
      out += "-";
      child(*e.lhs, precedence(*e.lhs) < 3);
      return;
    default:
      break;
  }
  const int p = precedence(e);
  const char* op = e.kind == Expr::Kind::Add   ? " + "
                   : e.kind == Expr::Kind::Sub ? " - "
                   : e.kind == Expr::Kind::Mul ? "*"
                                               : "/";
  child(*e.lhs, precedence(*e.lhs) < p);
  out += op;
  child(*e.rhs, precedence(*e.rhs) <= p);
}

}  // namespace

ExprPtr parse_expression(std::string_view text) { return Parser(text).parse(); }

std::string print_expression(const Expr& e) {
  std::string out;
  print_into(e, out);
  return out;
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::Const:
      return a.value == b.value;
    case Expr::Kind::Cell:
      return a.cell == b.cell;
    case Expr::Kind::Coeff:
      return true;
    case Expr::Kind::Neg:
      return structurally_equal(*a.lhs, *b.lhs);
    default:
      return structurally_equal(*a.lhs, *b.lhs) && structurally_equal(*a.rhs, *b.rhs);
  }
}

bool uses_placeholder(const Expr& e, Placeholder p) {
  if (e.kind == Expr::Kind::Cell) return e.cell == p;
  return (e.lhs && uses_placeholder(*e.lhs, p)) || (e.rhs && uses_placeholder(*e.rhs, p));
}

bool uses_coefficient(const Expr& e) {
  if (e.kind == Expr::Kind::Coeff) return true;
  return (e.lhs && uses_coefficient(*e.lhs)) || (e.rhs && uses_coefficient(*e.rhs));
}

}  // namespace latdeg
