#include "skew3/expr.hpp"

#include <cctype>

namespace skew3 {

SyntaxError::SyntaxError(std::size_t line, std::size_t column, const std::string& message,
                         std::vector<std::string> expected)
    : Error([&] {
        std::string s = std::to_string(line) + ":" + std::to_string(column) + ": " + message;
        if (!expected.empty()) {
          s += " (expected ";
          for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i > 0) s += i + 1 == expected.size() ? " or " : ", ";
            s += expected[i];
          }
          s += ")";
        }
        return s;
      }()),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

namespace {

enum class Tok { ident, number, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::end) return "end of input";
  return "'" + t.text + "'";
}

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const auto c = static_cast<unsigned char>(src[i]);
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    const std::size_t l = line;
    const std::size_t cc = col;
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) {
        ++j;
      }
      out.push_back({Tok::ident, std::string(src.substr(i, j - i)), l, cc});
      advance(j - i);
      continue;
    }
    if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::number, std::string(src.substr(i, j - i)), l, cc});
      advance(j - i);
      continue;
    }
    Tok k;
    switch (c) {
      case '+':
        k = Tok::plus;
        break;
      case '-':
        k = Tok::minus;
        break;
      case '*':
        k = Tok::star;
        break;
      case '/':
        k = Tok::slash;
        break;
      case '^':
        k = Tok::caret;
        break;
      case '(':
        k = Tok::lparen;
        break;
      case ')':
        k = Tok::rparen;
        break;
      default:
        throw SyntaxError(l, cc, "unexpected character '" + std::string(1, src[i]) + "'");
    }
    out.push_back({k, std::string(1, src[i]), l, cc});
    advance(1);
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

const std::vector<std::string> kOperand{"generator", "parameter", "number", "'('", "'-'"};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Expr parse() {
    Expr e = expr();
    if (peek().kind != Tok::end) {
      fail(peek(), "unexpected " + describe(peek()), {"'+'", "'-'", "'*'", "'/'", "'^'", "end of input"});
    }
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] static void fail(const Token& t, const std::string& msg,
                                std::vector<std::string> expected = {}) {
    throw SyntaxError(t.line, t.column, msg, std::move(expected));
  }

  static Expr node(Expr::Kind k, const Token& at, std::vector<Expr> args) {
    Expr e;
    e.kind = k;
    e.line = at.line;
    e.column = at.column;
    e.args = std::move(args);
    return e;
  }

  Expr expr() {
    Expr lhs = term();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const Token op = next();
      Expr rhs = term();
      lhs = node(op.kind == Tok::plus ? Expr::Kind::add : Expr::Kind::sub, op,
                 {std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = factor();
    while (peek().kind == Tok::star || peek().kind == Tok::slash) {
      const Token op = next();
      const Token start = peek();
      Expr rhs = factor();
      if (op.kind == Tok::slash && rhs.has_generators()) {
        fail(start, "divisor must not contain x, y or z");
      }
      lhs = node(op.kind == Tok::star ? Expr::Kind::mul : Expr::Kind::div, op,
                 {std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  Expr factor() {
    if (peek().kind == Tok::minus) {
      const Token op = next();
      return node(Expr::Kind::neg, op, {factor()});
    }
    Expr base = primary();
    if (peek().kind == Tok::caret) {
      const Token op = next();
      const Token& t = peek();
      if (t.kind != Tok::number) fail(t, "exponent must be a nonnegative integer literal", {"number"});
      next();
      if (t.text.size() > 9) fail(t, "exponent too large");
      Expr e = node(Expr::Kind::pow, op, {std::move(base)});
      e.exponent = static_cast<unsigned>(std::stoul(t.text));
      return e;
    }
    return base;
  }

  Expr primary() {
    const Token t = peek();
    switch (t.kind) {
      case Tok::lparen: {
        next();
        Expr e = expr();
        if (peek().kind != Tok::rparen) {
          fail(peek(), "unexpected " + describe(peek()), {"')'", "operator"});
        }
        next();
        return e;
      }
      case Tok::number: {
        next();
        Expr e = node(Expr::Kind::number, t, {});
        e.number = Rational(mpz_class(t.text));
        return e;
      }
      case Tok::ident: {
        next();
        if (t.text.size() == 1 && (t.text[0] == 'x' || t.text[0] == 'y' || t.text[0] == 'z')) {
          Expr e = node(Expr::Kind::gen, t, {});
          e.gen = static_cast<Gen>(t.text[0] - 'x');
          return e;
        }
        if (!is_valid_param_name(t.text)) {
          fail(t, "unknown identifier '" + t.text + "' (products need an explicit '*')", kOperand);
        }
        Expr e = node(Expr::Kind::param, t, {});
        e.name = t.text;
        return e;
      }
      default:
        fail(t, "unexpected " + describe(t), kOperand);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

bool Expr::has_generators() const {
  if (kind == Kind::gen) return true;
  for (const auto& a : args) {
    if (a.has_generators()) return true;
  }
  return false;
}

std::string Expr::to_sexpr() const {
  switch (kind) {
    case Kind::gen:
      return std::string(1, gen_char(gen));
    case Kind::param:
      return name;
    case Kind::number:
      return number.get_str();
    case Kind::neg:
      return "(- " + args[0].to_sexpr() + ")";
    case Kind::pow:
      return "(^ " + args[0].to_sexpr() + " " + std::to_string(exponent) + ")";
    default:
      break;
  }
  const char* op = kind == Kind::add ? "+" : kind == Kind::sub ? "-" : kind == Kind::mul ? "*" : "/";
  return std::string("(") + op + " " + args[0].to_sexpr() + " " + args[1].to_sexpr() + ")";
}

Expr parse_expr(std::string_view src) { return Parser(tokenize(src)).parse(); }

RationalFn eval_scalar(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::gen:
      throw Error(std::string("generator ") + gen_char(e.gen) + " in a scalar expression");
    case Expr::Kind::param:
      return RationalFn::param(e.name);
    case Expr::Kind::number:
      return RationalFn(e.number);
    case Expr::Kind::add:
      return eval_scalar(e.args[0]) + eval_scalar(e.args[1]);
    case Expr::Kind::sub:
      return eval_scalar(e.args[0]) - eval_scalar(e.args[1]);
    case Expr::Kind::mul:
      return eval_scalar(e.args[0]) * eval_scalar(e.args[1]);
    case Expr::Kind::div:
      return eval_scalar(e.args[0]) / eval_scalar(e.args[1]);
    case Expr::Kind::neg:
      return -eval_scalar(e.args[0]);
    case Expr::Kind::pow: {
      const RationalFn b = eval_scalar(e.args[0]);
      RationalFn r(1);
      for (unsigned i = 0; i < e.exponent; ++i) r *= b;
      return r;
    }
  }
  return RationalFn();
}

NCPoly eval_expr(const Ring& ring, const Expr& e) {
  if (!e.has_generators()) return NCPoly(eval_scalar(e));
  switch (e.kind) {
    case Expr::Kind::gen:
      return NCPoly::gen(e.gen);
    case Expr::Kind::add:
      return eval_expr(ring, e.args[0]) + eval_expr(ring, e.args[1]);
    case Expr::Kind::sub:
      return eval_expr(ring, e.args[0]) - eval_expr(ring, e.args[1]);
    case Expr::Kind::mul:
      return ring.mul(eval_expr(ring, e.args[0]), eval_expr(ring, e.args[1]));
    case Expr::Kind::div:
      return eval_expr(ring, e.args[0]).scaled(eval_scalar(e.args[1]).inverse());
    case Expr::Kind::neg:
      return -eval_expr(ring, e.args[0]);
    case Expr::Kind::pow:
      return ring.pow(eval_expr(ring, e.args[0]), e.exponent);
    default:
      break;
  }
  return NCPoly();
}

NCPoly eval_expr(const AlgebraSpec& s, const Expr& e) { return eval_expr(Ring(s), e); }

}  // namespace skew3
