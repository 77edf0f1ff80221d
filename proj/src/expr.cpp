#include "weil/expr.hpp"

#include <cctype>
#include <sstream>

namespace weil {

namespace {

std::string where(SourcePos p) {
  return std::to_string(p.line) + ":" + std::to_string(p.column);
}

std::string join(const std::set<std::string>& s) {
  std::string out;
  for (const auto& x : s) out += (out.empty() ? "" : ", ") + x;
  return out;
}

enum class Tok { Int, Ident, Plus, Minus, Star, Tensor, Caret, Slash, LParen, RParen,
                 LBracket, RBracket, Comma, End };

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      SourcePos start = pos_;
      if (i_ >= s_.size()) {
        out.push_back({Tok::End, "", start});
        return out;
      }
      unsigned char ch = static_cast<unsigned char>(s_[i_]);
      if (std::isdigit(ch)) {
        std::string t;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) t += take();
        out.push_back({Tok::Int, t, start});
      } else if (std::isalpha(ch) || ch == '_') {
        std::string t;
        while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
          t += take();
        out.push_back({Tok::Ident, t, start});
      } else if (s_.compare(i_, 3, "\xE2\x88\x92") == 0) {  // U+2212 minus
        advance_bytes(3);
        out.push_back({Tok::Minus, "\xE2\x88\x92", start});
      } else if (s_.compare(i_, 3, "\xE2\x8A\x97") == 0) {  // U+2297 tensor
        advance_bytes(3);
        out.push_back({Tok::Tensor, "\xE2\x8A\x97", start});
      } else {
        Tok k;
        switch (ch) {
          case '+': k = Tok::Plus; break;
          case '-': k = Tok::Minus; break;
          case '*': k = Tok::Star; break;
          case '^': k = Tok::Caret; break;
          case '/': k = Tok::Slash; break;
          case '(': k = Tok::LParen; break;
          case ')': k = Tok::RParen; break;
          case '[': k = Tok::LBracket; break;
          case ']': k = Tok::RBracket; break;
          case ',': k = Tok::Comma; break;
          default: {
            std::string bad = utf8_char();
            throw ParseError(start, "unexpected character '" + bad + "'", {});
          }
        }
        out.push_back({k, std::string(1, take()), start});
      }
    }
  }

 private:
  void skip_space() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) take();
  }
  char take() {
    char c = s_[i_++];
    if (c == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    return c;
  }
  void advance_bytes(std::size_t n) {
    i_ += n;
    ++pos_.column;
  }
  std::string utf8_char() const {
    std::size_t n = 1;
    unsigned char c = static_cast<unsigned char>(s_[i_]);
    if (c >= 0xF0) n = 4;
    else if (c >= 0xE0) n = 3;
    else if (c >= 0xC0) n = 2;
    return s_.substr(i_, n);
  }

  const std::string& s_;
  std::size_t i_ = 0;
  SourcePos pos_;
};

const std::set<std::string> kAtomStart = {"number", "generator", "'('", "'['", "'-'",
                                          "function", "constant"};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  ExprPtr parse_all() {
    ExprPtr e = expr();
    if (peek().kind != Tok::End)
      fail({"'+'", "'-'", "'*'", "'\xE2\x8A\x97'", "'^'", "end of input"});
    return e;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  const Token& next() { return toks_[i_++]; }

  [[noreturn]] void fail(std::set<std::string> expected) const {
    throw ParseError(peek().pos, "unexpected " + describe(peek()), std::move(expected));
  }

  const Token& expect(Tok k, const std::string& what) {
    if (peek().kind != k) fail({what});
    return next();
  }

  static std::shared_ptr<Expr> node(Expr::Kind k, SourcePos p) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->pos = p;
    return e;
  }

  ExprPtr expr() {
    ExprPtr left = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const Token& op = next();
      auto e = node(op.kind == Tok::Plus ? Expr::Kind::Add : Expr::Kind::Sub, op.pos);
      e->args = {left, term()};
      left = e;
    }
    return left;
  }

  ExprPtr term() {
    ExprPtr left = factor();
    while (peek().kind == Tok::Star || peek().kind == Tok::Tensor) {
      const Token& op = next();
      auto e = node(Expr::Kind::Mul, op.pos);
      e->args = {left, factor()};
      left = e;
    }
    return left;
  }

  ExprPtr factor() {
    if (peek().kind == Tok::Minus) {
      const Token& op = next();
      auto e = node(Expr::Kind::Neg, op.pos);
      e->args = {factor()};
      return e;
    }
    ExprPtr base = atom();
    if (peek().kind == Tok::Caret) {
      const Token& op = next();
      const Token& n = expect(Tok::Int, "integer exponent");
      auto e = node(Expr::Kind::Pow, op.pos);
      e->power = static_cast<unsigned>(std::stoul(n.text));
      e->args = {base};
      return e;
    }
    return base;
  }

  Scalar rational() {
    const Token& p = expect(Tok::Int, "number");
    std::string text = p.text;
    if (peek().kind == Tok::Slash) {
      next();
      const Token& q = expect(Tok::Int, "denominator");
      if (std::stoul(q.text) == 0) throw ParseError(q.pos, "zero denominator", {});
      text += "/" + q.text;
    }
    return Scalar::parse(text);
  }

  std::size_t index_arg() {
    const Token& t = expect(Tok::Int, "index");
    return std::stoul(t.text);
  }

  ExprPtr matrix_literal() {
    const Token& open = next();
    std::vector<std::vector<Scalar>> rows;
    for (;;) {
      expect(Tok::LBracket, "'['");
      std::vector<Scalar> row;
      for (;;) {
        bool neg = false;
        if (peek().kind == Tok::Minus) {
          next();
          neg = true;
        }
        Scalar s = rational();
        row.push_back(neg ? -s : s);
        if (peek().kind == Tok::Comma) {
          next();
          continue;
        }
        expect(Tok::RBracket, "']'");
        break;
      }
      rows.push_back(std::move(row));
      if (peek().kind == Tok::Comma) {
        next();
        continue;
      }
      expect(Tok::RBracket, "']'");
      break;
    }
    auto e = node(Expr::Kind::MatrixLiteral, open.pos);
    try {
      e->matrix = Matrix::from_rows(rows);
    } catch (const Error& err) {
      throw ParseError(open.pos, err.what(), {});
    }
    return e;
  }

  ExprPtr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Int: {
        SourcePos p = t.pos;
        auto e = node(Expr::Kind::Rational, p);
        e->value = rational();
        return e;
      }
      case Tok::LParen: {
        next();
        ExprPtr e = expr();
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::LBracket:
        return matrix_literal();
      case Tok::Ident:
        return identifier();
      default:
        fail(kAtomStart);
    }
  }

  ExprPtr identifier() {
    const Token& t = next();
    const std::string& s = t.text;
    if (s.size() >= 2 && std::string("vyux").find(s[0]) != std::string::npos &&
        s.find_first_not_of("0123456789", 1) == std::string::npos) {
      auto e = node(Expr::Kind::Generator, t.pos);
      e->letter = s[0];
      e->index = std::stoul(s.substr(1));
      return e;
    }
    if (s == "C") return node(Expr::Kind::Curvature, t.pos);
    if (s == "QC") return node(Expr::Kind::QuantumCurvature, t.pos);
    if (s == "gamma") return node(Expr::Kind::Gamma, t.pos);
    if (s == "Dirac") return node(Expr::Kind::Dirac, t.pos);
    if (s == "tau" || s == "g") {
      auto e = node(s == "tau" ? Expr::Kind::Tau : Expr::Kind::G, t.pos);
      expect(Tok::LParen, "'('");
      e->index = index_arg();
      expect(Tok::RParen, "')'");
      return e;
    }
    if (s == "d") {
      auto e = node(Expr::Kind::D, t.pos);
      expect(Tok::LParen, "'('");
      e->args = {expr()};
      expect(Tok::RParen, "')'");
      return e;
    }
    if (s == "L" || s == "iota") {
      auto e = node(s == "L" ? Expr::Kind::L : Expr::Kind::Iota, t.pos);
      expect(Tok::LParen, "'('");
      e->index = index_arg();
      expect(Tok::Comma, "','");
      e->args = {expr()};
      expect(Tok::RParen, "')'");
      return e;
    }
    if (s == "comm") {
      auto e = node(Expr::Kind::Comm, t.pos);
      expect(Tok::LParen, "'('");
      ExprPtr a = expr();
      expect(Tok::Comma, "','");
      ExprPtr b = expr();
      expect(Tok::RParen, "')'");
      e->args = {a, b};
      return e;
    }
    throw ParseError(t.pos, "unknown identifier '" + s + "'", kAtomStart);
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

// Which context a node requires: 0 none, 1 classical, 2 quantum.
int context_of(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Generator:
      return (e.letter == 'v' || e.letter == 'y') ? 1 : 2;
    case Expr::Kind::Curvature:
      return 1;
    case Expr::Kind::QuantumCurvature:
    case Expr::Kind::Gamma:
    case Expr::Kind::Dirac:
    case Expr::Kind::G:
      return 2;
    default:
      return 0;
  }
}

void find_contexts(const Expr& e, const Expr*& classical, const Expr*& quantum) {
  int c = context_of(e);
  if (c == 1 && !classical) classical = &e;
  if (c == 2 && !quantum) quantum = &e;
  for (const auto& a : e.args) find_contexts(*a, classical, quantum);
}

std::string symbol(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Generator: return e.letter + std::to_string(e.index);
    case Expr::Kind::Curvature: return "C";
    case Expr::Kind::QuantumCurvature: return "QC";
    case Expr::Kind::Gamma: return "gamma";
    case Expr::Kind::Dirac: return "Dirac";
    case Expr::Kind::G: return "g(" + std::to_string(e.index) + ")";
    default: return "?";
  }
}

}  // namespace

ParseError::ParseError(SourcePos p, std::string message, std::set<std::string> exp)
    : Error("parse error at " + where(p) + ": " + message +
            (exp.empty() ? "" : "; expected one of: " + join(exp))),
      pos(p),
      detail(std::move(message)),
      expected(std::move(exp)) {}

EvalError::EvalError(SourcePos p, const std::string& message)
    : Error("evaluation error at " + where(p) + ": " + message), pos(p) {}

ExprPtr parse(const std::string& input) {
  ExprPtr e = Parser(Lexer(input).run()).parse_all();
  const Expr* classical = nullptr;
  const Expr* quantum = nullptr;
  find_contexts(*e, classical, quantum);
  if (classical && quantum) {
    const Expr* later =
        (classical->pos.line < quantum->pos.line ||
         (classical->pos.line == quantum->pos.line && classical->pos.column < quantum->pos.column))
            ? quantum
            : classical;
    throw ParseError(later->pos,
                     "expression mixes classical (" + symbol(*classical) + " at " +
                         where(classical->pos) + ") and quantum (" + symbol(*quantum) + " at " +
                         where(quantum->pos) + ") symbols",
                     {});
  }
  return e;
}

std::string to_string(const Expr& e) {
  auto arg = [&](std::size_t i) { return to_string(*e.args[i]); };
  switch (e.kind) {
    case Expr::Kind::Rational: return e.value.to_string();
    case Expr::Kind::Generator: return e.letter + std::to_string(e.index);
    case Expr::Kind::Tau: return "tau(" + std::to_string(e.index) + ")";
    case Expr::Kind::G: return "g(" + std::to_string(e.index) + ")";
    case Expr::Kind::MatrixLiteral: return e.matrix.to_string();
    case Expr::Kind::Add: return "(" + arg(0) + " + " + arg(1) + ")";
    case Expr::Kind::Sub: return "(" + arg(0) + " - " + arg(1) + ")";
    case Expr::Kind::Neg: return "(-" + arg(0) + ")";
    case Expr::Kind::Mul: return "(" + arg(0) + " * " + arg(1) + ")";
    case Expr::Kind::Pow: return "(" + arg(0) + "^" + std::to_string(e.power) + ")";
    case Expr::Kind::Comm: return "comm(" + arg(0) + ", " + arg(1) + ")";
    case Expr::Kind::D: return "d(" + arg(0) + ")";
    case Expr::Kind::L: return "L(" + std::to_string(e.index) + ", " + arg(0) + ")";
    case Expr::Kind::Iota: return "iota(" + std::to_string(e.index) + ", " + arg(0) + ")";
    case Expr::Kind::Curvature: return "C";
    case Expr::Kind::QuantumCurvature: return "QC";
    case Expr::Kind::Gamma: return "gamma";
    case Expr::Kind::Dirac: return "Dirac";
  }
  return "?";
}

// ---------------------------------------------------------------------------

namespace {

std::size_t checked_index(const Expr& e, std::size_t n) {
  if (e.index < 1 || e.index > n)
    throw EvalError(e.pos, "index " + std::to_string(e.index) + " out of range 1.." +
                               std::to_string(n));
  return e.index - 1;
}

[[noreturn]] void wrong_context(const Expr& e, const char* session) {
  throw EvalError(e.pos, "'" + symbol(e) + "' is not available in a " + session + " session");
}

template <class Alg, class El, class Ops>
El eval_generic(const Expr& e, const Alg& alg, const Ops& ops) {
  auto sub = [&](std::size_t i) { return eval_generic<Alg, El, Ops>(*e.args[i], alg, ops); };
  switch (e.kind) {
    case Expr::Kind::Rational:
      return alg.scalar(e.value);
    case Expr::Kind::Tau:
      return alg.tau(checked_index(e, alg.dim()));
    case Expr::Kind::MatrixLiteral:
      if (e.matrix.rows() != alg.dim_v() || e.matrix.cols() != alg.dim_v())
        throw EvalError(e.pos, "matrix literal is " + std::to_string(e.matrix.rows()) + "x" +
                                   std::to_string(e.matrix.cols()) + ", representation has dimension " +
                                   std::to_string(alg.dim_v()));
      return alg.matrix(e.matrix);
    case Expr::Kind::Add:
      return sub(0) + sub(1);
    case Expr::Kind::Sub:
      return sub(0) - sub(1);
    case Expr::Kind::Neg:
      return -sub(0);
    case Expr::Kind::Mul:
      return sub(0) * sub(1);
    case Expr::Kind::Pow: {
      El base = sub(0);
      El acc = alg.scalar(Scalar(1));
      for (unsigned i = 0; i < e.power; ++i) acc = acc * base;
      return acc;
    }
    default:
      return ops(e, alg, sub);
  }
}

}  // namespace

ClassicalElement evaluate(const Expr& e, const ClassicalAlgebra& alg) {
  auto ops = [](const Expr& e, const ClassicalAlgebra& alg, auto sub) -> ClassicalElement {
    switch (e.kind) {
      case Expr::Kind::Generator: {
        if (e.letter == 'u' || e.letter == 'x') wrong_context(e, "classical");
        std::size_t i = checked_index(e, alg.dim());
        return e.letter == 'v' ? alg.v(i) : alg.y(i);
      }
      case Expr::Kind::Comm: return cw_supercommutator(sub(0), sub(1));
      case Expr::Kind::D: return cw_differential(sub(0));
      case Expr::Kind::L: return cw_lie_derivative(checked_index(e, alg.dim()), sub(0));
      case Expr::Kind::Iota: return cw_contraction(checked_index(e, alg.dim()), sub(0));
      case Expr::Kind::Curvature: return cw_curvature(alg);
      default: wrong_context(e, "classical");
    }
  };
  return eval_generic<ClassicalAlgebra, ClassicalElement>(e, alg, ops);
}

QuantumElement evaluate(const Expr& e, const QuantumAlgebra& alg) {
  auto ops = [](const Expr& e, const QuantumAlgebra& alg, auto sub) -> QuantumElement {
    switch (e.kind) {
      case Expr::Kind::Generator: {
        if (e.letter == 'v' || e.letter == 'y') wrong_context(e, "quantum");
        std::size_t i = checked_index(e, alg.dim());
        return e.letter == 'u' ? alg.u(i) : alg.x(i);
      }
      case Expr::Kind::G: return alg.g(checked_index(e, alg.dim()));
      case Expr::Kind::Comm: return qw_supercommutator(sub(0), sub(1));
      case Expr::Kind::D: return qw_operator(QuantumOperator::Differential, 0, sub(0));
      case Expr::Kind::L:
        return qw_operator(QuantumOperator::Lie, checked_index(e, alg.dim()), sub(0));
      case Expr::Kind::Iota:
        return qw_operator(QuantumOperator::Contraction, checked_index(e, alg.dim()), sub(0));
      case Expr::Kind::QuantumCurvature: return alg.curvature();
      case Expr::Kind::Gamma: return alg.gamma();
      case Expr::Kind::Dirac: return alg.dirac();
      default: wrong_context(e, "quantum");
    }
  };
  return eval_generic<QuantumAlgebra, QuantumElement>(e, alg, ops);
}

}  // namespace weil
