#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "weil/classical.hpp"
#include "weil/quantum.hpp"

namespace weil {

// Expression language.
//
//   expr    := term (('+' | '-') term)*
//   term    := factor (('*' | '⊗') factor)*
//   factor  := '-' factor | power
//   power   := atom ('^' INTEGER)?
//   atom    := rational | generator | matrix | call | constant | '(' expr ')'
//   rational:= INTEGER ('/' INTEGER)?
//   generator := v<i> | y<i> | u<i> | x<i> | tau '(' i ')' | g '(' i ')'
//   matrix  := '[' row (',' row)* ']',  row := '[' entry (',' entry)* ']'
//   entry   := '-'? rational
//   call    := d '(' expr ')' | L '(' i ',' expr ')' | iota '(' i ',' expr ')'
//            | comm '(' expr ',' expr ')'
//   constant:= C | QC | gamma | Dirac
//
// '−' (U+2212) is accepted for '-'. Indices are 1-based; range checks happen
// at evaluation. v, y and C are classical; u, x, g, QC, gamma and Dirac are
// quantum.

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

class ParseError : public Error {
 public:
  ParseError(SourcePos pos, std::string message, std::set<std::string> expected);
  SourcePos pos;
  std::string detail;
  std::set<std::string> expected;
};

class EvalError : public Error {
 public:
  EvalError(SourcePos pos, const std::string& message);
  SourcePos pos;
};

struct Expr {
  enum class Kind {
    Rational,
    Generator,  // letter in {v, y, u, x}
    Tau,
    G,
    MatrixLiteral,
    Add,
    Sub,
    Neg,
    Mul,
    Pow,
    Comm,
    D,
    L,
    Iota,
    Curvature,
    QuantumCurvature,
    Gamma,
    Dirac,
  };

  Kind kind;
  SourcePos pos;
  Scalar value;           // Rational
  char letter = 0;        // Generator
  std::size_t index = 0;  // Generator, Tau, G, L, Iota (1-based as written)
  unsigned power = 0;     // Pow
  Matrix matrix;          // MatrixLiteral
  std::vector<std::shared_ptr<const Expr>> args;
};

using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr parse(const std::string& input);

/// Structural rendering (for debugging and tests); not the element form.
std::string to_string(const Expr& e);

ClassicalElement evaluate(const Expr& e, const ClassicalAlgebra& alg);
QuantumElement evaluate(const Expr& e, const QuantumAlgebra& alg);

}  // namespace weil
