#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "qpfaff/monomial.hpp"

namespace qpfaff {

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Closed-form expression tree: monomials, sums, products, quotients, and
// finite q-shifted factorials with n-affine length. Immutable after build.
class Expr {
 public:
  struct Mono {
    Monomial m;
  };
  struct Add {
    std::vector<ExprPtr> terms;
  };
  struct Mul {
    std::vector<ExprPtr> factors;
  };
  struct Div {
    ExprPtr num;
    ExprPtr den;
  };
  // (arg; tau^base_exponent)_length with length >= 0 at evaluation time.
  struct Poch {
    Monomial arg;
    int base_exponent = 1;
    AffineExp length;
  };
  using Node = std::variant<Mono, Add, Mul, Div, Poch>;

  explicit Expr(Node node) : node_(std::move(node)) {}
  const Node& node() const { return node_; }

 private:
  Node node_;
};

ExprPtr emono(Monomial m);
ExprPtr emono(Rational constant);
ExprPtr eadd(std::vector<ExprPtr> terms);
ExprPtr emul(std::vector<ExprPtr> factors);
ExprPtr ediv(ExprPtr num, ExprPtr den);
ExprPtr epoch(Monomial arg, int base_exponent, AffineExp length);

// 1 - m and 1 + m, the ubiquitous linear factors.
ExprPtr one_minus(const Monomial& m);
ExprPtr one_plus(const Monomial& m);

// Evaluation needs to know which symbol carries the series base.
struct EvalContext {
  const Point& point;
  std::string base_symbol;
};

// Exact value of the tree. Throws DivisionByZero (with the offending subtree
// rendered), NegativePochLength, UnboundSymbol.
Rational expr_eval(const ExprPtr& e, const EvalContext& ctx);

// Substitutes a symbol by a monomial in every monomial of the tree.
ExprPtr expr_substitute(const ExprPtr& e, const std::string& sym,
                        const Monomial& replacement);

std::string to_string(const ExprPtr& e);

}  // namespace qpfaff
