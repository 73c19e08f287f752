#include "qpfaff/expr.hpp"

#include <sstream>

#include "qpfaff/errors.hpp"
#include "qpfaff/qseries.hpp"

namespace qpfaff {

ExprPtr emono(Monomial m) { return std::make_shared<Expr>(Expr::Mono{std::move(m)}); }
ExprPtr emono(Rational constant) { return emono(Monomial(std::move(constant))); }
ExprPtr eadd(std::vector<ExprPtr> terms) {
  return std::make_shared<Expr>(Expr::Add{std::move(terms)});
}
ExprPtr emul(std::vector<ExprPtr> factors) {
  return std::make_shared<Expr>(Expr::Mul{std::move(factors)});
}
ExprPtr ediv(ExprPtr num, ExprPtr den) {
  return std::make_shared<Expr>(Expr::Div{std::move(num), std::move(den)});
}
ExprPtr epoch(Monomial arg, int base_exponent, AffineExp length) {
  return std::make_shared<Expr>(Expr::Poch{std::move(arg), base_exponent, length});
}
ExprPtr one_minus(const Monomial& m) { return eadd({emono(Rational(1)), emono(m.negated())}); }
ExprPtr one_plus(const Monomial& m) { return eadd({emono(Rational(1)), emono(m)}); }

namespace {

struct Evaluator {
  const EvalContext& ctx;
  const ExprPtr& self;

  Rational operator()(const Expr::Mono& m) const { return mono_eval(m.m, ctx.point); }

  Rational operator()(const Expr::Add& a) const {
    Rational r(0);
    for (const auto& t : a.terms) r += expr_eval(t, ctx);
    return r;
  }

  Rational operator()(const Expr::Mul& m) const {
    Rational r(1);
    for (const auto& f : m.factors) {
      r *= expr_eval(f, ctx);
      if (r == 0) return r;  // absorbing; skip needless big products
    }
    return r;
  }

  Rational operator()(const Expr::Div& d) const {
    Rational den = expr_eval(d.den, ctx);
    if (den == 0) throw DivisionByZero("zero denominator in " + to_string(self));
    return expr_eval(d.num, ctx) / den;
  }

  Rational operator()(const Expr::Poch& p) const {
    long len = p.length.at(ctx.point.n);
    if (len < 0)
      throw NegativePochLength("length " + std::to_string(len) + " in " + to_string(self));
    auto it = ctx.point.values.find(ctx.base_symbol);
    if (it == ctx.point.values.end()) throw UnboundSymbol(ctx.base_symbol);
    return qpoch(mono_eval(p.arg, ctx.point), pow_int(it->second, p.base_exponent), len);
  }
};

struct Printer {
  std::ostringstream& os;

  void print(const ExprPtr& e) { std::visit(*this, e->node()); }

  void operator()(const Expr::Mono& m) { os << m.m.str(); }
  void operator()(const Expr::Add& a) {
    os << '(';
    for (std::size_t i = 0; i < a.terms.size(); ++i) {
      if (i) os << " + ";
      print(a.terms[i]);
    }
    os << ')';
  }
  void operator()(const Expr::Mul& m) {
    for (std::size_t i = 0; i < m.factors.size(); ++i) {
      if (i) os << '*';
      print(m.factors[i]);
    }
  }
  void operator()(const Expr::Div& d) {
    os << '(';
    print(d.num);
    os << ")/(";
    print(d.den);
    os << ')';
  }
  void operator()(const Expr::Poch& p) {
    os << "poch(" << p.arg.str() << "; L=" << p.base_exponent << ")_{";
    if (p.length.n_coeff != 0) os << p.length.n_coeff << "n+";
    os << p.length.constant << '}';
  }
};

}  // namespace

Rational expr_eval(const ExprPtr& e, const EvalContext& ctx) {
  return std::visit(Evaluator{ctx, e}, e->node());
}

ExprPtr expr_substitute(const ExprPtr& e, const std::string& sym,
                        const Monomial& replacement) {
  struct Sub {
    const std::string& sym;
    const Monomial& rep;
    ExprPtr operator()(const Expr::Mono& m) const {
      return emono(mono_substitute(m.m, sym, rep));
    }
    ExprPtr operator()(const Expr::Add& a) const {
      std::vector<ExprPtr> out;
      out.reserve(a.terms.size());
      for (const auto& t : a.terms) out.push_back(expr_substitute(t, sym, rep));
      return eadd(std::move(out));
    }
    ExprPtr operator()(const Expr::Mul& m) const {
      std::vector<ExprPtr> out;
      out.reserve(m.factors.size());
      for (const auto& f : m.factors) out.push_back(expr_substitute(f, sym, rep));
      return emul(std::move(out));
    }
    ExprPtr operator()(const Expr::Div& d) const {
      return ediv(expr_substitute(d.num, sym, rep), expr_substitute(d.den, sym, rep));
    }
    ExprPtr operator()(const Expr::Poch& p) const {
      return epoch(mono_substitute(p.arg, sym, rep), p.base_exponent, p.length);
    }
  };
  return std::visit(Sub{sym, replacement}, e->node());
}

std::string to_string(const ExprPtr& e) {
  std::ostringstream os;
  Printer pr{os};
  pr.print(e);
  return os.str();
}

}  // namespace qpfaff
