#pragma once

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "qpfaff/rational.hpp"

namespace qpfaff {

// An exponent affine in the summation index n: const + n_coeff * n.
struct AffineExp {
  long constant = 0;
  long n_coeff = 0;

  AffineExp() = default;
  AffineExp(long c) : constant(c) {}  // NOLINT: implicit for exponent literals
  AffineExp(long c, long n) : constant(c), n_coeff(n) {}

  long at(long n) const { return constant + n_coeff * n; }
  bool is_zero() const { return constant == 0 && n_coeff == 0; }

  friend AffineExp operator+(AffineExp a, AffineExp b) {
    return {a.constant + b.constant, a.n_coeff + b.n_coeff};
  }
  friend AffineExp operator-(AffineExp a, AffineExp b) {
    return {a.constant - b.constant, a.n_coeff - b.n_coeff};
  }
  friend AffineExp operator*(AffineExp a, long k) {
    return {a.constant * k, a.n_coeff * k};
  }
  friend bool operator==(AffineExp a, AffineExp b) {
    return a.constant == b.constant && a.n_coeff == b.n_coeff;
  }
};

// A nonzero rational coefficient times a product of symbols raised to
// n-affine exponents. The zero quantity is deliberately not representable.
class Monomial {
 public:
  using ExpMap = std::map<std::string, AffineExp>;

  // Defaults to the identity monomial 1.
  Monomial() : coeff_(1) {}
  explicit Monomial(Rational coeff);
  Monomial(Rational coeff, std::initializer_list<std::pair<std::string_view, AffineExp>> exps);

  static Monomial symbol(std::string_view name, AffineExp e = AffineExp(1));

  const Rational& coeff() const { return coeff_; }
  const ExpMap& exponents() const { return exps_; }
  std::optional<AffineExp> exponent_of(std::string_view sym) const;
  bool is_constant() const { return exps_.empty(); }

  Monomial operator*(const Monomial& rhs) const;
  Monomial operator/(const Monomial& rhs) const;
  Monomial pow(long e) const;
  Monomial negated() const;
  bool operator==(const Monomial& rhs) const = default;

  std::string str() const;

 private:
  Rational coeff_;
  ExpMap exps_;  // no entry has a zero exponent

  void insert(std::string_view sym, AffineExp e);
};

// Evaluation context: one value per declared symbol, plus the index n.
struct Point {
  std::map<std::string, Rational> values;
  long n = 0;
};

// coeff * prod value(s)^(exp(s) at n), exactly.
// Throws UnboundSymbol / DivisionByZero (zero base, negative exponent).
Rational mono_eval(const Monomial& m, const Point& p);

// Positive-branch formal square root: defined when the coefficient is a
// square of a rational and every exponent is even. Used by the
// very-well-poised classification test.
std::optional<Monomial> mono_sqrt(const Monomial& m);

// Replaces `sym` by `replacement` inside m. Throws std::domain_error if the
// result would need exponents non-affine in n (sym raised to an n-dependent
// power of an n-dependent replacement).
Monomial mono_substitute(const Monomial& m, const std::string& sym,
                         const Monomial& replacement);

}  // namespace qpfaff
