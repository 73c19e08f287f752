#include "qpfaff/monomial.hpp"

#include <sstream>
#include <stdexcept>

#include "qpfaff/errors.hpp"

namespace qpfaff {

Monomial::Monomial(Rational coeff) : coeff_(std::move(coeff)) {
  if (coeff_ == 0) throw std::invalid_argument("monomial with zero coefficient");
}

Monomial::Monomial(Rational coeff,
                   std::initializer_list<std::pair<std::string_view, AffineExp>> exps)
    : Monomial(std::move(coeff)) {
  for (const auto& [sym, e] : exps) insert(sym, e);
}

Monomial Monomial::symbol(std::string_view name, AffineExp e) {
  Monomial m;
  m.insert(name, e);
  return m;
}

void Monomial::insert(std::string_view sym, AffineExp e) {
  if (e.is_zero()) return;
  auto [it, fresh] = exps_.emplace(std::string(sym), e);
  if (!fresh) {
    it->second = it->second + e;
    if (it->second.is_zero()) exps_.erase(it);
  }
}

std::optional<AffineExp> Monomial::exponent_of(std::string_view sym) const {
  auto it = exps_.find(std::string(sym));
  if (it == exps_.end()) return std::nullopt;
  return it->second;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  Monomial r;
  r.coeff_ = coeff_ * rhs.coeff_;
  r.exps_ = exps_;
  for (const auto& [sym, e] : rhs.exps_) r.insert(sym, e);
  return r;
}

Monomial Monomial::operator/(const Monomial& rhs) const { return *this * rhs.pow(-1); }

Monomial Monomial::pow(long e) const {
  Monomial r;
  r.coeff_ = pow_int(coeff_, e);
  if (e != 0)
    for (const auto& [sym, ae] : exps_) r.exps_.emplace(sym, ae * e);
  return r;
}

Monomial Monomial::negated() const {
  Monomial r = *this;
  r.coeff_ = -r.coeff_;
  return r;
}

std::string Monomial::str() const {
  std::ostringstream os;
  bool lead = true;
  if (coeff_ == -1 && !exps_.empty()) {
    os << '-';
  } else if (coeff_ != 1 || exps_.empty()) {
    os << to_string(coeff_);
    lead = false;
  }
  for (const auto& [sym, e] : exps_) {
    if (!lead) os << '*';
    lead = false;
    os << sym;
    if (e == AffineExp(1)) continue;
    os << '^';
    if (e.n_coeff == 0) {
      os << e.constant;
      continue;
    }
    os << '(';
    if (e.n_coeff == -1)
      os << "-n";
    else if (e.n_coeff == 1)
      os << 'n';
    else
      os << e.n_coeff << 'n';
    if (e.constant > 0)
      os << '+' << e.constant;
    else if (e.constant < 0)
      os << e.constant;
    os << ')';
  }
  return os.str();
}

Rational mono_eval(const Monomial& m, const Point& p) {
  Rational r = m.coeff();
  for (const auto& [sym, e] : m.exponents()) {
    auto it = p.values.find(sym);
    if (it == p.values.end()) throw UnboundSymbol(sym);
    long k = e.at(p.n);
    if (it->second == 0) {
      if (k < 0) throw DivisionByZero("zero value for '" + sym + "' raised to " + std::to_string(k));
      if (k > 0) return Rational(0);
      continue;
    }
    r *= pow_int(it->second, k);
  }
  return r;
}

std::optional<Monomial> mono_sqrt(const Monomial& m) {
  if (m.coeff() < 0) return std::nullopt;
  Integer num = numerator(m.coeff()), den = denominator(m.coeff());
  Integer sn = sqrt(num), sd = sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  Monomial r(make_rational(sn, sd));
  for (const auto& [sym, e] : m.exponents()) {
    if (e.constant % 2 != 0 || e.n_coeff % 2 != 0) return std::nullopt;
    r = r * Monomial::symbol(sym, AffineExp{e.constant / 2, e.n_coeff / 2});
  }
  return r;
}

Monomial mono_substitute(const Monomial& m, const std::string& sym,
                         const Monomial& replacement) {
  auto e = m.exponent_of(sym);
  if (!e) return m;
  Monomial rest(m.coeff());
  for (const auto& [s, ae] : m.exponents())
    if (s != sym) rest = rest * Monomial::symbol(s, ae);
  if (e->n_coeff != 0) {
    // replacement^(cn*n) only stays affine when the replacement is n-free
    for (const auto& [s, ae] : replacement.exponents())
      if (ae.n_coeff != 0)
        throw std::domain_error("substitution of '" + sym +
                                "' would produce exponents quadratic in n");
    Monomial n_part(Rational(1));
    if (replacement.coeff() != 1)
      throw std::domain_error("substitution of '" + sym +
                              "' under an n-dependent exponent needs coefficient 1");
    for (const auto& [s, ae] : replacement.exponents())
      n_part = n_part * Monomial::symbol(s, AffineExp{0, ae.constant * e->n_coeff});
    rest = rest * n_part;
  }
  return rest * replacement.pow(e->constant);
}

}  // namespace qpfaff
