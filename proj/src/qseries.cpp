#include "qpfaff/qseries.hpp"

#include <sstream>

#include "qpfaff/errors.hpp"

namespace qpfaff {

Rational qpoch(const Rational& a, const Rational& q, long n) {
  if (n >= 0) {
    Rational r(1), qk(1);
    for (long k = 0; k < n; ++k) {
      r *= 1 - a * qk;
      qk *= q;
    }
    return r;
  }
  // (a;q)_{-m} = 1 / prod_{k=1}^{m} (1 - a q^{-k})
  if (q == 0) throw PoleError("negative-length q-shifted factorial at q = 0");
  long m = -n;
  Rational r(1);
  Rational qik(1), qi = 1 / q;
  for (long k = 1; k <= m; ++k) {
    qik *= qi;
    Rational f = 1 - a * qik;
    if (f == 0)
      throw PoleError("(a;q)_{-" + std::to_string(m) + "}: factor 1 - a*q^-" +
                      std::to_string(k) + " vanishes at a=" + to_string(a) +
                      ", q=" + to_string(q));
    r *= f;
  }
  return 1 / r;
}

long termination_bound(const SeriesSpec& spec, long n) {
  if (spec.terminating_index >= spec.num.size())
    throw NotTerminating("terminating index out of range");
  const Monomial& t = spec.num[spec.terminating_index];
  const long L = spec.base_exponent;
  if (t.coeff() != 1 || t.exponents().size() != 1 || L == 0)
    throw NotTerminating("terminating parameter is not a pure base power: " + t.str());
  const auto& [sym, e] = *t.exponents().begin();
  long val = e.at(n);
  if (val % L != 0 || val > 0)
    throw NotTerminating("terminating parameter " + t.str() + " has no cutoff at n=" +
                         std::to_string(n));
  return -val / L;
}

Rational phi_terminating_eval(const SeriesSpec& spec, const EvalContext& ctx) {
  if (spec.num.size() != spec.den.size() + 1)
    throw NotTerminating("series needs r+1 numerator and r denominator parameters");
  const long M = termination_bound(spec, ctx.point.n);

  auto base_it = ctx.point.values.find(ctx.base_symbol);
  if (base_it == ctx.point.values.end()) throw UnboundSymbol(ctx.base_symbol);
  const Rational base = pow_int(base_it->second, spec.base_exponent);

  std::vector<Rational> a, b;
  a.reserve(spec.num.size());
  b.reserve(spec.den.size());
  for (const auto& m : spec.num) a.push_back(mono_eval(m, ctx.point));
  for (const auto& m : spec.den) b.push_back(mono_eval(m, ctx.point));
  const Rational z = mono_eval(spec.arg, ctx.point);

  // term_{j+1} = term_j * prod(1 - a_i base^j) / [(1 - base^{j+1}) prod(1 - b_i base^j)] * z
  Rational total(1), term(1), bpow(1);
  for (long j = 0; j < M; ++j) {
    for (const auto& ai : a) term *= 1 - ai * bpow;
    Rational den = 1 - base * bpow;
    for (std::size_t i = 0; i < b.size(); ++i) {
      Rational f = 1 - b[i] * bpow;
      if (f == 0)
        throw PoleError("series denominator parameter " + spec.den[i].str() +
                        " vanishes at j=" + std::to_string(j + 1) +
                        " (n=" + std::to_string(ctx.point.n) + ")");
      den *= f;
    }
    if (den == 0)
      throw PoleError("series base factor vanishes at j=" + std::to_string(j + 1));
    term = term / den * z;
    bpow *= base;
    total += term;
  }
  return total;
}

ClassificationFlags classify(const SeriesSpec& spec, const std::string& base_symbol) {
  ClassificationFlags f;
  const Monomial base = Monomial::symbol(base_symbol, AffineExp(spec.base_exponent));

  // terminating: the declared parameter is base^{-m(n)} with m(n) >= 0 for all n
  if (spec.terminating_index < spec.num.size()) {
    const Monomial& t = spec.num[spec.terminating_index];
    if (t.coeff() == 1 && t.exponents().size() == 1) {
      const auto& [sym, e] = *t.exponents().begin();
      const long L = spec.base_exponent;
      f.terminating = sym == base_symbol && L != 0 && e.constant % L == 0 &&
                      e.n_coeff % L == 0 && e.constant <= 0 && e.n_coeff <= 0 &&
                      !e.is_zero();
    }
  }

  if (spec.num.size() == spec.den.size() + 1) {
    Monomial nprod = base * spec.num[0];
    for (std::size_t i = 1; i < spec.num.size(); ++i) nprod = nprod * spec.num[i];
    Monomial dprod;
    for (const auto& d : spec.den) dprod = dprod * d;
    f.balanced = dprod == nprod;

    if (!spec.den.empty()) {
      const Monomial target = base * spec.num[0];
      f.well_poised = true;
      for (std::size_t i = 0; i < spec.den.size(); ++i)
        if (!(spec.num[i + 1] * spec.den[i] == target)) {
          f.well_poised = false;
          break;
        }
      if (f.well_poised && spec.num.size() >= 3) {
        if (auto root = mono_sqrt(spec.num[0]))
          f.very_well_poised = spec.num[1] == base * *root &&
                               spec.num[2] == spec.num[1].negated();
      }
    }
  }
  return f;
}

std::string series_shape(const SeriesSpec& spec) {
  std::ostringstream os;
  os << spec.num.size() << "phi" << spec.den.size();
  return os.str();
}

}  // namespace qpfaff
