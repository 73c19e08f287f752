#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qpfaff/expr.hpp"
#include "qpfaff/monomial.hpp"

namespace qpfaff {

// q-shifted factorial (a;q)_n = prod_{k=0}^{n-1} (1 - a q^k), extended to
// negative n by (a;q)_{-m} = 1 / (a q^{-m}; q)_m. Throws PoleError when a
// reciprocal factor vanishes.
Rational qpoch(const Rational& a, const Rational& q, long n);

// A terminating basic hypergeometric series in base tau^base_exponent:
//
//   sum_{j>=0} [num_0,...,num_r; b]_j / ([b; b]_j [den_1,...,den_r; b]_j) arg^j
//
// where b = tau^base_exponent and the parameter at terminating_index is a
// pure power of tau that cuts the sum off at j = M.
struct SeriesSpec {
  int base_exponent = 1;
  std::vector<Monomial> num;
  std::vector<Monomial> den;
  Monomial arg;
  std::size_t terminating_index = 0;
};

struct ClassificationFlags {
  bool terminating = false;
  bool balanced = false;
  bool well_poised = false;
  bool very_well_poised = false;
};

// Upper summation limit M at index n. Throws NotTerminating when the
// declared parameter is not of the required form or M would be negative.
long termination_bound(const SeriesSpec& spec, long n);

// Exact value of the terminating sum. Throws PoleError identifying the
// first vanishing denominator factor, NotTerminating, UnboundSymbol.
Rational phi_terminating_eval(const SeriesSpec& spec, const EvalContext& ctx);

// Formal flags, computed as monomial identities on the parameter lists
// (point-independent): balanced means den-product = base * num-product;
// well-poised means base * num[0] = num[i+1] * den[i] for every pair (by
// convention false when there are no pairs); very-well-poised additionally
// requires num[1] = base * sqrt(num[0]) and num[2] = -num[1].
ClassificationFlags classify(const SeriesSpec& spec, const std::string& base_symbol);

// Series shape label such as "4phi3" (r+1 numerator over r denominator
// parameters, not counting the implicit (b;b)_j).
std::string series_shape(const SeriesSpec& spec);

}  // namespace qpfaff
