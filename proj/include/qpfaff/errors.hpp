#pragma once

#include <stdexcept>
#include <string>

namespace qpfaff {

// Base class for every engine error.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A monomial references a symbol the point does not assign.
struct UnboundSymbol : Error {
  std::string symbol;
  explicit UnboundSymbol(const std::string& sym)
      : Error("unbound symbol '" + sym + "'"), symbol(sym) {}
};

// A Div denominator (or a negative power of a zero value) evaluated to zero.
struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& what_) : Error(what_) {}
};

// A Poch expression node has negative length at the current n.
struct NegativePochLength : Error {
  explicit NegativePochLength(const std::string& what_) : Error(what_) {}
};

// A q-shifted factorial or series denominator factor vanished.
struct PoleError : Error {
  explicit PoleError(const std::string& what_) : Error(what_) {}
};

// A series spec has no valid terminating numerator parameter.
struct NotTerminating : Error {
  explicit NotTerminating(const std::string& what_) : Error(what_) {}
};

struct UnknownIdentity : Error {
  explicit UnknownIdentity(const std::string& id)
      : Error("unknown identity '" + id + "'") {}
};

// A constraint cannot be solved for its designated symbol, or the forced
// value is zero.
struct UnsolvableConstraint : Error {
  explicit UnsolvableConstraint(const std::string& what_) : Error(what_) {}
};

// A recurrence shift maps a point outside the admissible set.
struct ShiftInadmissible : Error {
  explicit ShiftInadmissible(const std::string& what_) : Error(what_) {}
};

// The sampler's retry budget ran out before finding an admissible point.
struct SamplingExhausted : Error {
  explicit SamplingExhausted(const std::string& what_) : Error(what_) {}
};

// Spec-file schema violation, with a JSON-pointer-ish location.
struct SpecFileError : Error {
  explicit SpecFileError(const std::string& what_) : Error(what_) {}
};

}  // namespace qpfaff
