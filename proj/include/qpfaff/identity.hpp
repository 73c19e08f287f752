#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qpfaff/expr.hpp"
#include "qpfaff/qseries.hpp"

namespace qpfaff {

// One declared symbol of an identity. Square roots in the classical
// statements are pre-rationalized: a declaration with square_of = "a" means
// this symbol is the (positive-branch) square root of the quantity
// conventionally called a, i.e. name^2 = a. Exactly one symbol is the base.
struct SymbolDecl {
  std::string name;
  bool base = false;
  std::string square_of;  // empty when the symbol is not a declared root
};

// A monomial equation lhs = rhs, solvable for exactly one symbol. The
// solved form (a monomial over the remaining symbols, possibly n-dependent)
// is derived at construction time.
struct Constraint {
  Monomial lhs;
  Monomial rhs;
  std::string solve_for;
  Monomial solution;  // derived: solve_for = solution
};

// Derives `solution` from lhs = rhs. Requires solve_for to occur with a
// constant exponent of +-1 across lhs/rhs. Throws UnsolvableConstraint.
Constraint make_constraint(Monomial lhs, Monomial rhs, std::string solve_for);

// Reference to one sequence of a family at an offset below the current
// index: member selects the series/closed-form pair (coupled families have
// two), offset is 0 for X_n or 1 for X_{n-1}.
struct SeqRef {
  int member = 0;
  int offset = 0;
  friend bool operator==(const SeqRef&, const SeqRef&) = default;
};

// A first-order, possibly parameter-shifting relation
//
//   minuend_n  -  subtrahend_{n-off}  =  multiplier(n) * shifted_{n-1} ∘ sigma
//
// constraining either the series sides (closed_side = false) or the
// closed-form sides of a family. Series- and closed-side relations come in
// pairs with identical multipliers and shifts; both copies are kept and the
// agreement is checked, not assumed.
struct RecurrenceSpec {
  std::string id;
  bool closed_side = false;
  SeqRef minuend;
  SeqRef subtrahend;
  SeqRef shifted;
  ExprPtr multiplier;
  std::map<std::string, Monomial> shift;  // sigma; identity on absent symbols
};

// One sum side / product side pair. `lhs`/`rhs` are the statement forms
// (constraint symbols such as e kept); `lhs_run`/`rhs_run` have every
// constraint-dependent symbol substituted out and are what sequence
// evaluation uses, so the dependents track n correctly under recurrences.
struct IdentityMember {
  std::string id;
  SeriesSpec lhs;
  ExprPtr rhs;
  SeriesSpec lhs_run;
  ExprPtr rhs_run;
};

// A catalog family: one member, or two members whose recurrences interleave.
struct IdentityRecord {
  std::string family_id;
  std::string name;
  std::string source;  // classical reference for the statement
  std::vector<SymbolDecl> symbols;
  std::vector<Constraint> constraints;
  std::vector<IdentityMember> members;
  std::vector<RecurrenceSpec> recurrences;
  bool singh_chain = false;  // certify via the quadratic-transformation chain

  const std::string& base_symbol() const;
  // Declared symbols minus constraint-solved ones, in declaration order.
  std::vector<std::string> free_symbols() const;
  bool is_dependent(const std::string& sym) const;
  int member_index(const std::string& id) const;  // -1 when absent
};

// Finalizes a hand-built or file-loaded record: checks symbol declarations,
// derives lhs_run/rhs_run, validates series shapes and terminating indices.
// Throws SpecFileError / UnboundSymbol / NotTerminating on violations.
void finalize_record(IdentityRecord& rec);

using Assignment = std::map<std::string, Rational>;

// Assigns the free symbols, then materializes every constraint-dependent
// symbol at index n. Validates the point (all values nonzero; base value
// with |numerator| != |denominator|). Throws UnsolvableConstraint,
// UnboundSymbol, SpecFileError.
Point materialize_point(const IdentityRecord& rec, const Assignment& frees, long n);

}  // namespace qpfaff
