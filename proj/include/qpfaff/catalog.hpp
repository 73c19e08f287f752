#pragma once

#include <string>
#include <vector>

#include "qpfaff/identity.hpp"

namespace qpfaff {

// The built-in identity families, constructed once. Entry ids are
// T1.1 .. T1.5, T1.6a, T1.6b, T1.7, T1.8, T1.9a, T1.9b; the two coupled
// families are stored as paired records under T1.6 and T1.9.
const std::vector<IdentityRecord>& catalog();

// One catalog entry: a family plus the selected member.
struct EntryRef {
  const IdentityRecord* family = nullptr;
  int member = 0;
  const IdentityMember& mem() const { return family->members[member]; }
};

// Lookup by member id ("T1.6a") or family id ("T1.6" resolves to member 0).
// Throws UnknownIdentity.
EntryRef get_identity(const std::string& id);

// Member ids in listing order (11 entries).
std::vector<std::string> catalog_ids();

// Recurrence lookup across the catalog ("2.1" .. "2.20").
struct RecurrenceRef {
  const IdentityRecord* family = nullptr;
  const RecurrenceSpec* rec = nullptr;
};
RecurrenceRef get_recurrence(const std::string& rec_id);
std::vector<std::string> recurrence_ids();

// Completes a partial assignment (all free symbols) into a Point at index n,
// solving each constraint for its designated symbol and re-checking the
// equation exactly. Throws UnsolvableConstraint.
Point resolve_constraints(const IdentityRecord& rec, const Assignment& partial, long n);

// Exact values of the two sides of a catalog entry at an admissible point.
// These evaluate the statement forms; p must assign every declared symbol
// (use resolve_constraints for entries with constraints).
Rational lhs_value(const EntryRef& entry, const Point& p);
Rational rhs_value(const EntryRef& entry, const Point& p);

}  // namespace qpfaff
