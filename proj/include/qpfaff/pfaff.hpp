#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qpfaff/catalog.hpp"
#include "qpfaff/identity.hpp"
#include "qpfaff/sampler.hpp"

namespace qpfaff {

// Value of one family sequence at (free assignment, n): the series side by
// direct terminating summation, the closed side by expression evaluation.
// Constraint-dependent parameters are rematerialized at each n, so the
// sequences are functions of the free parameters alone.
Rational member_value(const IdentityRecord& fam, int member, bool closed_side,
                      const Assignment& frees, long n);

// value at n minus value at n-1 (n >= 1).
Rational delta(const IdentityRecord& fam, int member, bool closed_side,
               const Assignment& frees, long n);

// Applies sigma to the free symbols; throws ShiftInadmissible if a shifted
// value is zero or the base value loses |num| != |den|.
Assignment apply_shift(const IdentityRecord& fam,
                       const std::map<std::string, Monomial>& sigma,
                       const Assignment& frees, long n);

// Residual of one relation at (frees, n >= 1): exactly zero iff the
// recurrence holds there.
Rational check_recurrence(const IdentityRecord& fam, const RecurrenceSpec& rec,
                          const Assignment& frees, long n);

// The four displayed stages of the base-change reduction for T1.5: the
// base-q^2 series, its base-q transform, the reduced 3phi2, and the closed
// form. All four must be exactly equal at an admissible point.
std::array<Rational, 4> singh_stage_values(const Assignment& frees, long n);
bool singh_reduction_check(const Point& p);

// Rebuilds each sequence of one side from value 1 at n = 0 using only the
// family's recurrences, with the parameter-shifted sub-evaluations computed
// by direct summation (never by recursive descent). Returns
// values[member][n] for n = 0..n_max. Throws std::logic_error if the
// relations cannot be ordered into a computable system.
std::vector<std::vector<Rational>> reconstruct_by_recurrence(
    const IdentityRecord& fam, bool closed_side, const Assignment& frees,
    long n_max);

// --- certification -------------------------------------------------------

struct CheckOutcome {
  std::string name;
  bool pass = false;
  std::optional<std::string> residual;            // exact, for recurrence checks
  std::optional<std::vector<std::string>> stages; // chain stage values
};

struct PointResult {
  Assignment frees;
  std::vector<CheckOutcome> checks;
  bool pass = true;
};

struct CertReport {
  std::string id;
  std::uint64_t seed = 0;
  long n_max = 0;
  int samples = 0;
  std::vector<PointResult> points;
  bool pass = true;
  std::vector<std::string> notes;
};

// True when every evaluation certification would perform at (frees, n <=
// n_max) completes without a pole; used by the sampler screen.
bool admissible_for_certification(const IdentityRecord& fam,
                                  const Assignment& frees, long n_max);

// Pfaff-method certification of one entry: per sampled point checks
// (i) every member sequence equals 1 at n = 0, (ii) every recurrence residual
// is exactly zero for 1 <= n <= n_max, (iii) the two sides agree exactly for
// 0 <= n <= n_max, and for the chain-certified entry the stage equalities.
// Throws SamplingExhausted; the verdict aggregates all checks.
CertReport certify_identity(const std::string& id, long n_max, int samples,
                            const SamplerConfig& cfg);
CertReport certify_record(const IdentityRecord& fam, const std::string& report_id,
                          long n_max, int samples, const SamplerConfig& cfg);

// Sampled admissible assignments for an identity (the stream certification
// uses), exposed for the recurrence/multiplier/reconstruction suites.
std::vector<Assignment> sampled_assignments(const IdentityRecord& fam,
                                            const SamplerConfig& cfg,
                                            int count, long n_max);

// Series-side/closed-side relations with identical structure, whose
// multipliers the source states are equal ("2.15"/"2.16", ...).
std::vector<std::pair<const RecurrenceSpec*, const RecurrenceSpec*>>
multiplier_pairs(const IdentityRecord& fam);

}  // namespace qpfaff
