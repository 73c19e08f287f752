#include "qpfaff/pfaff.hpp"

#include <functional>
#include <stdexcept>

#include "qpfaff/errors.hpp"

namespace qpfaff {

Rational member_value(const IdentityRecord& fam, int member, bool closed_side,
                      const Assignment& frees, long n) {
  Point p = materialize_point(fam, frees, n);
  EvalContext ctx{p, fam.base_symbol()};
  const IdentityMember& mem = fam.members.at(member);
  return closed_side ? expr_eval(mem.rhs_run, ctx)
                     : phi_terminating_eval(mem.lhs_run, ctx);
}

Rational delta(const IdentityRecord& fam, int member, bool closed_side,
               const Assignment& frees, long n) {
  if (n < 1) throw Error("delta needs n >= 1");
  return member_value(fam, member, closed_side, frees, n) -
         member_value(fam, member, closed_side, frees, n - 1);
}

Assignment apply_shift(const IdentityRecord& fam,
                       const std::map<std::string, Monomial>& sigma,
                       const Assignment& frees, long n) {
  Point p = materialize_point(fam, frees, n);
  Assignment out = frees;
  for (const auto& [sym, m] : sigma) {
    Rational v = mono_eval(m, p);
    if (v == 0) throw ShiftInadmissible("shift sends '" + sym + "' to zero");
    out[sym] = v;
  }
  const std::string& base = fam.base_symbol();
  auto it = out.find(base);
  if (it != out.end() && abs(numerator(it->second)) == abs(denominator(it->second)))
    throw ShiftInadmissible("shift sends base '" + base + "' to " + to_string(it->second));
  return out;
}

Rational check_recurrence(const IdentityRecord& fam, const RecurrenceSpec& rec,
                          const Assignment& frees, long n) {
  if (n < 1) throw Error("check_recurrence needs n >= 1");
  Assignment shifted = apply_shift(fam, rec.shift, frees, n);
  Point p = materialize_point(fam, frees, n);
  Rational mult = expr_eval(rec.multiplier, {p, fam.base_symbol()});
  Rational lhs =
      member_value(fam, rec.minuend.member, rec.closed_side, frees, n - rec.minuend.offset) -
      member_value(fam, rec.subtrahend.member, rec.closed_side, frees, n - rec.subtrahend.offset);
  Rational rhs =
      mult * member_value(fam, rec.shifted.member, rec.closed_side, shifted, n - rec.shifted.offset);
  return lhs - rhs;
}

// --- the T1.5 reduction chain ----------------------------------------------
//
// Stage 1 is the base-q^2 series; Singh's quadratic transformation turns it
// into a base-q 4phi3, which collapses to a 3phi2 (one numerator parameter
// cancels a denominator one) and then sums by the q-Pfaff-Saalschutz formula
// after (a,b,c) -> (a,-c,-aq).

namespace {

using E = AffineExp;

Monomial mono(long c, std::initializer_list<std::pair<std::string_view, AffineExp>> exps = {}) {
  return Monomial(Rational(c), exps);
}

struct SinghChain {
  SeriesSpec stage1, stage2, stage3;
  ExprPtr stage4;
};

const SinghChain& singh_chain() {
  static const SinghChain chain = [] {
    SinghChain c;
    // 4phi3 [a, aq, c^2, q^{-2n}; a^2 q^2, c q^{-n}, c q^{-n+1}] (q^2, q^2)
    c.stage1.base_exponent = 2;
    c.stage1.num = {Monomial::symbol("a"), mono(1, {{"a", 1}, {"q", 1}}),
                    Monomial::symbol("c", 2), Monomial::symbol("q", {0, -2})};
    c.stage1.den = {mono(1, {{"a", 2}, {"q", 2}}), mono(1, {{"c", 1}, {"q", {0, -1}}}),
                    mono(1, {{"c", 1}, {"q", {1, -1}}})};
    c.stage1.arg = Monomial::symbol("q", 2);
    c.stage1.terminating_index = 3;

    // 4phi3 [a, aq, -c, q^{-n}; aq, -aq, c q^{-n}] (q, q)
    c.stage2.base_exponent = 1;
    c.stage2.num = {Monomial::symbol("a"), mono(1, {{"a", 1}, {"q", 1}}),
                    mono(-1, {{"c", 1}}), Monomial::symbol("q", {0, -1})};
    c.stage2.den = {mono(1, {{"a", 1}, {"q", 1}}), mono(-1, {{"a", 1}, {"q", 1}}),
                    mono(1, {{"c", 1}, {"q", {0, -1}}})};
    c.stage2.arg = Monomial::symbol("q");
    c.stage2.terminating_index = 3;

    // 3phi2 [a, -c, q^{-n}; -aq, c q^{-n}] (q, q)
    c.stage3.base_exponent = 1;
    c.stage3.num = {Monomial::symbol("a"), mono(-1, {{"c", 1}}),
                    Monomial::symbol("q", {0, -1})};
    c.stage3.den = {mono(-1, {{"a", 1}, {"q", 1}}), mono(1, {{"c", 1}, {"q", {0, -1}}})};
    c.stage3.arg = Monomial::symbol("q");
    c.stage3.terminating_index = 2;

    // (-q, aq/c; q)_n / (-aq, q/c; q)_n
    c.stage4 = ediv(emul({epoch(mono(-1, {{"q", 1}}), 1, {0, 1}),
                          epoch(mono(1, {{"a", 1}, {"q", 1}, {"c", -1}}), 1, {0, 1})}),
                    emul({epoch(mono(-1, {{"a", 1}, {"q", 1}}), 1, {0, 1}),
                          epoch(mono(1, {{"q", 1}, {"c", -1}}), 1, {0, 1})}));
    return c;
  }();
  return chain;
}

}  // namespace

std::array<Rational, 4> singh_stage_values(const Assignment& frees, long n) {
  Point p;
  p.n = n;
  p.values = frees;
  EvalContext ctx{p, "q"};
  const SinghChain& c = singh_chain();
  return {phi_terminating_eval(c.stage1, ctx), phi_terminating_eval(c.stage2, ctx),
          phi_terminating_eval(c.stage3, ctx), expr_eval(c.stage4, ctx)};
}

bool singh_reduction_check(const Point& p) {
  Assignment frees;
  for (const char* sym : {"a", "c", "q"}) {
    auto it = p.values.find(sym);
    if (it == p.values.end()) throw UnboundSymbol(sym);
    frees[sym] = it->second;
  }
  auto v = singh_stage_values(frees, p.n);
  return v[0] == v[1] && v[1] == v[2] && v[2] == v[3];
}

// --- reconstruction ---------------------------------------------------------

std::vector<std::vector<Rational>> reconstruct_by_recurrence(
    const IdentityRecord& fam, bool closed_side, const Assignment& frees,
    long n_max) {
  const std::size_t members = fam.members.size();
  std::vector<const RecurrenceSpec*> rels;
  for (const auto& r : fam.recurrences)
    if (r.closed_side == closed_side) rels.push_back(&r);
  if (rels.empty()) throw std::logic_error("family has no recurrences on this side");

  std::vector<std::vector<Rational>> values(members);
  for (auto& v : values) v.assign(static_cast<std::size_t>(n_max) + 1, Rational(0));
  for (std::size_t m = 0; m < members; ++m) values[m][0] = 1;

  for (long n = 1; n <= n_max; ++n) {
    Point p = materialize_point(fam, frees, n);
    EvalContext ctx{p, fam.base_symbol()};
    std::vector<bool> known(members, false);
    std::vector<const RecurrenceSpec*> pending = rels;
    while (!pending.empty()) {
      bool progress = false;
      for (auto it = pending.begin(); it != pending.end();) {
        const RecurrenceSpec& r = **it;
        const int x = r.minuend.member;
        if (known[x]) {
          it = pending.erase(it);  // redundant relation; residuals cover it
          continue;
        }
        const SeqRef& y = r.subtrahend;
        const bool y_ready = y.offset == 1 || known[y.member];
        if (!y_ready) {
          ++it;
          continue;
        }
        Rational y_val = values[y.member][n - y.offset];
        // the parameter-shifted sub-evaluation is computed directly, never
        // by descending the recurrence again
        Assignment shifted = apply_shift(fam, r.shift, frees, n);
        Rational z_val = member_value(fam, r.shifted.member, closed_side, shifted,
                                      n - r.shifted.offset);
        values[x][n] = y_val + expr_eval(r.multiplier, ctx) * z_val;
        known[x] = true;
        progress = true;
        it = pending.erase(it);
      }
      if (!progress)
        throw std::logic_error("recurrence system for " + fam.family_id +
                               " cannot be ordered");
    }
    for (std::size_t m = 0; m < members; ++m)
      if (!known[m])
        throw std::logic_error("member " + fam.members[m].id +
                               " has no resolving recurrence");
  }
  return values;
}

// --- certification ----------------------------------------------------------

namespace {

using Sink = std::function<void(CheckOutcome)>;

void emit(const Sink& sink, CheckOutcome co) {
  if (sink) sink(std::move(co));
}

// Runs every check certification performs at one sampled assignment. With a
// null sink this doubles as the sampler's admissibility screen: any pole or
// inadmissible shift throws, while check failures are reported, not thrown.
void run_point_checks(const IdentityRecord& fam, const Assignment& frees,
                      long n_max, const Sink& sink) {
  const std::string& base = fam.base_symbol();
  const std::size_t members = fam.members.size();

  // direct values [member][side][n]
  std::vector<std::array<std::vector<Rational>, 2>> direct(members);
  for (std::size_t m = 0; m < members; ++m)
    for (int side = 0; side < 2; ++side) {
      direct[m][side].reserve(static_cast<std::size_t>(n_max) + 1);
      for (long n = 0; n <= n_max; ++n)
        direct[m][side].push_back(member_value(fam, static_cast<int>(m), side == 1, frees, n));
    }

  for (std::size_t m = 0; m < members; ++m) {
    emit(sink, {"initial." + fam.members[m].id + ".sum", direct[m][0][0] == 1, {}, {}});
    emit(sink, {"initial." + fam.members[m].id + ".closed", direct[m][1][0] == 1, {}, {}});
  }

  for (const auto& rec : fam.recurrences) {
    const int side = rec.closed_side ? 1 : 0;
    for (long n = 1; n <= n_max; ++n) {
      Assignment shifted = apply_shift(fam, rec.shift, frees, n);
      Point p = materialize_point(fam, frees, n);
      Rational mult = expr_eval(rec.multiplier, {p, base});
      Rational z = member_value(fam, rec.shifted.member, rec.closed_side, shifted,
                                n - rec.shifted.offset);
      Rational residual = direct[rec.minuend.member][side][n - rec.minuend.offset] -
                          direct[rec.subtrahend.member][side][n - rec.subtrahend.offset] -
                          mult * z;
      emit(sink, {"rec." + rec.id + ".n=" + std::to_string(n), residual == 0,
                  to_string(residual), {}});
    }
  }

  for (std::size_t m = 0; m < members; ++m)
    for (long n = 0; n <= n_max; ++n)
      emit(sink, {"equal." + fam.members[m].id + ".n=" + std::to_string(n),
                  direct[m][0][n] == direct[m][1][n], {}, {}});

  if (fam.singh_chain) {
    for (long n = 0; n <= n_max; ++n) {
      auto v = singh_stage_values(frees, n);
      bool ok = v[0] == v[1] && v[1] == v[2] && v[2] == v[3];
      emit(sink, {"singh.n=" + std::to_string(n), ok, {},
                  std::vector<std::string>{to_string(v[0]), to_string(v[1]),
                                           to_string(v[2]), to_string(v[3])}});
    }
  }
}

}  // namespace

bool admissible_for_certification(const IdentityRecord& fam, const Assignment& frees,
                                  long n_max) {
  try {
    run_point_checks(fam, frees, n_max, nullptr);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::vector<Assignment> sampled_assignments(const IdentityRecord& fam,
                                            const SamplerConfig& cfg, int count,
                                            long n_max) {
  PointSampler sampler(
      fam.free_symbols(), fam.base_symbol(), cfg, fam.family_id,
      [&](const Assignment& a) { return admissible_for_certification(fam, a, n_max); });
  std::vector<Assignment> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(sampler.at(i));
  return out;
}

CertReport certify_identity(const std::string& id, long n_max, int samples,
                            const SamplerConfig& cfg) {
  return certify_record(*get_identity(id).family, id, n_max, samples, cfg);
}

CertReport certify_record(const IdentityRecord& fam, const std::string& report_id,
                          long n_max, int samples, const SamplerConfig& cfg) {
  CertReport rep;
  rep.id = report_id;
  rep.seed = cfg.seed;
  rep.n_max = n_max;
  rep.samples = samples;
  for (const auto& rec : fam.recurrences)
    if (rec.id == "2.10" || rec.id == "2.12" || rec.id == "2.18" || rec.id == "2.20")
      rep.notes.push_back("relation " + rec.id +
                          ": encoded without a derivation on record; certified "
                          "numerically at the sampled points");

  auto assignments = sampled_assignments(fam, cfg, samples, n_max);
  for (const auto& frees : assignments) {
    PointResult pr;
    pr.frees = frees;
    run_point_checks(fam, frees, n_max, [&](CheckOutcome co) {
      pr.pass = pr.pass && co.pass;
      pr.checks.push_back(std::move(co));
    });
    rep.pass = rep.pass && pr.pass;
    rep.points.push_back(std::move(pr));
  }

  // The declared roots are formal: flipping one (A -> -A with a = A^2 fixed)
  // picks the other branch. Whether the statements survive that is recorded
  // as information, never as part of the verdict.
  if (!assignments.empty()) {
    for (const auto& s : fam.symbols) {
      if (s.square_of.empty()) continue;
      Assignment flipped = assignments.front();
      flipped[s.name] = -flipped[s.name];
      std::string outcome;
      try {
        bool equal = true;
        for (long n = 0; n <= std::min<long>(n_max, 3); ++n)
          for (std::size_t m = 0; m < fam.members.size(); ++m)
            equal = equal && member_value(fam, static_cast<int>(m), false, flipped, n) ==
                                 member_value(fam, static_cast<int>(m), true, flipped, n);
        outcome = equal ? "both sides still agree" : "the sides differ";
      } catch (const Error&) {
        outcome = "flipped point is inadmissible";
      }
      rep.notes.push_back("branch flip " + s.name + " -> -" + s.name + " (" +
                          s.square_of + " = " + s.name + "^2 unchanged): " + outcome +
                          " at the first sampled point; informational, not part of "
                          "the verdict");
    }
  }
  return rep;
}

std::vector<std::pair<const RecurrenceSpec*, const RecurrenceSpec*>>
multiplier_pairs(const IdentityRecord& fam) {
  std::vector<std::pair<const RecurrenceSpec*, const RecurrenceSpec*>> out;
  for (const auto& r : fam.recurrences) {
    if (r.closed_side) continue;
    for (const auto& s : fam.recurrences)
      if (s.closed_side && s.minuend == r.minuend && s.subtrahend == r.subtrahend &&
          s.shifted == r.shifted)
        out.emplace_back(&r, &s);
  }
  return out;
}

}  // namespace qpfaff
