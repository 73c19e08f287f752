#include "qpfaff/identity.hpp"

#include <algorithm>
#include <set>

#include "qpfaff/errors.hpp"

namespace qpfaff {

Constraint make_constraint(Monomial lhs, Monomial rhs, std::string solve_for) {
  // lhs = rhs  <=>  rest * s^eps = 1 with s the solved symbol
  Monomial ratio = lhs / rhs;
  auto e = ratio.exponent_of(solve_for);
  if (!e || e->n_coeff != 0 || (e->constant != 1 && e->constant != -1))
    throw UnsolvableConstraint("constraint not solvable for '" + solve_for +
                               "': " + lhs.str() + " = " + rhs.str());
  Monomial rest(ratio.coeff());
  for (const auto& [sym, ae] : ratio.exponents())
    if (sym != solve_for) rest = rest * Monomial::symbol(sym, ae);
  Monomial solution = rest.pow(-e->constant);
  return Constraint{std::move(lhs), std::move(rhs), std::move(solve_for),
                    std::move(solution)};
}

const std::string& IdentityRecord::base_symbol() const {
  for (const auto& s : symbols)
    if (s.base) return s.name;
  throw SpecFileError("record '" + family_id + "' declares no base symbol");
}

bool IdentityRecord::is_dependent(const std::string& sym) const {
  return std::any_of(constraints.begin(), constraints.end(),
                     [&](const Constraint& c) { return c.solve_for == sym; });
}

std::vector<std::string> IdentityRecord::free_symbols() const {
  std::vector<std::string> out;
  for (const auto& s : symbols)
    if (!is_dependent(s.name)) out.push_back(s.name);
  return out;
}

int IdentityRecord::member_index(const std::string& id) const {
  for (std::size_t i = 0; i < members.size(); ++i)
    if (members[i].id == id) return static_cast<int>(i);
  return -1;
}

namespace {

void collect_symbols(const Monomial& m, std::set<std::string>& out) {
  for (const auto& [sym, e] : m.exponents()) out.insert(sym);
}

void collect_symbols(const ExprPtr& e, std::set<std::string>& out) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Expr::Mono>) {
          collect_symbols(node.m, out);
        } else if constexpr (std::is_same_v<T, Expr::Add>) {
          for (const auto& t : node.terms) collect_symbols(t, out);
        } else if constexpr (std::is_same_v<T, Expr::Mul>) {
          for (const auto& f : node.factors) collect_symbols(f, out);
        } else if constexpr (std::is_same_v<T, Expr::Div>) {
          collect_symbols(node.num, out);
          collect_symbols(node.den, out);
        } else if constexpr (std::is_same_v<T, Expr::Poch>) {
          collect_symbols(node.arg, out);
        }
      },
      e->node());
}

SeriesSpec eliminate(SeriesSpec s, const Constraint& c) {
  for (auto& m : s.num) m = mono_substitute(m, c.solve_for, c.solution);
  for (auto& m : s.den) m = mono_substitute(m, c.solve_for, c.solution);
  s.arg = mono_substitute(s.arg, c.solve_for, c.solution);
  return s;
}

}  // namespace

void finalize_record(IdentityRecord& rec) {
  // symbol table sanity
  std::set<std::string> declared;
  int bases = 0;
  for (const auto& s : rec.symbols) {
    if (!declared.insert(s.name).second)
      throw SpecFileError("symbol '" + s.name + "' declared twice in " + rec.family_id);
    if (s.base) ++bases;
  }
  if (bases != 1)
    throw SpecFileError("record '" + rec.family_id + "' must declare exactly one base symbol");
  if (rec.members.empty() || rec.members.size() > 2)
    throw SpecFileError("record '" + rec.family_id + "' needs one or two members");

  auto check_known = [&](const std::set<std::string>& used, const std::string& where) {
    for (const auto& sym : used)
      if (!declared.count(sym))
        throw UnboundSymbol(sym + " (in " + where + " of " + rec.family_id + ")");
  };

  for (const auto& c : rec.constraints) {
    std::set<std::string> used;
    collect_symbols(c.lhs, used);
    collect_symbols(c.rhs, used);
    collect_symbols(c.solution, used);
    used.insert(c.solve_for);
    check_known(used, "constraint");
  }

  for (auto& mem : rec.members) {
    std::set<std::string> used;
    for (const auto& m : mem.lhs.num) collect_symbols(m, used);
    for (const auto& m : mem.lhs.den) collect_symbols(m, used);
    collect_symbols(mem.lhs.arg, used);
    collect_symbols(mem.rhs, used);
    check_known(used, "member " + mem.id);

    if (mem.lhs.num.size() != mem.lhs.den.size() + 1)
      throw SpecFileError("member " + mem.id + ": series must have r+1 numerator and r denominator parameters");

    mem.lhs_run = mem.lhs;
    mem.rhs_run = mem.rhs;
    for (const auto& c : rec.constraints) {
      mem.lhs_run = eliminate(std::move(mem.lhs_run), c);
      mem.rhs_run = expr_substitute(mem.rhs_run, c.solve_for, c.solution);
    }
    // the run form must be a function of the free symbols alone
    std::set<std::string> run_used;
    for (const auto& m : mem.lhs_run.num) collect_symbols(m, run_used);
    for (const auto& m : mem.lhs_run.den) collect_symbols(m, run_used);
    collect_symbols(mem.lhs_run.arg, run_used);
    collect_symbols(mem.rhs_run, run_used);
    for (const auto& c : rec.constraints)
      if (run_used.count(c.solve_for))
        throw SpecFileError("member " + mem.id + ": dependent symbol '" + c.solve_for +
                            "' survives elimination");
    // validate the terminating descriptor at a representative n
    termination_bound(mem.lhs_run, 1);
  }

  for (const auto& r : rec.recurrences) {
    auto in_range = [&](const SeqRef& ref) {
      return ref.member >= 0 && ref.member < static_cast<int>(rec.members.size()) &&
             (ref.offset == 0 || ref.offset == 1);
    };
    if (!in_range(r.minuend) || !in_range(r.subtrahend) || !in_range(r.shifted) ||
        r.minuend.offset != 0 || r.shifted.offset != 1)
      throw SpecFileError("recurrence " + r.id + ": malformed sequence references");
    if (!r.multiplier) throw SpecFileError("recurrence " + r.id + ": missing multiplier");
    std::set<std::string> used;
    collect_symbols(r.multiplier, used);
    for (const auto& [sym, m] : r.shift) {
      used.insert(sym);
      collect_symbols(m, used);
    }
    check_known(used, "recurrence " + r.id);
  }
}

Point materialize_point(const IdentityRecord& rec, const Assignment& frees, long n) {
  Point p;
  p.n = n;
  for (const auto& sym : rec.free_symbols()) {
    auto it = frees.find(sym);
    if (it == frees.end()) throw UnboundSymbol(sym);
    p.values[sym] = it->second;
  }
  for (const auto& c : rec.constraints) {
    Rational v = mono_eval(c.solution, p);
    if (v == 0)
      throw UnsolvableConstraint("constraint forces " + c.solve_for + " = 0");
    p.values[c.solve_for] = v;
  }
  const std::string& base = rec.base_symbol();
  for (const auto& s : rec.symbols) {
    auto it = p.values.find(s.name);
    if (it == p.values.end()) throw UnboundSymbol(s.name);
    if (it->second == 0)
      throw SpecFileError("symbol '" + s.name + "' must be nonzero");
  }
  const Rational& tau = p.values.at(base);
  if (abs(numerator(tau)) == abs(denominator(tau)))
    throw SpecFileError("base symbol '" + base + "' must have |num| != |den|");
  return p;
}

}  // namespace qpfaff
