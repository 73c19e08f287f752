#include "qpfaff/specfile.hpp"

#include <fstream>

#include "qpfaff/errors.hpp"

namespace qpfaff {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

// ---- writing ---------------------------------------------------------------

ordered_json affine_to_json(const AffineExp& e) {
  return ordered_json{{"const", e.constant}, {"n", e.n_coeff}};
}

ordered_json mono_to_json(const Monomial& m) {
  ordered_json exps = ordered_json::object();
  for (const auto& [sym, e] : m.exponents()) exps[sym] = affine_to_json(e);
  return ordered_json{{"coefficient", to_string(m.coeff())}, {"exponents", exps}};
}

ordered_json expr_to_json(const ExprPtr& e) {
  ordered_json out;
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Expr::Mono>) {
          out = ordered_json{{"node", "mono"}, {"monomial", mono_to_json(node.m)}};
        } else if constexpr (std::is_same_v<T, Expr::Add>) {
          ordered_json terms = ordered_json::array();
          for (const auto& t : node.terms) terms.push_back(expr_to_json(t));
          out = ordered_json{{"node", "add"}, {"terms", terms}};
        } else if constexpr (std::is_same_v<T, Expr::Mul>) {
          ordered_json factors = ordered_json::array();
          for (const auto& f : node.factors) factors.push_back(expr_to_json(f));
          out = ordered_json{{"node", "mul"}, {"factors", factors}};
        } else if constexpr (std::is_same_v<T, Expr::Div>) {
          out = ordered_json{{"node", "div"},
                             {"num", expr_to_json(node.num)},
                             {"den", expr_to_json(node.den)}};
        } else if constexpr (std::is_same_v<T, Expr::Poch>) {
          out = ordered_json{{"node", "poch"},
                             {"arg", mono_to_json(node.arg)},
                             {"base_exponent", node.base_exponent},
                             {"length", affine_to_json(node.length)}};
        }
      },
      e->node());
  return out;
}

ordered_json series_to_json(const SeriesSpec& s) {
  ordered_json num = ordered_json::array(), den = ordered_json::array();
  for (const auto& m : s.num) num.push_back(mono_to_json(m));
  for (const auto& m : s.den) den.push_back(mono_to_json(m));
  return ordered_json{{"base_exponent", s.base_exponent},
                      {"num", num},
                      {"den", den},
                      {"arg", mono_to_json(s.arg)},
                      {"terminating_index", s.terminating_index}};
}

ordered_json seqref_to_json(const SeqRef& r) {
  return ordered_json{{"member", r.member}, {"offset", r.offset}};
}

// ---- reading ---------------------------------------------------------------

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw SpecFileError(path + ": " + what);
}

const json& need(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing field '") + key + "'");
  return *it;
}

std::string need_str(const json& j, const char* key, const std::string& path) {
  const json& v = need(j, key, path);
  if (!v.is_string()) fail(path + "." + key, "expected a string");
  return v.get<std::string>();
}

long need_int(const json& j, const char* key, const std::string& path) {
  const json& v = need(j, key, path);
  if (!v.is_number_integer()) fail(path + "." + key, "expected an integer");
  return v.get<long>();
}

AffineExp affine_from_json(const json& j, const std::string& path) {
  return AffineExp{need_int(j, "const", path), need_int(j, "n", path)};
}

Monomial mono_from_json(const json& j, const std::string& path) {
  Rational coeff;
  try {
    coeff = parse_rational(need_str(j, "coefficient", path));
  } catch (const std::invalid_argument& e) {
    fail(path + ".coefficient", e.what());
  }
  if (coeff == 0) fail(path + ".coefficient", "monomial coefficient must be nonzero");
  Monomial m(coeff);
  const json& exps = need(j, "exponents", path);
  if (!exps.is_object()) fail(path + ".exponents", "expected an object");
  for (auto it = exps.begin(); it != exps.end(); ++it)
    m = m * Monomial::symbol(it.key(),
                             affine_from_json(it.value(), path + ".exponents." + it.key()));
  return m;
}

ExprPtr expr_from_json(const json& j, const std::string& path) {
  const std::string node = need_str(j, "node", path);
  if (node == "mono") return emono(mono_from_json(need(j, "monomial", path), path + ".monomial"));
  if (node == "add" || node == "mul") {
    const char* key = node == "add" ? "terms" : "factors";
    const json& list = need(j, key, path);
    if (!list.is_array() || list.empty())
      fail(path + "." + key, "expected a non-empty array");
    std::vector<ExprPtr> parts;
    parts.reserve(list.size());
    for (std::size_t i = 0; i < list.size(); ++i)
      parts.push_back(expr_from_json(list[i], path + "." + key + "[" + std::to_string(i) + "]"));
    return node == "add" ? eadd(std::move(parts)) : emul(std::move(parts));
  }
  if (node == "div")
    return ediv(expr_from_json(need(j, "num", path), path + ".num"),
                expr_from_json(need(j, "den", path), path + ".den"));
  if (node == "poch")
    return epoch(mono_from_json(need(j, "arg", path), path + ".arg"),
                 static_cast<int>(need_int(j, "base_exponent", path)),
                 affine_from_json(need(j, "length", path), path + ".length"));
  fail(path + ".node", "unknown node tag '" + node + "'");
}

SeriesSpec series_from_json(const json& j, const std::string& path) {
  SeriesSpec s;
  s.base_exponent = static_cast<int>(need_int(j, "base_exponent", path));
  const json& num = need(j, "num", path);
  const json& den = need(j, "den", path);
  if (!num.is_array() || num.empty()) fail(path + ".num", "expected a non-empty array");
  if (!den.is_array()) fail(path + ".den", "expected an array");
  for (std::size_t i = 0; i < num.size(); ++i)
    s.num.push_back(mono_from_json(num[i], path + ".num[" + std::to_string(i) + "]"));
  for (std::size_t i = 0; i < den.size(); ++i)
    s.den.push_back(mono_from_json(den[i], path + ".den[" + std::to_string(i) + "]"));
  s.arg = mono_from_json(need(j, "arg", path), path + ".arg");
  long ti = need_int(j, "terminating_index", path);
  if (ti < 0 || ti >= static_cast<long>(s.num.size()))
    fail(path + ".terminating_index", "index out of range");
  s.terminating_index = static_cast<std::size_t>(ti);
  return s;
}

SeqRef seqref_from_json(const json& j, const std::string& path) {
  SeqRef r;
  r.member = static_cast<int>(need_int(j, "member", path));
  r.offset = static_cast<int>(need_int(j, "offset", path));
  return r;
}

}  // namespace

ordered_json record_to_json(const IdentityRecord& rec) {
  ordered_json symbols = ordered_json::array();
  for (const auto& s : rec.symbols) {
    ordered_json sym{{"name", s.name}};
    if (s.base) sym["base"] = true;
    if (!s.square_of.empty()) sym["square_of"] = s.square_of;
    symbols.push_back(sym);
  }

  ordered_json constraints = ordered_json::array();
  for (const auto& c : rec.constraints)
    constraints.push_back(ordered_json{{"lhs", mono_to_json(c.lhs)},
                                       {"rhs", mono_to_json(c.rhs)},
                                       {"solve_for", c.solve_for}});

  ordered_json j{{"id", rec.family_id},
                 {"name", rec.name},
                 {"source", rec.source},
                 {"symbols", symbols},
                 {"constraints", constraints}};

  if (rec.members.size() == 1) {
    j["lhs"] = series_to_json(rec.members[0].lhs);
    j["rhs"] = expr_to_json(rec.members[0].rhs);
  } else {
    ordered_json ids = ordered_json::array(), lhs = ordered_json::array(),
                 rhs = ordered_json::array();
    for (const auto& m : rec.members) {
      ids.push_back(m.id);
      lhs.push_back(series_to_json(m.lhs));
      rhs.push_back(expr_to_json(m.rhs));
    }
    j["members"] = ids;
    j["lhs"] = lhs;
    j["rhs"] = rhs;
  }

  ordered_json recs = ordered_json::array();
  for (const auto& r : rec.recurrences) {
    ordered_json shift = ordered_json::object();
    for (const auto& [sym, m] : r.shift) shift[sym] = mono_to_json(m);
    recs.push_back(ordered_json{{"id", r.id},
                                {"side", r.closed_side ? "closed" : "sum"},
                                {"minuend", seqref_to_json(r.minuend)},
                                {"subtrahend", seqref_to_json(r.subtrahend)},
                                {"shifted", seqref_to_json(r.shifted)},
                                {"multiplier", expr_to_json(r.multiplier)},
                                {"shift", shift}});
  }
  j["recurrences"] = recs;
  if (rec.singh_chain) j["singh_chain"] = true;
  return j;
}

IdentityRecord record_from_json(const json& j) {
  IdentityRecord rec;
  rec.family_id = need_str(j, "id", "$");
  if (j.contains("name") && j["name"].is_string()) rec.name = j["name"];
  if (j.contains("source") && j["source"].is_string()) rec.source = j["source"];

  const json& symbols = need(j, "symbols", "$");
  if (!symbols.is_array() || symbols.empty()) fail("$.symbols", "expected a non-empty array");
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    const std::string path = "$.symbols[" + std::to_string(i) + "]";
    const json& s = symbols[i];
    SymbolDecl d;
    d.name = need_str(s, "name", path);
    d.base = s.value("base", false);
    d.square_of = s.value("square_of", "");
    rec.symbols.push_back(d);
  }

  if (j.contains("constraints")) {
    const json& cs = j["constraints"];
    if (!cs.is_array()) fail("$.constraints", "expected an array");
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const std::string path = "$.constraints[" + std::to_string(i) + "]";
      rec.constraints.push_back(
          make_constraint(mono_from_json(need(cs[i], "lhs", path), path + ".lhs"),
                          mono_from_json(need(cs[i], "rhs", path), path + ".rhs"),
                          need_str(cs[i], "solve_for", path)));
    }
  }

  const json& lhs = need(j, "lhs", "$");
  const json& rhs = need(j, "rhs", "$");
  if (lhs.is_array() != rhs.is_array())
    fail("$", "lhs and rhs must both be objects or both arrays");
  auto add_member = [&](const std::string& id, const json& l, const json& r,
                        const std::string& path) {
    IdentityMember m;
    m.id = id;
    m.lhs = series_from_json(l, path + ".lhs");
    m.rhs = expr_from_json(r, path + ".rhs");
    rec.members.push_back(std::move(m));
  };
  if (lhs.is_array()) {
    const json& ids = need(j, "members", "$");
    if (!ids.is_array() || ids.size() != lhs.size() || rhs.size() != lhs.size())
      fail("$.members", "members/lhs/rhs lengths must match");
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      if (!ids[i].is_string()) fail("$.members", "expected strings");
      add_member(ids[i].get<std::string>(), lhs[i], rhs[i],
                 "$[" + std::to_string(i) + "]");
    }
  } else {
    add_member(rec.family_id, lhs, rhs, "$");
  }

  if (j.contains("recurrences")) {
    const json& recs = j["recurrences"];
    if (!recs.is_array()) fail("$.recurrences", "expected an array");
    for (std::size_t i = 0; i < recs.size(); ++i) {
      const std::string path = "$.recurrences[" + std::to_string(i) + "]";
      const json& r = recs[i];
      RecurrenceSpec spec;
      spec.id = need_str(r, "id", path);
      const std::string side = need_str(r, "side", path);
      if (side != "sum" && side != "closed")
        fail(path + ".side", "expected \"sum\" or \"closed\"");
      spec.closed_side = side == "closed";
      spec.minuend = seqref_from_json(need(r, "minuend", path), path + ".minuend");
      spec.subtrahend = seqref_from_json(need(r, "subtrahend", path), path + ".subtrahend");
      spec.shifted = seqref_from_json(need(r, "shifted", path), path + ".shifted");
      spec.multiplier = expr_from_json(need(r, "multiplier", path), path + ".multiplier");
      if (r.contains("shift")) {
        if (!r["shift"].is_object()) fail(path + ".shift", "expected an object");
        for (auto it = r["shift"].begin(); it != r["shift"].end(); ++it)
          spec.shift[it.key()] =
              mono_from_json(it.value(), path + ".shift." + it.key());
      }
      rec.recurrences.push_back(std::move(spec));
    }
  }

  rec.singh_chain = j.value("singh_chain", false);
  finalize_record(rec);
  return rec;
}

IdentityRecord ingest_spec_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SpecFileError("cannot open '" + path.string() + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SpecFileError(path.string() + ": " + e.what());
  }
  // engine errors (UnboundSymbol, NotTerminating, UnsolvableConstraint, ...)
  // keep their types so callers can tell schema noise from math problems
  return record_from_json(j);
}

std::string record_to_string(const IdentityRecord& rec) {
  return record_to_json(rec).dump(2) + "\n";
}

}  // namespace qpfaff
