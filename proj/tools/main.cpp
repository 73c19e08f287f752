// qpfaff: exact-arithmetic evaluation and certification of terminating
// basic hypergeometric identities by matching recurrences.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qpfaff/catalog.hpp"
#include "qpfaff/errors.hpp"
#include "qpfaff/pfaff.hpp"
#include "qpfaff/report.hpp"
#include "qpfaff/specfile.hpp"

using namespace qpfaff;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitSampling = 2;
constexpr int kExitInput = 3;

std::string join_args(int argc, char** argv) {
  std::string out;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) out += ' ';
    out += argv[i];
  }
  return out;
}

void write_json(const std::optional<std::string>& path, const ReportDocument& doc) {
  if (!path) return;
  std::ofstream out(*path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + *path + "'");
  out << report_to_string(doc);
}

long long ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - start)
      .count();
}

struct CommonOpts {
  long n_max = 8;
  int samples = 25;
  std::uint64_t seed = 42;
  long bound = 8;
  std::optional<std::string> json_path;

  SamplerConfig sampler() const { return SamplerConfig{seed, bound, 5000}; }
  void attach(CLI::App* cmd) {
    cmd->add_option("--n-max", n_max, "verify for 0 <= n <= n-max")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--samples", samples, "number of sampled points")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", seed, "sampler seed");
    cmd->add_option("--bound", bound, "magnitude bound for sampled rationals")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--json", json_path, "write a machine-readable report here");
  }
};

// Either a catalog id or a user spec file.
struct Source {
  std::string id;
  std::optional<std::string> spec_path;
  std::optional<IdentityRecord> loaded;

  const IdentityRecord& family() {
    if (spec_path) {
      if (!loaded) loaded = ingest_spec_file(*spec_path);
      return *loaded;
    }
    return *get_identity(id).family;
  }
};

Assignment parse_at(const std::vector<std::string>& at, const IdentityRecord& fam) {
  Assignment out;
  for (const auto& item : at) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw Error("--at expects sym=value, got '" + item + "'");
    std::string sym = item.substr(0, eq);
    out[sym] = parse_rational(item.substr(eq + 1));
  }
  for (const auto& [sym, v] : out) {
    bool declared = false;
    for (const auto& s : fam.symbols) declared = declared || s.name == sym;
    if (!declared) throw UnboundSymbol(sym);
    if (fam.is_dependent(sym))
      throw Error("symbol '" + sym + "' is determined by a constraint");
  }
  for (const auto& sym : fam.free_symbols())
    if (!out.count(sym)) throw Error("missing --at " + sym + "=<rational>");
  return out;
}

int run_list(const std::optional<std::string>& json_path, const std::string& command) {
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& fam : catalog()) {
    for (const auto& mem : fam.members) {
      ClassificationFlags flags = classify(mem.lhs, fam.base_symbol());
      std::string labels;
      auto add = [&](bool on, const char* label) {
        if (!on) return;
        if (!labels.empty()) labels += ',';
        labels += label;
      };
      add(flags.terminating, "terminating");
      add(flags.balanced, "balanced");
      add(flags.well_poised, "well-poised");
      add(flags.very_well_poised, "very-well-poised");
      std::string symbols;
      nlohmann::ordered_json sym_json = nlohmann::ordered_json::array();
      for (const auto& s : fam.symbols) {
        if (!symbols.empty()) symbols += ' ';
        symbols += s.name;
        if (s.base) symbols += "(base)";
        if (!s.square_of.empty()) symbols += "(" + s.name + "^2=" + s.square_of + ")";
        nlohmann::ordered_json sj{{"name", s.name}};
        if (s.base) sj["base"] = true;
        if (!s.square_of.empty()) sj["square_of"] = s.square_of;
        if (fam.is_dependent(s.name)) sj["dependent"] = true;
        sym_json.push_back(sj);
        if (fam.is_dependent(s.name)) symbols += "(dependent)";
      }
      std::cout << mem.id << "  " << series_shape(mem.lhs) << "  " << fam.name
                << "  [" << labels << "]  symbols: " << symbols << "  ("
                << fam.source << ")\n";
      entries.push_back(nlohmann::ordered_json{
          {"id", mem.id},
          {"family", fam.family_id},
          {"name", fam.name},
          {"shape", series_shape(mem.lhs)},
          {"terminating", flags.terminating},
          {"balanced", flags.balanced},
          {"well_poised", flags.well_poised},
          {"very_well_poised", flags.very_well_poised},
          {"symbols", sym_json},
          {"source", fam.source},
      });
    }
  }
  if (json_path) {
    nlohmann::ordered_json doc{{"version", kVersion},
                               {"command", command},
                               {"identities", entries}};
    std::ofstream out(*json_path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + *json_path + "'");
    out << doc.dump(2) << "\n";
  }
  return kExitPass;
}

int run_evaluate(Source src, const std::vector<std::string>& at, long n,
                 const std::optional<std::string>& json_path,
                 const std::string& command) {
  const IdentityRecord& fam = src.family();
  int member = 0;
  if (!src.spec_path) member = get_identity(src.id).member;
  Assignment frees = parse_at(at, fam);
  Point p = resolve_constraints(fam, frees, n);
  EntryRef entry{&fam, member};
  Rational lhs = lhs_value(entry, p);
  Rational rhs = rhs_value(entry, p);
  std::cout << "lhs = " << to_string(lhs) << "\n";
  std::cout << "rhs = " << to_string(rhs) << "\n";
  if (json_path) {
    nlohmann::ordered_json point = nlohmann::ordered_json::object();
    for (const auto& [sym, v] : p.values) point[sym] = to_string(v);
    nlohmann::ordered_json doc{{"version", kVersion},
                               {"command", command},
                               {"id", fam.members[member].id},
                               {"n", n},
                               {"point", point},
                               {"lhs", to_string(lhs)},
                               {"rhs", to_string(rhs)}};
    std::ofstream out(*json_path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + *json_path + "'");
    out << doc.dump(2) << "\n";
  }
  return kExitPass;
}

int run_verify(Source src, bool all, const CommonOpts& opts, const std::string& command) {
  auto start = std::chrono::steady_clock::now();
  ReportDocument doc;
  doc.command = command;
  doc.seed = opts.seed;
  doc.n_max = opts.n_max;
  if (all) {
    doc.id = "all";
    for (const auto& fam : catalog())
      doc.reports.push_back(certify_record(fam, fam.family_id, opts.n_max,
                                           opts.samples, opts.sampler()));
  } else if (src.spec_path) {
    const IdentityRecord& fam = src.family();
    doc.id = fam.family_id;
    doc.reports.push_back(
        certify_record(fam, fam.family_id, opts.n_max, opts.samples, opts.sampler()));
  } else {
    doc.id = src.id;
    doc.reports.push_back(
        certify_identity(src.id, opts.n_max, opts.samples, opts.sampler()));
  }
  for (const auto& rep : doc.reports) doc.pass = doc.pass && rep.pass;
  write_json(opts.json_path, doc);
  std::cout << report_summary(doc, ms_since(start));
  return doc.pass ? kExitPass : kExitFail;
}

int run_recurrence(Source src, const std::string& rec_id, const CommonOpts& opts,
                   const std::string& command) {
  auto start = std::chrono::steady_clock::now();
  const IdentityRecord* fam = nullptr;
  const RecurrenceSpec* rec = nullptr;
  if (src.spec_path) {
    fam = &src.family();
    for (const auto& r : fam->recurrences)
      if (r.id == rec_id) rec = &r;
    if (!rec) throw UnknownIdentity("recurrence " + rec_id);
  } else {
    RecurrenceRef ref = get_recurrence(rec_id);
    fam = ref.family;
    rec = ref.rec;
  }

  ReportDocument doc;
  doc.command = command;
  doc.id = rec_id;
  doc.seed = opts.seed;
  doc.n_max = opts.n_max;
  CertReport rep;
  rep.id = rec_id;
  rep.seed = opts.seed;
  rep.n_max = opts.n_max;
  rep.samples = opts.samples;
  for (const auto& frees :
       sampled_assignments(*fam, opts.sampler(), opts.samples, opts.n_max)) {
    PointResult pr;
    pr.frees = frees;
    for (long n = 1; n <= opts.n_max; ++n) {
      Rational residual = check_recurrence(*fam, *rec, frees, n);
      CheckOutcome co{"rec." + rec_id + ".n=" + std::to_string(n), residual == 0,
                      to_string(residual), {}};
      pr.pass = pr.pass && co.pass;
      pr.checks.push_back(std::move(co));
    }
    rep.pass = rep.pass && pr.pass;
    rep.points.push_back(std::move(pr));
  }
  doc.reports.push_back(std::move(rep));
  doc.pass = doc.reports.front().pass;
  write_json(opts.json_path, doc);
  std::cout << report_summary(doc, ms_since(start));
  return doc.pass ? kExitPass : kExitFail;
}

int run_singh(const CommonOpts& opts, const std::string& command) {
  auto start = std::chrono::steady_clock::now();
  const IdentityRecord& fam = *get_identity("T1.5").family;
  ReportDocument doc;
  doc.command = command;
  doc.id = "T1.5";
  doc.seed = opts.seed;
  doc.n_max = opts.n_max;
  CertReport rep;
  rep.id = "T1.5";
  rep.seed = opts.seed;
  rep.n_max = opts.n_max;
  rep.samples = opts.samples;
  for (const auto& frees :
       sampled_assignments(fam, opts.sampler(), opts.samples, opts.n_max)) {
    PointResult pr;
    pr.frees = frees;
    for (long n = 0; n <= opts.n_max; ++n) {
      auto v = singh_stage_values(frees, n);
      bool ok = v[0] == v[1] && v[1] == v[2] && v[2] == v[3];
      CheckOutcome co{"singh.n=" + std::to_string(n), ok, {},
                      std::vector<std::string>{to_string(v[0]), to_string(v[1]),
                                               to_string(v[2]), to_string(v[3])}};
      pr.pass = pr.pass && ok;
      pr.checks.push_back(std::move(co));
    }
    rep.pass = rep.pass && pr.pass;
    rep.points.push_back(std::move(pr));
  }
  doc.reports.push_back(std::move(rep));
  doc.pass = doc.reports.front().pass;
  write_json(opts.json_path, doc);
  std::cout << report_summary(doc, ms_since(start));
  return doc.pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact certification of terminating q-series identities"};
  app.set_version_flag("--version", std::string("qpfaff ") + kVersion);
  app.require_subcommand(1);
  const std::string command = join_args(argc, argv);

  auto* list_cmd = app.add_subcommand("list", "list the identity catalog");
  std::optional<std::string> list_json;
  list_cmd->add_option("--json", list_json, "write the listing here");

  auto* eval_cmd = app.add_subcommand("evaluate", "evaluate both sides at a point");
  std::string eval_id;
  std::optional<std::string> eval_spec;
  std::vector<std::string> eval_at;
  long eval_n = 0;
  std::optional<std::string> eval_json;
  eval_cmd->add_option("id", eval_id, "catalog identity id");
  eval_cmd->add_option("--spec", eval_spec, "user spec file instead of a catalog id");
  eval_cmd->add_option("--at", eval_at, "symbol assignment sym=p/q (repeatable)");
  eval_cmd->add_option("--n", eval_n, "index n")->check(CLI::NonNegativeNumber);
  eval_cmd->add_option("--json", eval_json, "write the evaluation here");

  auto* verify_cmd = app.add_subcommand("verify", "certify identities by recurrence");
  std::string verify_id;
  std::optional<std::string> verify_spec;
  bool verify_all = false;
  CommonOpts verify_opts;
  verify_cmd->add_option("id", verify_id, "catalog identity id");
  verify_cmd->add_flag("--all", verify_all, "certify the whole catalog");
  verify_cmd->add_option("--spec", verify_spec, "user spec file instead of a catalog id");
  verify_opts.attach(verify_cmd);

  auto* rec_cmd = app.add_subcommand("recurrence", "check one recurrence's residuals");
  std::string rec_id;
  std::optional<std::string> rec_spec;
  CommonOpts rec_opts;
  rec_cmd->add_option("rec-id", rec_id, "recurrence id, e.g. 2.15")->required();
  rec_cmd->add_option("--spec", rec_spec, "user spec file instead of the catalog");
  rec_opts.attach(rec_cmd);

  auto* singh_cmd = app.add_subcommand("singh", "run the quadratic-transformation chain");
  CommonOpts singh_opts;
  singh_opts.attach(singh_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }

  try {
    if (list_cmd->parsed()) return run_list(list_json, command);
    if (eval_cmd->parsed()) {
      if (eval_id.empty() == !eval_spec.has_value())
        throw Error("evaluate needs a catalog id or --spec, not both");
      return run_evaluate(Source{eval_id, eval_spec, {}}, eval_at, eval_n, eval_json,
                          command);
    }
    if (verify_cmd->parsed()) {
      int sources = (!verify_id.empty() ? 1 : 0) + (verify_all ? 1 : 0) +
                    (verify_spec.has_value() ? 1 : 0);
      if (sources != 1) throw Error("verify needs exactly one of: id, --all, --spec");
      return run_verify(Source{verify_id, verify_spec, {}}, verify_all, verify_opts,
                        command);
    }
    if (rec_cmd->parsed())
      return run_recurrence(Source{"", rec_spec, {}}, rec_id, rec_opts, command);
    if (singh_cmd->parsed()) return run_singh(singh_opts, command);
  } catch (const SamplingExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSampling;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
