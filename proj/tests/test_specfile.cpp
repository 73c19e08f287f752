#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "qpfaff/catalog.hpp"
#include "qpfaff/errors.hpp"
#include "qpfaff/pfaff.hpp"
#include "qpfaff/report.hpp"
#include "qpfaff/specfile.hpp"

using namespace qpfaff;

namespace {

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& name, const std::string& contents)
      : path(std::filesystem::temp_directory_path() / name) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << contents;
  }
  ~TempFile() { std::error_code ec; std::filesystem::remove(path, ec); }
};

}  // namespace

TEST_CASE("every built-in record survives a serialization round-trip") {
  for (const auto& fam : catalog()) {
    CAPTURE(fam.family_id);
    std::string once = record_to_string(fam);
    IdentityRecord back = record_from_json(nlohmann::json::parse(once));
    CHECK(record_to_string(back) == once);
  }
}

TEST_CASE("a file re-declaring a built-in certifies identically") {
  const auto& builtin = *get_identity("T1.1").family;
  TempFile file("qpfaff_t11.json", record_to_string(builtin));
  IdentityRecord loaded = ingest_spec_file(file.path);

  SamplerConfig cfg{42, 8, 5000};
  CertReport a = certify_record(builtin, "T1.1", 4, 5, cfg);
  CertReport b = certify_record(loaded, "T1.1", 4, 5, cfg);
  CHECK(a.pass);
  CHECK(b.pass);

  ReportDocument da, db;
  da.reports.push_back(a);
  db.reports.push_back(b);
  da.pass = a.pass;
  db.pass = b.pass;
  CHECK(report_to_string(da) == report_to_string(db));
}

TEST_CASE("a fresh user identity goes through the same machinery") {
  // the q-binomial statement under a new name, with z specialized away
  const std::string text = R"({
    "id": "user.qbin",
    "symbols": [{"name": "q", "base": true}, {"name": "z"}],
    "lhs": {
      "base_exponent": 1,
      "num": [{"coefficient": "1", "exponents": {"q": {"const": 0, "n": -1}}}],
      "den": [],
      "arg": {"coefficient": "1", "exponents": {"z": {"const": 1, "n": 0}}},
      "terminating_index": 0
    },
    "rhs": {"node": "poch",
            "arg": {"coefficient": "1",
                    "exponents": {"z": {"const": 1, "n": 0}, "q": {"const": 0, "n": -1}}},
            "base_exponent": 1,
            "length": {"const": 0, "n": 1}},
    "recurrences": []
  })";
  TempFile file("qpfaff_user.json", text);
  IdentityRecord rec = ingest_spec_file(file.path);
  CHECK(rec.family_id == "user.qbin");
  CertReport rep = certify_record(rec, "user.qbin", 5, 5, SamplerConfig{9, 8, 5000});
  CHECK(rep.pass);
}

TEST_CASE("schema violations carry locations") {
  TempFile broken("qpfaff_broken.json", "{ not json");
  CHECK_THROWS_AS(ingest_spec_file(broken.path), SpecFileError);
  CHECK_THROWS_AS(ingest_spec_file("/nonexistent/path.json"), SpecFileError);

  // unknown symbol inside a monomial fails at load
  const std::string unknown_symbol = R"({
    "id": "bad",
    "symbols": [{"name": "q", "base": true}],
    "lhs": {
      "base_exponent": 1,
      "num": [{"coefficient": "1", "exponents": {"q": {"const": 0, "n": -1}}}],
      "den": [],
      "arg": {"coefficient": "1", "exponents": {"w": {"const": 1, "n": 0}}},
      "terminating_index": 0
    },
    "rhs": {"node": "mono", "monomial": {"coefficient": "1", "exponents": {}}}
  })";
  TempFile f1("qpfaff_unknown.json", unknown_symbol);
  CHECK_THROWS_AS(ingest_spec_file(f1.path), UnboundSymbol);

  // no terminating numerator parameter
  const std::string not_terminating = R"({
    "id": "bad2",
    "symbols": [{"name": "q", "base": true}, {"name": "z"}],
    "lhs": {
      "base_exponent": 1,
      "num": [{"coefficient": "1", "exponents": {"z": {"const": 1, "n": 0}}}],
      "den": [],
      "arg": {"coefficient": "1", "exponents": {"z": {"const": 1, "n": 0}}},
      "terminating_index": 0
    },
    "rhs": {"node": "mono", "monomial": {"coefficient": "1", "exponents": {}}}
  })";
  TempFile f2("qpfaff_nonterm.json", not_terminating);
  CHECK_THROWS_AS(ingest_spec_file(f2.path), NotTerminating);

  // structural errors: bad node tag, zero coefficient, missing fields
  const std::string bad_node = R"({
    "id": "bad3",
    "symbols": [{"name": "q", "base": true}],
    "lhs": {
      "base_exponent": 1,
      "num": [{"coefficient": "1", "exponents": {"q": {"const": 0, "n": -1}}}],
      "den": [],
      "arg": {"coefficient": "1", "exponents": {}},
      "terminating_index": 0
    },
    "rhs": {"node": "frobnicate"}
  })";
  TempFile f3("qpfaff_badnode.json", bad_node);
  try {
    ingest_spec_file(f3.path);
    FAIL("expected SpecFileError");
  } catch (const SpecFileError& e) {
    CHECK(std::string(e.what()).find("$.rhs") != std::string::npos);
  }

  const std::string zero_coeff = R"({
    "id": "bad4",
    "symbols": [{"name": "q", "base": true}],
    "lhs": {
      "base_exponent": 1,
      "num": [{"coefficient": "0", "exponents": {}}],
      "den": [],
      "arg": {"coefficient": "1", "exponents": {}},
      "terminating_index": 0
    },
    "rhs": {"node": "mono", "monomial": {"coefficient": "1", "exponents": {}}}
  })";
  TempFile f4("qpfaff_zero.json", zero_coeff);
  CHECK_THROWS_AS(ingest_spec_file(f4.path), SpecFileError);
}

TEST_CASE("constraints must be solvable for the designated symbol") {
  // e appears squared: exponent +-1 required
  CHECK_THROWS_AS(make_constraint(Monomial::symbol("a"), Monomial::symbol("e", 2), "e"),
                  UnsolvableConstraint);
  CHECK_THROWS_AS(make_constraint(Monomial::symbol("a"), Monomial::symbol("b"), "e"),
                  UnsolvableConstraint);
  Constraint c = make_constraint(Monomial::symbol("a"), Monomial::symbol("e"), "e");
  CHECK(c.solution == Monomial::symbol("a"));
}
