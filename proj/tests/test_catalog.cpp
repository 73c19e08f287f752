#include <doctest.h>

#include "qpfaff/catalog.hpp"
#include "qpfaff/errors.hpp"
#include "qpfaff/pfaff.hpp"

using namespace qpfaff;

namespace {

Assignment assign(std::initializer_list<std::pair<const char*, const char*>> vals) {
  Assignment a;
  for (const auto& [sym, val] : vals) a[sym] = parse_rational(val);
  return a;
}

}  // namespace

TEST_CASE("catalog lists exactly the eleven entries") {
  const std::vector<std::string> expected = {"T1.1", "T1.2", "T1.3", "T1.4",
                                             "T1.5", "T1.6a", "T1.6b", "T1.7",
                                             "T1.8", "T1.9a", "T1.9b"};
  CHECK(catalog_ids() == expected);
  CHECK_THROWS_AS(get_identity("T3.7"), UnknownIdentity);

  std::vector<std::string> recs = recurrence_ids();
  CHECK(recs.size() == 20);
  for (int i = 1; i <= 20; ++i) {
    std::string id = "2." + std::to_string(i);
    CHECK(std::count(recs.begin(), recs.end(), id) == 1);
  }
}

TEST_CASE("statement encodings carry the printed shapes") {
  EntryRef t11 = get_identity("T1.1");
  CHECK(t11.mem().lhs.base_exponent == 1);
  REQUIRE(t11.mem().lhs.num.size() == 1);
  CHECK(t11.mem().lhs.num[0] == Monomial::symbol("q", {0, -1}));
  CHECK(t11.mem().lhs.den.empty());
  CHECK(t11.mem().lhs.arg == Monomial::symbol("z"));

  // a^2 q = b c d e q^{-n}, solved for e
  EntryRef t18 = get_identity("T1.8");
  REQUIRE(t18.family->constraints.size() == 1);
  const Constraint& c = t18.family->constraints[0];
  CHECK(c.solve_for == "e");
  CHECK(c.lhs == Monomial(Rational(1), {{"A", 4}, {"q", 1}}));
  CHECK(c.solution ==
        Monomial(Rational(1), {{"A", 4}, {"q", {1, 1}}, {"b", -1}, {"c", -1}, {"d", -1}}));

  // T1.6a closed form: prefactor b^n, and every factorial in base sqrt(q)
  EntryRef t16a = get_identity("T1.6a");
  bool saw_prefactor = false;
  int poch_nodes = 0;
  std::function<void(const ExprPtr&)> walk = [&](const ExprPtr& e) {
    std::visit(
        [&](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, Expr::Mono>) {
            if (node.m.exponent_of("b") == AffineExp{0, 1}) saw_prefactor = true;
          } else if constexpr (std::is_same_v<T, Expr::Add>) {
            for (const auto& t : node.terms) walk(t);
          } else if constexpr (std::is_same_v<T, Expr::Mul>) {
            for (const auto& f : node.factors) walk(f);
          } else if constexpr (std::is_same_v<T, Expr::Div>) {
            walk(node.num);
            walk(node.den);
          } else if constexpr (std::is_same_v<T, Expr::Poch>) {
            ++poch_nodes;
            CHECK(node.base_exponent == 1);  // base t = sqrt(q)
            CHECK(node.length == AffineExp{0, 1});
          }
        },
        e->node());
  };
  walk(t16a.mem().rhs);
  CHECK(saw_prefactor);
  CHECK(poch_nodes == 4);

  // the two 10phi9 parameter lists differ exactly in the printed slots
  EntryRef t9a = get_identity("T1.9a"), t9b = get_identity("T1.9b");
  const auto& na = t9a.mem().lhs.num;
  const auto& nb = t9b.mem().lhs.num;
  REQUIRE(na.size() == 10);
  REQUIRE(nb.size() == 10);
  for (std::size_t i = 0; i < 10; ++i) {
    if (i == 5 || i == 7) {
      CHECK_FALSE(na[i] == nb[i]);
    } else {
      CHECK(na[i] == nb[i]);
    }
  }
  // slot 6: aq/sqrt(k) vs a/sqrt(k); slot 8: k/aq vs k/a
  CHECK(na[5] / nb[5] == Monomial::symbol("t", 2));
  CHECK(nb[7] / na[7] == Monomial::symbol("t", 2));
  const auto& da = t9a.mem().lhs.den;
  const auto& db = t9b.mem().lhs.den;
  CHECK(db[4] / da[4] == Monomial::symbol("t", 2));  // q sqrt(k) vs sqrt(k)
  CHECK(da[6] / db[6] == Monomial::symbol("t", 2));  // a^2 q^2/k vs a^2 q/k
}

TEST_CASE("resolve_constraints") {
  // worked point: a=4 (A=2), b=2, c=3, d=5, q=1/2, n=2 forces e = 1/15
  const auto& t18 = *get_identity("T1.8").family;
  Assignment partial = assign({{"A", "2"}, {"b", "2"}, {"c", "3"}, {"d", "5"}, {"q", "1/2"}});
  Point p = resolve_constraints(t18, partial, 2);
  CHECK(p.values.at("e") == Rational(1, 15));
  // a^2 q = 8 = b c d e q^{-n}
  Rational lhs = pow_int(p.values.at("A"), 4) * p.values.at("q");
  Rational rhs = p.values.at("b") * p.values.at("c") * p.values.at("d") *
                 p.values.at("e") * pow_int(p.values.at("q"), -2);
  CHECK(lhs == 8);
  CHECK(lhs == rhs);

  // no constraints: the partial point comes back unchanged
  const auto& t11 = *get_identity("T1.1").family;
  Assignment zq = assign({{"q", "1/2"}, {"z", "1/3"}});
  Point p11 = resolve_constraints(t11, zq, 1);
  CHECK(p11.values.size() == 2);
  CHECK(p11.values.at("z") == Rational(1, 3));

  // base symbol must keep |num| != |den|
  CHECK_THROWS_AS(resolve_constraints(t11, assign({{"q", "-1"}, {"z", "1/3"}}), 0),
                  SpecFileError);
  CHECK_THROWS_AS(resolve_constraints(t11, assign({{"z", "1/3"}}), 0), UnboundSymbol);
}

TEST_CASE("lhs equals rhs at admissible points") {
  // frozen from an independent direct-summation oracle at generic points
  struct Case {
    const char* id;
    Assignment frees;
    long n;
    const char* value;
  };
  const Case cases[] = {
      {"T1.1", assign({{"q", "2/7"}, {"z", "3/5"}}), 2, "1397/200"},
      {"T1.4", assign({{"q", "2/7"}, {"A", "5"}, {"b", "3"}}), 2, "1021207/39527"},
      {"T1.6b", assign({{"t", "2/7"}, {"b", "3"}, {"d", "5"}}), 3,
       "-1977116823/65571523"},
      {"T1.8", assign({{"q", "2/7"}, {"A", "5"}, {"b", "3"}, {"c", "11"}, {"d", "13"}}),
       1, "550188053/31600053"},
      {"T1.9a", assign({{"t", "2/7"}, {"A", "5"}, {"K", "3"}}), 2,
       "-6759999/20090000"},
      {"T1.9b", assign({{"t", "2/7"}, {"A", "5"}, {"K", "3"}}), 4,
       "-71399054195835678259839653499/59710906028389435007760156250"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.id);
    EntryRef entry = get_identity(c.id);
    Point p = resolve_constraints(*entry.family, c.frees, c.n);
    Rational expected = parse_rational(c.value);
    CHECK(lhs_value(entry, p) == expected);
    CHECK(rhs_value(entry, p) == expected);
  }
}

TEST_CASE("closed form equals the two-term sum at a near-degenerate point") {
  // b = 2 with t = 1/2 puts a zero of (b^2; q)_j at j = 2, so the point is
  // only admissible up to n = 1; the n = 1 evaluation must still be exact
  EntryRef t16a = get_identity("T1.6a");
  Assignment frees = assign({{"t", "1/2"}, {"b", "2"}, {"d", "3"}});
  Point p = resolve_constraints(*t16a.family, frees, 1);
  Rational sum = lhs_value(t16a, p);
  CHECK(sum == rhs_value(t16a, p));
  // b sqrt(q) = 1 zeroes the j = 1 term, so the two-term sum collapses to 1
  // and the closed form must collapse with it
  CHECK(sum == 1);
}

TEST_CASE("both sides are 1 at n = 0") {
  for (const auto& id : catalog_ids()) {
    CAPTURE(id);
    EntryRef entry = get_identity(id);
    auto frees = sampled_assignments(*entry.family, SamplerConfig{7, 6, 5000}, 1, 2)[0];
    Point p = resolve_constraints(*entry.family, frees, 0);
    CHECK(lhs_value(entry, p) == 1);
    CHECK(rhs_value(entry, p) == 1);
  }
}

TEST_CASE("statement form and run form agree once constraints are resolved") {
  EntryRef t18 = get_identity("T1.8");
  const auto& fam = *t18.family;
  Assignment frees = assign({{"A", "2"}, {"b", "2"}, {"c", "3"}, {"d", "5"}, {"q", "1/3"}});
  for (long n = 0; n <= 3; ++n) {
    Point p = resolve_constraints(fam, frees, n);
    CHECK(lhs_value(t18, p) == member_value(fam, 0, false, frees, n));
    CHECK(rhs_value(t18, p) == member_value(fam, 0, true, frees, n));
  }
}
