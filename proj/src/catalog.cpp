#include "qpfaff/catalog.hpp"

#include <map>

#include "qpfaff/errors.hpp"

// Built-in identity families. Parameter lists are encoded exactly as the
// classical statements print them, in declaration order, with square roots
// pre-rationalized: A^2 = a, K^2 = k, t^2 = q where roots occur. Encodings
// are data, not code; user spec files go through the identical machinery.

namespace qpfaff {

namespace {

using E = AffineExp;

Monomial mono(long c, std::initializer_list<std::pair<std::string_view, AffineExp>> exps = {}) {
  return Monomial(Rational(c), exps);
}

Monomial msym(std::string_view name, AffineExp e = E(1)) {
  return Monomial::symbol(name, e);
}

RecurrenceSpec make_rec(std::string id, bool closed, SeqRef minuend, SeqRef subtrahend,
                        SeqRef shifted, ExprPtr mult,
                        std::map<std::string, Monomial> sigma) {
  RecurrenceSpec r;
  r.id = std::move(id);
  r.closed_side = closed;
  r.minuend = minuend;
  r.subtrahend = subtrahend;
  r.shifted = shifted;
  r.multiplier = std::move(mult);
  r.shift = std::move(sigma);
  return r;
}

// ---- T1.1: q-binomial ----------------------------------------------------

IdentityRecord family_t11() {
  IdentityRecord rec;
  rec.family_id = "T1.1";
  rec.name = "q-binomial";
  rec.source = "Gasper & Rahman, Basic Hypergeometric Series, II.4";
  rec.symbols = {{"q", true, ""}, {"z", false, ""}};

  IdentityMember m;
  m.id = "T1.1";
  m.lhs.base_exponent = 1;
  m.lhs.num = {msym("q", {0, -1})};  // q^{-n}
  m.lhs.den = {};
  m.lhs.arg = msym("z");
  m.lhs.terminating_index = 0;
  m.rhs = epoch(mono(1, {{"z", 1}, {"q", {0, -1}}}), 1, {0, 1});  // (z q^{-n}; q)_n
  rec.members = {m};

  // S_n - S_{n-1} = -z q^{-n} S_{n-1}
  auto mult = [] { return emono(mono(-1, {{"z", 1}, {"q", {0, -1}}})); };
  rec.recurrences = {
      make_rec("2.1", false, {0, 0}, {0, 1}, {0, 1}, mult(), {}),
      make_rec("2.2", true, {0, 0}, {0, 1}, {0, 1}, mult(), {}),
  };
  return rec;
}

// ---- T1.2: q-Chu-Vandermonde ----------------------------------------------

IdentityRecord family_t12() {
  IdentityRecord rec;
  rec.family_id = "T1.2";
  rec.name = "q-Chu-Vandermonde";
  rec.source = "Gasper & Rahman, Basic Hypergeometric Series, II.6";
  rec.symbols = {{"q", true, ""}, {"a", false, ""}, {"c", false, ""}};

  IdentityMember m;
  m.id = "T1.2";
  m.lhs.base_exponent = 1;
  m.lhs.num = {msym("a"), msym("q", {0, -1})};
  m.lhs.den = {msym("c")};
  m.lhs.arg = msym("q");
  m.lhs.terminating_index = 1;
  // (c/a;q)_n / (c;q)_n * a^n
  m.rhs = ediv(emul({epoch(mono(1, {{"c", 1}, {"a", -1}}), 1, {0, 1}),
                     emono(msym("a", {0, 1}))}),
               epoch(msym("c"), 1, {0, 1}));
  rec.members = {m};

  // multiplier -q^{-n+1}(1-a)/(1-c), shift (a,c) -> (aq,cq)
  auto mult = [] {
    return ediv(emul({emono(mono(-1, {{"q", {1, -1}}})), one_minus(msym("a"))}),
                one_minus(msym("c")));
  };
  std::map<std::string, Monomial> sigma = {
      {"a", mono(1, {{"a", 1}, {"q", 1}})},
      {"c", mono(1, {{"c", 1}, {"q", 1}})},
  };
  rec.recurrences = {
      make_rec("2.3", false, {0, 0}, {0, 1}, {0, 1}, mult(), sigma),
      make_rec("2.4", true, {0, 0}, {0, 1}, {0, 1}, mult(), sigma),
  };
  return rec;
}

// ---- T1.3: q-Pfaff-Saalschutz ----------------------------------------------

IdentityRecord family_t13() {
  IdentityRecord rec;
  rec.family_id = "T1.3";
  rec.name = "q-Pfaff-Saalschutz";
  rec.source = "Gasper & Rahman, Basic Hypergeometric Series, II.12";
  rec.symbols = {{"q", true, ""}, {"a", false, ""}, {"b", false, ""}, {"c", false, ""}};

  IdentityMember m;
  m.id = "T1.3";
  m.lhs.base_exponent = 1;
  m.lhs.num = {msym("a"), msym("b"), msym("q", {0, -1})};
  m.lhs.den = {msym("c"), mono(1, {{"a", 1}, {"b", 1}, {"q", {1, -1}}, {"c", -1}})};
  m.lhs.arg = msym("q");
  m.lhs.terminating_index = 2;
  // (c/a, c/b; q)_n / (c, c/ab; q)_n
  m.rhs = ediv(emul({epoch(mono(1, {{"c", 1}, {"a", -1}}), 1, {0, 1}),
                     epoch(mono(1, {{"c", 1}, {"b", -1}}), 1, {0, 1})}),
               emul({epoch(msym("c"), 1, {0, 1}),
                     epoch(mono(1, {{"c", 1}, {"a", -1}, {"b", -1}}), 1, {0, 1})}));
  rec.members = {m};

  auto mult = [] {
    return ediv(
        emul({emono(mono(-1, {{"q", {1, -1}}})), one_minus(msym("a")),
              one_minus(msym("b")),
              one_minus(mono(1, {{"a", 1}, {"b", 1}, {"q", 1}, {"c", -1}}))}),
        emul({one_minus(msym("c")),
              one_minus(mono(1, {{"a", 1}, {"b", 1}, {"q", {1, -1}}, {"c", -1}})),
              one_minus(mono(1, {{"a", 1}, {"b", 1}, {"q", {2, -1}}, {"c", -1}}))}));
  };
  std::map<std::string, Monomial> sigma = {
      {"a", mono(1, {{"a", 1}, {"q", 1}})},
      {"b", mono(1, {{"b", 1}, {"q", 1}})},
      {"c", mono(1, {{"c", 1}, {"q", 1}})},
  };
  rec.recurrences = {
      make_rec("2.5", false, {0, 0}, {0, 1}, {0, 1}, mult(), sigma),
      make_rec("2.6", true, {0, 0}, {0, 1}, {0, 1}, mult(), sigma),
  };
  return rec;
}

// ---- T1.4: q-Dixon ---------------------------------------------------------

IdentityRecord family_t14() {
  IdentityRecord rec;
  rec.family_id = "T1.4";
  rec.name = "q-Dixon";
  rec.source = "Gasper & Rahman, Basic Hypergeometric Series, II.14";
  rec.symbols = {{"q", true, ""}, {"A", false, "a"}, {"b", false, ""}};

  IdentityMember m;
  m.id = "T1.4";
  m.lhs.base_exponent = 1;
  // num: a, -q sqrt(a), b, q^{-n}; den: -sqrt(a), aq/b, aq^{n+1}
  m.lhs.num = {msym("A", 2), mono(-1, {{"q", 1}, {"A", 1}}), msym("b"),
               msym("q", {0, -1})};
  m.lhs.den = {mono(-1, {{"A", 1}}), mono(1, {{"A", 2}, {"q", 1}, {"b", -1}}),
               mono(1, {{"A", 2}, {"q", {1, 1}}})};
  m.lhs.arg = mono(1, {{"q", {1, 1}}, {"A", 1}, {"b", -1}});  // q^{n+1} sqrt(a)/b
  m.lhs.terminating_index = 3;
  // (aq, q sqrt(a)/b; q)_n / (q sqrt(a), aq/b; q)_n
  m.rhs = ediv(emul({epoch(mono(1, {{"A", 2}, {"q", 1}}), 1, {0, 1}),
                     epoch(mono(1, {{"q", 1}, {"A", 1}, {"b", -1}}), 1, {0, 1})}),
               emul({epoch(mono(1, {{"q", 1}, {"A", 1}}), 1, {0, 1}),
                     epoch(mono(1, {{"A", 2}, {"q", 1}, {"b", -1}}), 1, {0, 1})}));
  rec.members = {m};

  // -(1-sqrt a)(1+q sqrt a)(1-aq)(1-b) q^n sqrt(a)/b
  //   / [(1-aq/b)(1-aq^n)(1-aq^{n+1})]
  auto mult = [] {
    return ediv(
        emul({emono(mono(-1, {{"q", {0, 1}}, {"A", 1}, {"b", -1}})),
              one_minus(msym("A")), one_plus(mono(1, {{"q", 1}, {"A", 1}})),
              one_minus(mono(1, {{"A", 2}, {"q", 1}})), one_minus(msym("b"))}),
        emul({one_minus(mono(1, {{"A", 2}, {"q", 1}, {"b", -1}})),
              one_minus(mono(1, {{"A", 2}, {"q", {0, 1}}})),
              one_minus(mono(1, {{"A", 2}, {"q", {1, 1}}}))}));
  };
  std::map<std::string, Monomial> sigma = {
      {"A", mono(1, {{"A", 1}, {"q", 1}})},  // a -> a q^2
      {"b", mono(1, {{"b", 1}, {"q", 1}})},
  };
  rec.recurrences = {
      make_rec("2.7", false, {0, 0}, {0, 1}, {0, 1}, mult(), sigma),
      make_rec("2.8", true, {0, 0}, {0, 1}, {0, 1}, mult(), sigma),
  };
  return rec;
}

// ---- T1.5: quadratic-base 4phi3 ---------------------------------------------

IdentityRecord family_t15() {
  IdentityRecord rec;
  rec.family_id = "T1.5";
  rec.name = "quadratic-base 4phi3";
  rec.source = "Gasper & Rahman, Basic Hypergeometric Series, p. 110, Ex. 3.34";
  rec.symbols = {{"q", true, ""}, {"a", false, ""}, {"c", false, ""}};
  rec.singh_chain = true;  // certified by the base-change chain, no recurrence

  IdentityMember m;
  m.id = "T1.5";
  m.lhs.base_exponent = 2;  // series in base q^2
  m.lhs.num = {msym("q", {0, -2}), msym("c", 2), msym("a"),
               mono(1, {{"a", 1}, {"q", 1}})};
  m.lhs.den = {mono(1, {{"a", 2}, {"q", 2}}), mono(1, {{"c", 1}, {"q", {0, -1}}}),
               mono(1, {{"c", 1}, {"q", {1, -1}}})};
  m.lhs.arg = msym("q", 2);
  m.lhs.terminating_index = 0;
  // (-q, aq/c; q)_n / (-aq, q/c; q)_n  -- product side in base q
  m.rhs = ediv(emul({epoch(mono(-1, {{"q", 1}}), 1, {0, 1}),
                     epoch(mono(1, {{"a", 1}, {"q", 1}, {"c", -1}}), 1, {0, 1})}),
               emul({epoch(mono(-1, {{"a", 1}, {"q", 1}}), 1, {0, 1}),
                     epoch(mono(1, {{"q", 1}, {"c", -1}}), 1, {0, 1})}));
  rec.members = {m};
  return rec;
}

// ---- T1.6: coupled 4phi3 pair (Andrews; Li-Chu) ----------------------------

IdentityRecord family_t16() {
  IdentityRecord rec;
  rec.family_id = "T1.6";
  rec.name = "Andrews/Li-Chu coupled 4phi3";
  rec.source = "Andrews 1996, eqs. (7.7)/(7.6); Li & Chu 2019, eqs. (2)/(3)";
  // t^2 = q; series in base q, product sides in base sqrt(q) = t
  rec.symbols = {{"t", true, "q"}, {"b", false, ""}, {"d", false, ""}};

  IdentityMember ma;
  ma.id = "T1.6a";
  ma.lhs.base_exponent = 2;
  // num: q^{-n}, b, b sqrt(q), d^2 q^n; den: dq, d sqrt(q), b^2
  ma.lhs.num = {msym("t", {0, -2}), msym("b"), mono(1, {{"b", 1}, {"t", 1}}),
                mono(1, {{"d", 2}, {"t", {0, 2}}})};
  ma.lhs.den = {mono(1, {{"d", 1}, {"t", 2}}), mono(1, {{"d", 1}, {"t", 1}}),
                msym("b", 2)};
  ma.lhs.arg = msym("t", 2);
  ma.lhs.terminating_index = 0;
  // b^n (1-d) (-sqrt q, d sqrt(q)/b; sqrt q)_n / ((1 - q^n d)(-b, d; sqrt q)_n)
  ma.rhs = ediv(
      emul({emono(msym("b", {0, 1})), one_minus(msym("d")),
            epoch(mono(-1, {{"t", 1}}), 1, {0, 1}),
            epoch(mono(1, {{"d", 1}, {"t", 1}, {"b", -1}}), 1, {0, 1})}),
      emul({one_minus(mono(1, {{"d", 1}, {"t", {0, 2}}})),
            epoch(mono(-1, {{"b", 1}}), 1, {0, 1}), epoch(msym("d"), 1, {0, 1})}));

  IdentityMember mb;
  mb.id = "T1.6b";
  mb.lhs.base_exponent = 2;
  // num: q^{-n}, b, b sqrt(q), d^2 q^{n+1}; den: dq, d sqrt(q), b^2 q
  mb.lhs.num = {msym("t", {0, -2}), msym("b"), mono(1, {{"b", 1}, {"t", 1}}),
                mono(1, {{"d", 2}, {"t", {2, 2}}})};
  mb.lhs.den = {mono(1, {{"d", 1}, {"t", 2}}), mono(1, {{"d", 1}, {"t", 1}}),
                mono(1, {{"b", 2}, {"t", 2}})};
  mb.lhs.arg = msym("t", 2);
  mb.lhs.terminating_index = 0;
  // b^n (-sqrt q, d sqrt(q)/b; sqrt q)_n / (-b sqrt q, d sqrt q; sqrt q)_n
  mb.rhs = ediv(
      emul({emono(msym("b", {0, 1})), epoch(mono(-1, {{"t", 1}}), 1, {0, 1}),
            epoch(mono(1, {{"d", 1}, {"t", 1}, {"b", -1}}), 1, {0, 1})}),
      emul({epoch(mono(-1, {{"b", 1}, {"t", 1}}), 1, {0, 1}),
            epoch(mono(1, {{"d", 1}, {"t", 1}}), 1, {0, 1})}));
  rec.members = {ma, mb};

  // shared denominator (1+b)(1+b sqrt q)(1-dq)(1-d sqrt q)
  auto coupled_den = [] {
    return emul({one_plus(msym("b")), one_plus(mono(1, {{"b", 1}, {"t", 1}})),
                 one_minus(mono(1, {{"d", 1}, {"t", 2}})),
                 one_minus(mono(1, {{"d", 1}, {"t", 1}}))});
  };
  // B_n - A_n = -q (b^2 - d^2 q^n)(1 - q^{-n}) / [...] * A_{n-1}(bq, dq)
  auto mult_ba = [&] {
    return ediv(emul({emono(mono(-1, {{"t", 2}})),
                      eadd({emono(msym("b", 2)),
                            emono(mono(-1, {{"d", 2}, {"t", {0, 2}}}))}),
                      one_minus(msym("t", {0, -2}))}),
                coupled_den());
  };
  // A_n - B_{n-1} = q (1 - d^2 q^n)(b^2 - q^{-n}) / [...] * A_{n-1}(bq, dq)
  auto mult_ab = [&] {
    return ediv(emul({emono(msym("t", 2)),
                      one_minus(mono(1, {{"d", 2}, {"t", {0, 2}}})),
                      eadd({emono(msym("b", 2)),
                            emono(mono(-1, {{"t", {0, -2}}}))})}),
                coupled_den());
  };
  std::map<std::string, Monomial> sigma = {
      {"b", mono(1, {{"b", 1}, {"t", 2}})},
      {"d", mono(1, {{"d", 1}, {"t", 2}})},
  };
  rec.recurrences = {
      make_rec("2.9", false, {1, 0}, {0, 0}, {0, 1}, mult_ba(), sigma),
      make_rec("2.10", false, {0, 0}, {1, 1}, {0, 1}, mult_ab(), sigma),
      make_rec("2.11", true, {1, 0}, {0, 0}, {0, 1}, mult_ba(), sigma),
      make_rec("2.12", true, {0, 0}, {1, 1}, {0, 1}, mult_ab(), sigma),
  };
  return rec;
}

// ---- T1.7: Rogers 6phi5 ------------------------------------------------------

IdentityRecord family_t17() {
  IdentityRecord rec;
  rec.family_id = "T1.7";
  rec.name = "Rogers 6phi5";
  rec.source = "Gasper & Rahman, Basic Hypergeometric Series, II.21";
  rec.symbols = {{"q", true, ""}, {"A", false, "a"}, {"b", false, ""}, {"c", false, ""}};

  IdentityMember m;
  m.id = "T1.7";
  m.lhs.base_exponent = 1;
  // num: a, q sqrt a, -q sqrt a, b, c, q^{-n}
  m.lhs.num = {msym("A", 2), mono(1, {{"q", 1}, {"A", 1}}),
               mono(-1, {{"q", 1}, {"A", 1}}), msym("b"), msym("c"),
               msym("q", {0, -1})};
  // den: sqrt a, -sqrt a, aq/b, aq/c, aq^{n+1}
  m.lhs.den = {msym("A"), mono(-1, {{"A", 1}}),
               mono(1, {{"A", 2}, {"q", 1}, {"b", -1}}),
               mono(1, {{"A", 2}, {"q", 1}, {"c", -1}}),
               mono(1, {{"A", 2}, {"q", {1, 1}}})};
  m.lhs.arg = mono(1, {{"A", 2}, {"q", {1, 1}}, {"b", -1}, {"c", -1}});
  m.lhs.terminating_index = 5;
  // (aq, aq/bc; q)_n / (aq/b, aq/c; q)_n
  m.rhs = ediv(
      emul({epoch(mono(1, {{"A", 2}, {"q", 1}}), 1, {0, 1}),
            epoch(mono(1, {{"A", 2}, {"q", 1}, {"b", -1}, {"c", -1}}), 1, {0, 1})}),
      emul({epoch(mono(1, {{"A", 2}, {"q", 1}, {"b", -1}}), 1, {0, 1}),
            epoch(mono(1, {{"A", 2}, {"q", 1}, {"c", -1}}), 1, {0, 1})}));
  rec.members = {m};

  // -(1-aq)(1-aq^2)(1-b)(1-c) a q^n / bc
  //   / [(1-aq^n)(1-aq^{n+1})(1-aq/b)(1-aq/c)]
  auto mult = [] {
    return ediv(
        emul({emono(mono(-1, {{"A", 2}, {"q", {0, 1}}, {"b", -1}, {"c", -1}})),
              one_minus(mono(1, {{"A", 2}, {"q", 1}})),
              one_minus(mono(1, {{"A", 2}, {"q", 2}})), one_minus(msym("b")),
              one_minus(msym("c"))}),
        emul({one_minus(mono(1, {{"A", 2}, {"q", {0, 1}}})),
              one_minus(mono(1, {{"A", 2}, {"q", {1, 1}}})),
              one_minus(mono(1, {{"A", 2}, {"q", 1}, {"b", -1}})),
              one_minus(mono(1, {{"A", 2}, {"q", 1}, {"c", -1}}))}));
  };
  std::map<std::string, Monomial> sigma = {
      {"A", mono(1, {{"A", 1}, {"q", 1}})},  // a -> a q^2
      {"b", mono(1, {{"b", 1}, {"q", 1}})},
      {"c", mono(1, {{"c", 1}, {"q", 1}})},
  };
  rec.recurrences = {
      make_rec("2.13", false, {0, 0}, {0, 1}, {0, 1}, mult(), sigma),
      make_rec("2.14", true, {0, 0}, {0, 1}, {0, 1}, mult(), sigma),
  };
  return rec;
}

// ---- T1.8: Jackson 8phi7 -----------------------------------------------------

IdentityRecord family_t18() {
  IdentityRecord rec;
  rec.family_id = "T1.8";
  rec.name = "Jackson 8phi7";
  rec.source = "Gasper & Rahman, Basic Hypergeometric Series, II.22";
  rec.symbols = {{"q", true, ""}, {"A", false, "a"}, {"b", false, ""},
                 {"c", false, ""}, {"d", false, ""}, {"e", false, ""}};
  // a^2 q = bcde q^{-n}, solved for e (so e = a^2 q^{n+1} / bcd)
  rec.constraints = {make_constraint(
      mono(1, {{"A", 4}, {"q", 1}}),
      mono(1, {{"b", 1}, {"c", 1}, {"d", 1}, {"e", 1}, {"q", {0, -1}}}), "e")};

  IdentityMember m;
  m.id = "T1.8";
  m.lhs.base_exponent = 1;
  // num: a, q sqrt a, -q sqrt a, b, c, d, e, q^{-n}
  m.lhs.num = {msym("A", 2), mono(1, {{"q", 1}, {"A", 1}}),
               mono(-1, {{"q", 1}, {"A", 1}}), msym("b"), msym("c"), msym("d"),
               msym("e"), msym("q", {0, -1})};
  // den: sqrt a, -sqrt a, aq/b, aq/c, aq/d, aq/e, aq^{n+1}
  m.lhs.den = {msym("A"), mono(-1, {{"A", 1}}),
               mono(1, {{"A", 2}, {"q", 1}, {"b", -1}}),
               mono(1, {{"A", 2}, {"q", 1}, {"c", -1}}),
               mono(1, {{"A", 2}, {"q", 1}, {"d", -1}}),
               mono(1, {{"A", 2}, {"q", 1}, {"e", -1}}),
               mono(1, {{"A", 2}, {"q", {1, 1}}})};
  m.lhs.arg = msym("q");
  m.lhs.terminating_index = 7;
  // (aq, aq/bc, aq/bd, aq/cd; q)_n / (aq/b, aq/c, aq/d, aq/bcd; q)_n
  m.rhs = ediv(
      emul({epoch(mono(1, {{"A", 2}, {"q", 1}}), 1, {0, 1}),
            epoch(mono(1, {{"A", 2}, {"q", 1}, {"b", -1}, {"c", -1}}), 1, {0, 1}),
            epoch(mono(1, {{"A", 2}, {"q", 1}, {"b", -1}, {"d", -1}}), 1, {0, 1}),
            epoch(mono(1, {{"A", 2}, {"q", 1}, {"c", -1}, {"d", -1}}), 1, {0, 1})}),
      emul({epoch(mono(1, {{"A", 2}, {"q", 1}, {"b", -1}}), 1, {0, 1}),
            epoch(mono(1, {{"A", 2}, {"q", 1}, {"c", -1}}), 1, {0, 1}),
            epoch(mono(1, {{"A", 2}, {"q", 1}, {"d", -1}}), 1, {0, 1}),
            epoch(mono(1, {{"A", 2}, {"q", 1}, {"b", -1}, {"c", -1}, {"d", -1}}), 1,
                  {0, 1})}));
  rec.members = {m};

  // phi_n: -q (1-aq)(1-aq^2)(1-b)(1-c)(1-d)
  //          (q^{-n} - a^2 q^n/bcd + a q^n - bcd q^{-n}/a)
  //        / [(1-aq^n)(1-aq^{n+1})(1-aq/b)(1-aq/c)(1-aq/d)
  //           (1-bcd q^{-n}/a)(1-bcd q^{-n+1}/a)]
  auto mult = [] {
    return ediv(
        emul({emono(mono(-1, {{"q", 1}})),
              one_minus(mono(1, {{"A", 2}, {"q", 1}})),
              one_minus(mono(1, {{"A", 2}, {"q", 2}})), one_minus(msym("b")),
              one_minus(msym("c")), one_minus(msym("d")),
              eadd({emono(msym("q", {0, -1})),
                    emono(mono(-1, {{"A", 4}, {"q", {0, 1}}, {"b", -1}, {"c", -1}, {"d", -1}})),
                    emono(mono(1, {{"A", 2}, {"q", {0, 1}}})),
                    emono(mono(-1, {{"b", 1}, {"c", 1}, {"d", 1}, {"q", {0, -1}}, {"A", -2}}))})}),
        emul({one_minus(mono(1, {{"A", 2}, {"q", {0, 1}}})),
              one_minus(mono(1, {{"A", 2}, {"q", {1, 1}}})),
              one_minus(mono(1, {{"A", 2}, {"q", 1}, {"b", -1}})),
              one_minus(mono(1, {{"A", 2}, {"q", 1}, {"c", -1}})),
              one_minus(mono(1, {{"A", 2}, {"q", 1}, {"d", -1}})),
              one_minus(mono(1, {{"b", 1}, {"c", 1}, {"d", 1}, {"q", {0, -1}}, {"A", -2}})),
              one_minus(mono(1, {{"b", 1}, {"c", 1}, {"d", 1}, {"q", {1, -1}}, {"A", -2}}))}));
  };
  std::map<std::string, Monomial> sigma = {
      {"A", mono(1, {{"A", 1}, {"q", 1}})},  // a -> a q^2
      {"b", mono(1, {{"b", 1}, {"q", 1}})},
      {"c", mono(1, {{"c", 1}, {"q", 1}})},
      {"d", mono(1, {{"d", 1}, {"q", 1}})},
  };
  rec.recurrences = {
      make_rec("2.15", false, {0, 0}, {0, 1}, {0, 1}, mult(), sigma),
      make_rec("2.16", true, {0, 0}, {0, 1}, {0, 1}, mult(), sigma),
  };
  return rec;
}

// ---- T1.9: Andrews-Berkovich coupled 10phi9 ---------------------------------

// The 24 printed terms of the chi-tilde Laurent polynomial, with
// a = A^2, k = K^2, q = t^2, sqrt(k) = K. Encoded term by term so a
// mismatch is localizable.
ExprPtr chi_tilde_sum() {
  std::vector<ExprPtr> terms = {
      emono(mono(-1, {{"K", 4}, {"t", {-4, 2}}, {"A", -4}})),  // -k^2 q^{n-2}/a^2
      emono(mono(-1, {{"K", 4}, {"t", {-2, 2}}, {"A", -4}})),  // -k^2 q^{n-1}/a^2
      emono(mono(1, {{"K", 8}, {"t", {-6, 4}}, {"A", -8}})),   // +k^4 q^{2n-3}/a^4
      emono(mono(-1, {{"A", 2}, {"t", {0, 2}}})),              // -a q^n
      emono(mono(1, {{"K", 4}, {"t", {-2, 4}}, {"A", -2}})),   // +k^2 q^{2n-1}/a
      emono(mono(-1, {{"K", 8}, {"t", {-6, 6}}, {"A", -6}})),  // -k^4 q^{3n-3}/a^3
      emono(mono(-1, {{"K", 1}})),                             // -sqrt k
      emono(mono(1, {{"K", 5}, {"t", {-4, 2}}, {"A", -4}})),   // +k^2 q^{n-2} sqrt(k)/a^2
      emono(mono(-1, {{"K", 9}, {"t", {-6, 4}}, {"A", -8}})),  // -k^4 q^{2n-3} sqrt(k)/a^4
      emono(mono(1, {{"A", 2}, {"K", 1}, {"t", {0, 2}}})),     // +a q^n sqrt(k)
      emono(mono(-1, {{"K", 5}, {"t", {-4, 4}}, {"A", -2}})),  // -k^2 q^{2n-2} sqrt(k)/a
      emono(mono(-1, {{"K", 5}, {"t", {-2, 4}}, {"A", -2}})),  // -k^2 q^{2n-1} sqrt(k)/a
      emono(mono(1, {{"K", 2}, {"t", {-2, 2}}, {"A", -2}})),   // +k q^{n-1}/a
      emono(mono(1, {{"K", 4}, {"A", -4}, {"t", -2}})),        // +k^2 / a^2 q
      emono(mono(-1, {{"K", 6}, {"t", {-4, 2}}, {"A", -6}})),  // -k^3 q^{n-2}/a^3
      emono(mono(1, {{"K", 2}, {"t", {-2, 2}}})),              // +k q^{n-1}
      emono(mono(-1, {{"K", 6}, {"t", {-4, 2}}, {"A", -4}})),  // -k^3 q^{n-2}/a^2
      emono(mono(1, {{"K", 8}, {"t", {-6, 4}}, {"A", -6}})),   // +k^4 q^{2n-3}/a^3
      emono(mono(1, {{"K", 1}, {"t", {0, 2}}})),               // +q^n sqrt(k)
      emono(mono(-1, {{"K", 3}, {"t", {-2, 4}}, {"A", -2}})),  // -k q^{2n-1} sqrt(k)/a
      emono(mono(1, {{"K", 7}, {"t", {-4, 4}}, {"A", -6}})),   // +k^3 q^{2n-2} sqrt(k)/a^3
      emono(mono(-1, {{"K", 3}, {"t", {-2, 4}}})),             // -k q^{2n-1} sqrt(k)
      emono(mono(1, {{"K", 5}, {"t", {-4, 6}}, {"A", -2}})),   // +k^2 q^{3n-2} sqrt(k)/a
      emono(mono(1, {{"K", 7}, {"t", {-4, 4}}, {"A", -4}})),   // +k^3 q^{2n-2} sqrt(k)/a^2
  };
  return eadd(std::move(terms));
}

IdentityRecord family_t19() {
  IdentityRecord rec;
  rec.family_id = "T1.9";
  rec.name = "Andrews-Berkovich 10phi9";
  rec.source = "Andrews & Berkovich 2002, eqs. (3.1)/(3.2)";
  rec.symbols = {{"t", true, "q"}, {"A", false, "a"}, {"K", false, "k"}};

  IdentityMember ma;
  ma.id = "T1.9a";
  ma.lhs.base_exponent = 2;
  // num: a, q sqrt a, -q sqrt a, a sqrt(q/k), -a sqrt(q/k), aq/sqrt k,
  //      -aq/sqrt k, k/aq, k q^n, q^{-n}
  ma.lhs.num = {msym("A", 2),
                mono(1, {{"t", 2}, {"A", 1}}),
                mono(-1, {{"t", 2}, {"A", 1}}),
                mono(1, {{"A", 2}, {"t", 1}, {"K", -1}}),
                mono(-1, {{"A", 2}, {"t", 1}, {"K", -1}}),
                mono(1, {{"A", 2}, {"t", 2}, {"K", -1}}),
                mono(-1, {{"A", 2}, {"t", 2}, {"K", -1}}),
                mono(1, {{"K", 2}, {"A", -2}, {"t", -2}}),
                mono(1, {{"K", 2}, {"t", {0, 2}}}),
                msym("t", {0, -2})};
  // den: sqrt a, -sqrt a, sqrt(kq), -sqrt(kq), sqrt k, -sqrt k, a^2 q^2/k,
  //      a q^{-n+1}/k, a q^{n+1}
  ma.lhs.den = {msym("A"),
                mono(-1, {{"A", 1}}),
                mono(1, {{"K", 1}, {"t", 1}}),
                mono(-1, {{"K", 1}, {"t", 1}}),
                msym("K"),
                mono(-1, {{"K", 1}}),
                mono(1, {{"A", 4}, {"t", 4}, {"K", -2}}),
                mono(1, {{"A", 2}, {"t", {2, -2}}, {"K", -2}}),
                mono(1, {{"A", 2}, {"t", {2, 2}}})};
  ma.lhs.arg = msym("t", 2);
  ma.lhs.terminating_index = 9;
  // (aq, k^2/a^2 q; q)_n / (k, k/a; q)_n
  ma.rhs = ediv(
      emul({epoch(mono(1, {{"A", 2}, {"t", 2}}), 2, {0, 1}),
            epoch(mono(1, {{"K", 4}, {"A", -4}, {"t", -2}}), 2, {0, 1})}),
      emul({epoch(msym("K", 2), 2, {0, 1}),
            epoch(mono(1, {{"K", 2}, {"A", -2}}), 2, {0, 1})}));

  IdentityMember mb;
  mb.id = "T1.9b";
  mb.lhs.base_exponent = 2;
  // num: a, q sqrt a, -q sqrt a, a sqrt(q/k), -a sqrt(q/k), a/sqrt k,
  //      -aq/sqrt k, k/a, k q^n, q^{-n}
  mb.lhs.num = {msym("A", 2),
                mono(1, {{"t", 2}, {"A", 1}}),
                mono(-1, {{"t", 2}, {"A", 1}}),
                mono(1, {{"A", 2}, {"t", 1}, {"K", -1}}),
                mono(-1, {{"A", 2}, {"t", 1}, {"K", -1}}),
                mono(1, {{"A", 2}, {"K", -1}}),
                mono(-1, {{"A", 2}, {"t", 2}, {"K", -1}}),
                mono(1, {{"K", 2}, {"A", -2}}),
                mono(1, {{"K", 2}, {"t", {0, 2}}}),
                msym("t", {0, -2})};
  // den: sqrt a, -sqrt a, sqrt(kq), -sqrt(kq), q sqrt k, -sqrt k, a^2 q/k,
  //      a q^{-n+1}/k, a q^{n+1}
  mb.lhs.den = {msym("A"),
                mono(-1, {{"A", 1}}),
                mono(1, {{"K", 1}, {"t", 1}}),
                mono(-1, {{"K", 1}, {"t", 1}}),
                mono(1, {{"t", 2}, {"K", 1}}),
                mono(-1, {{"K", 1}}),
                mono(1, {{"A", 4}, {"t", 2}, {"K", -2}}),
                mono(1, {{"A", 2}, {"t", {2, -2}}, {"K", -2}}),
                mono(1, {{"A", 2}, {"t", {2, 2}}})};
  mb.lhs.arg = msym("t", 2);
  mb.lhs.terminating_index = 9;
  // (aq, sqrt k, k^2/a^2; q)_n / (k, k/a, q sqrt k; q)_n
  mb.rhs = ediv(
      emul({epoch(mono(1, {{"A", 2}, {"t", 2}}), 2, {0, 1}),
            epoch(msym("K"), 2, {0, 1}),
            epoch(mono(1, {{"K", 4}, {"A", -4}}), 2, {0, 1})}),
      emul({epoch(msym("K", 2), 2, {0, 1}),
            epoch(mono(1, {{"K", 2}, {"A", -2}}), 2, {0, 1}),
            epoch(mono(1, {{"t", 2}, {"K", 1}}), 2, {0, 1})}));
  rec.members = {ma, mb};

  // psi_n: q (1-aq)(1-aq^2)(1-kq^n)(1-q^{-n})
  //          (sqrt k - a^2 q/k + a/sqrt k - k/aq)
  //        / [(1-k)(1-kq)(1-q sqrt k)(1-aq/sqrt k)(1-aq^{-n+1}/k)(1-aq^{n+1})]
  auto psi_core_num = [] {
    return eadd({emono(msym("K")),
                 emono(mono(-1, {{"A", 4}, {"t", 2}, {"K", -2}})),
                 emono(mono(1, {{"A", 2}, {"K", -1}})),
                 emono(mono(-1, {{"K", 2}, {"A", -2}, {"t", -2}}))});
  };
  auto psi_sum = [&] {
    return ediv(emul({emono(msym("t", 2)),
                      one_minus(mono(1, {{"A", 2}, {"t", 2}})),
                      one_minus(mono(1, {{"A", 2}, {"t", 4}})),
                      one_minus(mono(1, {{"K", 2}, {"t", {0, 2}}})),
                      one_minus(msym("t", {0, -2})), psi_core_num()}),
                emul({one_minus(msym("K", 2)),
                      one_minus(mono(1, {{"K", 2}, {"t", 2}})),
                      one_minus(mono(1, {{"t", 2}, {"K", 1}})),
                      one_minus(mono(1, {{"A", 2}, {"t", 2}, {"K", -1}})),
                      one_minus(mono(1, {{"A", 2}, {"t", {2, -2}}, {"K", -2}})),
                      one_minus(mono(1, {{"A", 2}, {"t", {2, 2}}}))}));
  };
  // psi'_n, printed as two stacked fractions
  auto psi_closed = [&] {
    return emul(
        {ediv(emul({emono(msym("t", 2)),
                    one_minus(mono(1, {{"A", 2}, {"t", 2}})),
                    one_minus(mono(1, {{"A", 2}, {"t", 4}})),
                    one_minus(mono(1, {{"K", 2}, {"t", {0, 2}}})),
                    one_minus(msym("t", {0, -2}))}),
              emul({one_minus(msym("K", 2)),
                    one_minus(mono(1, {{"K", 2}, {"t", 2}})),
                    one_minus(mono(1, {{"t", 2}, {"K", 1}})),
                    one_minus(mono(1, {{"A", 2}, {"t", 2}, {"K", -1}}))})),
         ediv(psi_core_num(),
              emul({one_minus(mono(1, {{"A", 2}, {"t", {2, -2}}, {"K", -2}})),
                    one_minus(mono(1, {{"A", 2}, {"t", {2, 2}}}))}))});
  };
  // chi_n: (1-aq)(1-aq^2)(1-kq^n)
  //        / [(1-k)(1-q sqrt k)(1-kq)(1-aq^n)(1-aq^{n+1})]
  //        * chi-tilde / [(1-k^2 q^{n-2}/a^2)(1-k q^{n-1}/a)]
  auto chi = [&] {
    return emul(
        {ediv(emul({one_minus(mono(1, {{"A", 2}, {"t", 2}})),
                    one_minus(mono(1, {{"A", 2}, {"t", 4}})),
                    one_minus(mono(1, {{"K", 2}, {"t", {0, 2}}}))}),
              emul({one_minus(msym("K", 2)),
                    one_minus(mono(1, {{"t", 2}, {"K", 1}})),
                    one_minus(mono(1, {{"K", 2}, {"t", 2}})),
                    one_minus(mono(1, {{"A", 2}, {"t", {0, 2}}})),
                    one_minus(mono(1, {{"A", 2}, {"t", {2, 2}}}))})),
         ediv(chi_tilde_sum(),
              emul({one_minus(mono(1, {{"K", 4}, {"t", {-4, 2}}, {"A", -4}})),
                    one_minus(mono(1, {{"K", 2}, {"t", {-2, 2}}, {"A", -2}}))}))});
  };
  std::map<std::string, Monomial> sigma = {
      {"A", mono(1, {{"A", 1}, {"t", 2}})},  // a -> a q^2
      {"K", mono(1, {{"K", 1}, {"t", 2}})},  // k -> k q^2
  };
  rec.recurrences = {
      make_rec("2.17", false, {0, 0}, {1, 0}, {1, 1}, psi_sum(), sigma),
      make_rec("2.18", false, {1, 0}, {0, 1}, {1, 1}, chi(), sigma),
      make_rec("2.19", true, {0, 0}, {1, 0}, {1, 1}, psi_closed(), sigma),
      make_rec("2.20", true, {1, 0}, {0, 1}, {1, 1}, chi(), sigma),
  };
  return rec;
}

std::vector<IdentityRecord> build_catalog() {
  std::vector<IdentityRecord> out = {family_t11(), family_t12(), family_t13(),
                                     family_t14(), family_t15(), family_t16(),
                                     family_t17(), family_t18(), family_t19()};
  for (auto& rec : out) finalize_record(rec);
  return out;
}

}  // namespace

const std::vector<IdentityRecord>& catalog() {
  static const std::vector<IdentityRecord> entries = build_catalog();
  return entries;
}

EntryRef get_identity(const std::string& id) {
  for (const auto& fam : catalog()) {
    if (fam.family_id == id) return {&fam, 0};
    int idx = fam.member_index(id);
    if (idx >= 0) return {&fam, idx};
  }
  throw UnknownIdentity(id);
}

std::vector<std::string> catalog_ids() {
  std::vector<std::string> out;
  for (const auto& fam : catalog())
    for (const auto& mem : fam.members) out.push_back(mem.id);
  return out;
}

RecurrenceRef get_recurrence(const std::string& rec_id) {
  for (const auto& fam : catalog())
    for (const auto& r : fam.recurrences)
      if (r.id == rec_id) return {&fam, &r};
  throw UnknownIdentity("recurrence " + rec_id);
}

std::vector<std::string> recurrence_ids() {
  std::vector<std::string> out;
  for (const auto& fam : catalog())
    for (const auto& r : fam.recurrences) out.push_back(r.id);
  return out;
}

Point resolve_constraints(const IdentityRecord& rec, const Assignment& partial, long n) {
  Point p = materialize_point(rec, partial, n);
  for (const auto& c : rec.constraints) {
    if (mono_eval(c.lhs, p) != mono_eval(c.rhs, p))
      throw UnsolvableConstraint("resolved point violates " + c.lhs.str() + " = " +
                                 c.rhs.str());
  }
  return p;
}

Rational lhs_value(const EntryRef& entry, const Point& p) {
  EvalContext ctx{p, entry.family->base_symbol()};
  return phi_terminating_eval(entry.mem().lhs, ctx);
}

Rational rhs_value(const EntryRef& entry, const Point& p) {
  EvalContext ctx{p, entry.family->base_symbol()};
  return expr_eval(entry.mem().rhs, ctx);
}

}  // namespace qpfaff
