#include <doctest.h>

#include <algorithm>
#include <set>

#include "mlms/bivaluation.hpp"
#include "mlms/error.hpp"
#include "mlms/parser.hpp"

using namespace mlms;

namespace {

PartialBivaluation induced(LogicId l, const std::vector<Formula>& fs, const Assignment& a) {
  PartialBivaluation rho;
  for (const auto& f : subformula_closure(fs)) rho[f] = snapshot_of(evaluate(MatrixLogic::get(l), f, a)).z1;
  return rho;
}

bool violates(const ClauseVerdict& v, ClauseId c) {
  return std::any_of(v.violations.begin(), v.violations.end(), [&](const ClauseViolation& x) { return x.clause == c; });
}

}  // namespace

TEST_CASE("clause names and readings") {
  CHECK(to_string(ClauseId::v17) == "v17");
  CHECK(to_string(ClauseId::bot) == "bot");
  for (auto r : {NegationReading::printed, NegationReading::classical, NegationReading::classical_or})
    CHECK(parse_reading(to_string(r)) == r);
  CHECK(parse_reading("classical-or") == NegationReading::classical_or);
  CHECK_FALSE(parse_reading("other").has_value());
}

TEST_CASE("clause sets") {
  auto has = [](LogicId l, ClauseId c, NegationReading r = NegationReading::printed) {
    const auto s = clause_set(l, r);
    return std::find(s.begin(), s.end(), c) != s.end();
  };
  CHECK(has(LogicId::FDE, ClauseId::v8));
  CHECK(has(LogicId::LETK, ClauseId::v17));
  CHECK(has(LogicId::K3, ClauseId::v13));
  CHECK(has(LogicId::LP, ClauseId::v12));
  CHECK_FALSE(has(LogicId::CLW, ClauseId::v2));
  CHECK(has(LogicId::CLW, ClauseId::v2, NegationReading::classical_or));
  CHECK(clause_set(LogicId::FDE, NegationReading::classical) == clause_set(LogicId::FDE));
}

TEST_CASE("a true circle violates the classical weak clauses") {
  const Formula p = Formula::atom("p");
  PartialBivaluation rho = induced(LogicId::CLW, {p}, {{"p", Value::T0}});
  rho[Formula::circ(p)] = true;
  rho[Formula::neg(Formula::circ(p))] = false;
  const auto v = check_clauses(LogicId::CLW, rho);
  CHECK_FALSE(v.ok);
  CHECK(violates(v, ClauseId::v8));
}

TEST_CASE("a false double circle violates the LETK clauses") {
  const Formula cp = Formula::circ(Formula::atom("p"));
  PartialBivaluation rho = induced(LogicId::LETK, {cp}, {{"p", Value::b}});
  REQUIRE(rho.at(Formula::circ(cp)));
  rho[Formula::circ(cp)] = false;
  const auto v = check_clauses(LogicId::LETK, rho);
  CHECK(violates(v, ClauseId::v17));
  for (const auto& x : v.violations) CHECK_FALSE(describe(x).empty());
}

TEST_CASE("the all-zero assignment on the closure of p fails FDE") {
  PartialBivaluation rho;
  for (const auto& f : subformula_closure({Formula::atom("p")})) rho[f] = false;
  const auto v = check_clauses(LogicId::FDE, rho);
  CHECK_FALSE(v.ok);
  CHECK(violates(v, ClauseId::v9));
}

TEST_CASE("domains must be closed under subformulas") {
  PartialBivaluation rho;
  rho[parse("p & q")] = true;
  rho[parse("p")] = true;
  try {
    check_clauses(LogicId::FDE, rho);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::domain_not_closed);
  }
}

TEST_CASE("snapshots") {
  const Formula p = Formula::atom("p");
  auto rho = [&](bool a, bool b, bool c) {
    return PartialBivaluation{{p, a}, {Formula::neg(p), b}, {Formula::circ(p), c}};
  };
  CHECK(snapshot_of(rho(true, false, true), p) == Value::T);
  CHECK(snapshot_of(rho(true, false, false), p) == Value::T0);
  CHECK(snapshot_of(rho(false, false, false), p) == Value::n);
  try {
    snapshot_of(rho(true, true, true), p);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::illegal_snapshot);
  }
  CHECK_THROWS_AS(snapshot_of(rho(false, false, true), p), Error);
  try {
    snapshot_of(PartialBivaluation{{p, true}}, p);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::unknown_atom);
  }
}

TEST_CASE("matrix valuations induce clause-satisfying assignments") {
  const auto letk = induced(LogicId::LETK, {parse("p -> q")}, {{"p", Value::b}, {"q", Value::n}});
  CHECK(check_clauses(LogicId::LETK, letk).ok);

  const auto fs = formula_corpus({"p", "q"}, 1);
  for (LogicId l : kAllLogics) {
    const auto reading = l == LogicId::CLW || l == LogicId::CLS ? NegationReading::classical_or : NegationReading::printed;
    for (Value x : MatrixLogic::get(l).lattice->elements())
      for (Value y : MatrixLogic::get(l).lattice->elements()) {
        const auto rho = induced(l, fs, {{"p", x}, {"q", y}});
        CAPTURE(to_string(l));
        CHECK(check_clauses(l, rho, reading).ok);
        for (const auto& f : fs) CHECK(snapshot_of(rho, f) == evaluate(MatrixLogic::get(l), f, {{"p", x}, {"q", y}}));
        if (l == LogicId::FDE)
          for (const auto& [f, bit] : rho)
            if (f.op() == Op::circ) CHECK_FALSE(bit);
      }
  }
}

TEST_CASE("bottom has the bottom snapshot") {
  for (LogicId l : kAllLogics) {
    enumerate_bivaluations(l, {Formula::bottom()}, NegationReading::classical_or, 100,
                           [&](const PartialBivaluation& rho) { CHECK(snapshot_of(rho, Formula::bottom()) == MatrixLogic::get(l).bottom()); });
  }
}

TEST_CASE("bivaluations of an atom realize exactly the lattice") {
  for (LogicId l : kAllLogics) {
    const auto reading = l == LogicId::CLW || l == LogicId::CLS ? NegationReading::classical_or : NegationReading::printed;
    std::set<Value> seen;
    const Formula p = Formula::atom("p");
    enumerate_bivaluations(l, {p}, reading, 1000, [&](const PartialBivaluation& rho) { seen.insert(snapshot_of(rho, p)); });
    const auto& els = MatrixLogic::get(l).lattice->elements();
    CAPTURE(to_string(l));
    CHECK(seen == std::set<Value>(els.begin(), els.end()));
  }
}

TEST_CASE("two-valued consequence") {
  const Formula p = Formula::atom("p"), q = Formula::atom("q");
  CHECK(biv_consequence(LogicId::K3, {p, Formula::neg(p)}, q).valid);
  const auto lp = biv_consequence(LogicId::LP, {p, Formula::neg(p)}, q);
  CHECK_FALSE(lp.valid);
  CHECK(lp.witness.at(p));
  CHECK(lp.witness.at(Formula::neg(p)));
  CHECK_FALSE(lp.witness.at(q));
  CHECK(check_clauses(LogicId::LP, lp.witness).ok);
  for (LogicId l : kAllLogics) CHECK(biv_consequence(l, {p}, p).valid);
  CHECK(biv_consequence(LogicId::LETK, {Formula::circ(p), p, Formula::neg(p)}, q).valid);
  CHECK_THROWS_AS(biv_consequence(LogicId::K3, {}, parse("[]p")), Error);
}

TEST_CASE("closure size limit") {
  Formula f = Formula::atom("p");
  for (int i = 0; i < 150; ++i) f = Formula::conj(Formula::neg(f), Formula::atom("p"));
  try {
    biv_consequence(LogicId::FDE, {}, f);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::closure_too_large);
  }
}

TEST_CASE("formula corpus") {
  CHECK(formula_corpus({"p"}, 0).size() == 2);
  CHECK(formula_corpus({"p"}, 0, false).size() == 1);
  const auto c = formula_corpus({"p", "q"}, 2);
  CHECK(c.size() == 3963);
  CHECK(std::set<Formula>(c.begin(), c.end()).size() == c.size());
  for (const auto& f : c) CHECK(f.depth() <= 2);
}

TEST_CASE("two semantics correspond") {
  for (LogicId l : kAllLogics) {
    const auto reading = l == LogicId::CLW || l == LogicId::CLS ? NegationReading::classical_or : NegationReading::printed;
    const auto r = correspondence_check(l, reading);
    CAPTURE(to_string(l));
    CHECK(r.ok());
    CHECK(r.valuations_checked > 0);
    CHECK(r.bivaluations_checked > 0);
  }
}

TEST_CASE("the printed negation clause breaks the classical logics") {
  const auto r = correspondence_check(LogicId::CLW, NegationReading::printed);
  CHECK_FALSE(r.ok());
}

TEST_CASE("sequent corpus is deterministic") {
  const auto a = sequent_corpus(60), b = sequent_corpus(60), c = sequent_corpus(60, 1);
  REQUIRE(a.size() == 60);
  bool same = true, differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    same = same && to_string(a[i]) == to_string(b[i]);
    differs = differs || to_string(a[i]) != to_string(c[i]);
  }
  CHECK(same);
  CHECK(differs);
  CHECK(to_string(Sequent{{parse("p"), parse("!p")}, parse("q")}) == "p, !p |- q");
}

TEST_CASE("cross oracle on a small corpus") {
  const auto corpus = sequent_corpus(40);
  for (LogicId l : {LogicId::FDE, LogicId::LJ4, LogicId::L3}) {
    const auto r = cross_oracle(l, corpus);
    CHECK(r.total() == 40);
    CHECK(r.rate() == 1.0);
  }
}
