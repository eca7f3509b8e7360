#include <doctest.h>

#include <algorithm>

#include "mlms/error.hpp"
#include "mlms/frame_checker.hpp"
#include "mlms/model_io.hpp"
#include "mlms/parser.hpp"

using namespace mlms;

namespace {

constexpr DiamondVariant kVariants[] = {DiamondVariant::up, DiamondVariant::down, DiamondVariant::negbox,
                                        DiamondVariant::cnegbox};

Frame frame(std::vector<LogicId> logics, std::vector<std::pair<int, int>> pairs) {
  return Frame::from_relation(std::move(logics), pairs);
}

bool has_pair(const Frame& f, int a, int b) { return f.related(a, b); }

void check_replay(const Counterexample& c) {
  CHECK(eval(c.model, c.world, c.formula) == c.value);
  CHECK_FALSE(holds(c.model, c.world, c.formula));
  const Model again = Model::build(parse_model_json(to_json(c.model.to_spec())));
  CHECK(eval(again, c.world, c.formula) == c.value);
}

SuiteOptions small(std::vector<LogicId> logics) {
  SuiteOptions o;
  o.logics = std::move(logics);
  o.samples = 0;
  return o;
}

}  // namespace

TEST_CASE("frame properties") {
  const auto total = frame_properties(frame({LogicId::K3, LogicId::K3, LogicId::K3},
                                            {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {2, 2}}));
  CHECK(total.reflexive);
  CHECK(total.transitive);
  CHECK(total.euclidean);
  CHECK(total.symmetric);
  CHECK(total.serial);

  const auto one = frame_properties(frame({LogicId::K3, LogicId::LP}, {{0, 1}}));
  CHECK_FALSE(one.reflexive);
  CHECK(one.transitive);
  CHECK_FALSE(one.euclidean);
  CHECK_FALSE(one.symmetric);
  CHECK_FALSE(one.serial);

  const auto empty = frame_properties(frame({LogicId::K3}, {}));
  CHECK(empty.transitive);
  CHECK(empty.euclidean);
  CHECK(empty.symmetric);
  CHECK_FALSE(empty.reflexive);
}

TEST_CASE("properties agree with their definitions on all three-world relations") {
  for_each_frame(3, {LogicId::FDE}, [&](const Frame& f) {
    bool refl = true, trans = true, eucl = true, sym = true, serial = true;
    for (int a = 0; a < 3; ++a) {
      refl = refl && f.related(a, a);
      serial = serial && !f.successors[static_cast<std::size_t>(a)].empty();
      for (int b = 0; b < 3; ++b) {
        sym = sym && (!f.related(a, b) || f.related(b, a));
        for (int c = 0; c < 3; ++c) {
          trans = trans && (!(f.related(a, b) && f.related(b, c)) || f.related(a, c));
          eucl = eucl && (!(f.related(a, b) && f.related(a, c)) || f.related(b, c));
        }
      }
    }
    const auto p = frame_properties(f);
    CHECK(p.reflexive == refl);
    CHECK(p.transitive == trans);
    CHECK(p.euclidean == eucl);
    CHECK(p.symmetric == sym);
    CHECK(p.serial == serial);
  });
}

TEST_CASE("Euclidean closure") {
  const Frame c = euclidean_closure(frame({LogicId::K3, LogicId::K3, LogicId::K3}, {{0, 1}, {0, 2}}));
  CHECK(frame_properties(c).euclidean);
  CHECK(has_pair(c, 1, 2));
  CHECK(has_pair(c, 2, 1));
  CHECK(has_pair(c, 1, 1));
  CHECK(has_pair(c, 2, 2));
  CHECK(has_pair(c, 0, 1));
  CHECK_FALSE(has_pair(c, 0, 0));
  CHECK_FALSE(has_pair(c, 1, 0));
}

TEST_CASE("schema tokens") {
  for (AxiomSchema s : kAllSchemas) CHECK(parse_axiom(to_string(s)) == s);
  CHECK(parse_axiom("4") == AxiomSchema::FOUR);
  CHECK(parse_axiom("5c") == AxiomSchema::FIVE_C);
  CHECK(parse_axiom("FIVE") == AxiomSchema::FIVE);
  CHECK_FALSE(parse_axiom("S5").has_value());
  CHECK(schema_template(AxiomSchema::K) == parse("[](p -> q) -> ([]p -> []q)"));
  CHECK(schema_template(AxiomSchema::FIVE_C) == parse("<>~p -> []<>~p"));
}

TEST_CASE("frame enumeration") {
  std::size_t count = 0;
  for_each_frame(1, {LogicId::K3}, [&](const Frame&) { ++count; });
  CHECK(count == 2);
  count = 0;
  std::size_t last_pairs = 0;
  bool ordered = true;
  for_each_frame(2, {LogicId::K3, LogicId::LP}, [&](const Frame& f) {
    ++count;
    std::size_t pairs = 0;
    for (const auto& s : f.successors) pairs += s.size();
    ordered = ordered && pairs >= last_pairs;
    last_pairs = pairs;
  });
  CHECK(count == 64);
  CHECK(ordered);
}

TEST_CASE("K holds on every small frame") {
  for (std::size_t n = 1; n <= 2; ++n)
    for_each_frame(n, {LogicId::LETK, LogicId::K3, LogicId::J3}, [&](const Frame& f) {
      const auto v = axiom_valid_on_frame(f, AxiomSchema::K, DiamondVariant::up);
      CHECK(v.valid);
      CHECK(v.valuations_checked > 0);
    });
}

TEST_CASE("T on reflexive frames, and its failure without reflexivity") {
  for_each_frame(2, {LogicId::LETK, LogicId::FDE, LogicId::L3}, [&](const Frame& f) {
    if (frame_properties(f).reflexive) CHECK(axiom_valid_on_frame(f, AxiomSchema::T, DiamondVariant::up).valid);
  });
  const auto v = axiom_valid_on_frame(frame({LogicId::K3, LogicId::LP}, {{0, 1}}), AxiomSchema::T, DiamondVariant::up);
  REQUIRE_FALSE(v.valid);
  check_replay(*v.counterexample);
}

TEST_CASE("a single reflexive world validates every schema") {
  for (LogicId l : kAllLogics)
    for (AxiomSchema s : kAllSchemas)
      for (DiamondVariant d : kVariants) {
        CAPTURE(to_string(l));
        CAPTURE(to_string(s));
        CHECK(axiom_valid_on_frame(frame({l}, {{0, 0}}), s, d).valid);
      }
}

TEST_CASE("axiom 5 on the Euclidean fixture frame") {
  const Model m = Model::build(load_model_file(std::string(MLMS_FIXTURE_DIR) + "/euclid3.json"));
  CHECK(frame_properties(m.frame).euclidean);
  const auto down = axiom_valid_on_frame(m.frame, AxiomSchema::FIVE, DiamondVariant::down);
  REQUIRE_FALSE(down.valid);
  CHECK(down.counterexample->world == 0);
  CHECK(down.counterexample->value == Value::F0);
  check_replay(*down.counterexample);
}

TEST_CASE("the circled-negation form of 5 fails off Euclidean frames") {
  for (LogicId l : kAllLogics) {
    const auto v = axiom_valid_on_frame(frame({l, l, l}, {{0, 1}, {0, 2}}), AxiomSchema::FIVE_C, DiamondVariant::up);
    CAPTURE(to_string(l));
    REQUIRE_FALSE(v.valid);
    check_replay(*v.counterexample);
  }
}

TEST_CASE("mixed frames over FDE, K3 and LP") {
  const auto o = small({LogicId::FDE, LogicId::K3, LogicId::LP});
  CHECK(check_k(o).passed());
  CHECK(check_t(o).passed());
  CHECK(check_duality(o).passed());
  const auto four = check_four(o);
  CHECK(four.cases == 1290);
  CHECK(four.failures == 4);
  REQUIRE(four.first);
  CHECK(four.first->value == Value::F0);
  CHECK(four.first->model.frame.logics == std::vector<LogicId>{LogicId::FDE, LogicId::K3});
  check_replay(*four.first);
}

TEST_CASE("4 holds when every world runs the same logic") {
  for (LogicId l : kAllLogics)
    CHECK(check_four(small({l})).passed());
}

TEST_CASE("counterexamples are minimal in enumeration order and replayable") {
  const auto four = check_four(small({LogicId::LETK, LogicId::K3}));
  REQUIRE(four.first);
  check_replay(*four.first);
  CHECK(four.first->model.frame.size() == 2);
  CHECK(describe(*four.first).find("[]p -> [][]p is F0 at w1") == 0);
}

TEST_CASE("budgets") {
  const Frame four_worlds = frame({LogicId::K3, LogicId::K3, LogicId::K3, LogicId::K3}, {});
  try {
    axiom_valid_on_frame(four_worlds, AxiomSchema::K, DiamondVariant::up);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::budget_exceeded);
  }
  CheckBudget many_atoms;
  many_atoms.atoms = 3;
  CHECK_THROWS_AS(axiom_valid_on_frame(frame({LogicId::K3}, {}), AxiomSchema::K, DiamondVariant::up, many_atoms), Error);

  CheckBudget sampled;
  sampled.mode = CheckBudget::Mode::sampled;
  sampled.sample_count = 50;
  const auto v = axiom_valid_on_frame(four_worlds, AxiomSchema::K, DiamondVariant::up, sampled);
  CHECK(v.valid);
  CHECK(v.valuations_checked == 50);
}

TEST_CASE("sampling is deterministic for a seed") {
  const Frame f = frame({LogicId::LETK, LogicId::K3, LogicId::FDE}, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {1, 2}, {0, 2}});
  CheckBudget b;
  b.mode = CheckBudget::Mode::sampled;
  b.sample_count = 400;
  b.seed = 42;
  const auto x = axiom_valid_on_frame(f, AxiomSchema::FOUR, DiamondVariant::up, b);
  const auto y = axiom_valid_on_frame(f, AxiomSchema::FOUR, DiamondVariant::up, b);
  CHECK(x.valid == y.valid);
  if (x.counterexample && y.counterexample) CHECK(describe(*x.counterexample) == describe(*y.counterexample));
}

TEST_CASE("renaming worlds does not change verdicts") {
  std::mt19937_64 rng(21);
  const std::vector<LogicId> logics(kAllLogics.begin(), kAllLogics.end());
  for (int i = 0; i < 40; ++i) {
    const Frame f = random_frame(2, logics, rng);
    Frame g;
    g.worlds = f.worlds;
    g.logics = {f.logics[1], f.logics[0]};
    g.successors.resize(2);
    for (int a = 0; a < 2; ++a)
      for (int b : f.successors[static_cast<std::size_t>(a)]) g.successors[static_cast<std::size_t>(1 - a)].push_back(1 - b);
    for (auto& s : g.successors) std::sort(s.begin(), s.end());
    for (AxiomSchema s : kAllSchemas)
      CHECK(axiom_valid_on_frame(f, s, DiamondVariant::up).valid == axiom_valid_on_frame(g, s, DiamondVariant::up).valid);
  }
}

TEST_CASE("extra atoms do not rescue a failing schema") {
  const Frame f = frame({LogicId::K3, LogicId::LP}, {{0, 1}});
  CheckBudget two;
  two.atoms = 2;
  CHECK_FALSE(axiom_valid_on_frame(f, AxiomSchema::T, DiamondVariant::up, two).valid);
  CHECK(axiom_valid_on_frame(f, AxiomSchema::K, DiamondVariant::up, two).valid);
}

TEST_CASE("theorem suite report") {
  SuiteOptions o = small({LogicId::FDE, LogicId::K3});
  o.euclid_logics = {LogicId::FDE, LogicId::K3};
  o.euclid_worlds = 2;
  const auto r = theorem_suite(o);
  CHECK(r.checks.size() >= 5);
  bool gating_failed = false;
  for (const auto& c : r.checks) {
    CAPTURE(c.name);
    if (c.gating && !c.passed()) gating_failed = true;
    if (c.first) check_replay(*c.first);
  }
  CHECK(r.all_passed() == !gating_failed);
}

TEST_CASE("Euclidean characterization over the default subset at two worlds") {
  SuiteOptions o;
  o.euclid_worlds = 2;
  const auto c = check_euclidean_characterization(o);
  CHECK(c.passed());
  CHECK(c.cases > 0);
}
