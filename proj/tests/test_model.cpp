#include <doctest.h>

#include <random>

#include "mlms/error.hpp"
#include "mlms/model_io.hpp"
#include "mlms/parser.hpp"
#include "oracle.hpp"

using namespace mlms;

namespace {

std::string fixture(const char* name) { return std::string(MLMS_FIXTURE_DIR) + "/" + name; }

Model load(const char* name) { return Model::build(load_model_file(fixture(name))); }

ModelSpec spec_of(const std::vector<std::pair<std::string, std::string>>& worlds,
                  const std::vector<std::pair<std::string, std::string>>& relation,
                  const std::map<std::string, std::map<std::string, std::string>>& valuation) {
  ModelSpec s;
  for (const auto& [w, l] : worlds) {
    s.worlds.push_back(w);
    s.logics[w] = l;
  }
  s.relation = relation;
  s.valuation = valuation;
  return s;
}

Model random_model(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<std::size_t> logic(0, kAllLogics.size() - 1);
  std::bernoulli_distribution edge(0.4);
  Model m;
  for (std::size_t i = 0; i < n; ++i) {
    m.frame.worlds.push_back("w" + std::to_string(i + 1));
    m.frame.logics.push_back(kAllLogics[logic(rng)]);
  }
  m.frame.successors.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (edge(rng)) m.frame.successors[i].push_back(static_cast<int>(j));
  m.atoms = {"p", "q"};
  for (std::size_t i = 0; i < n; ++i) {
    const auto& els = m.frame.logic(static_cast<int>(i)).lattice->elements();
    std::uniform_int_distribution<std::size_t> pick(0, els.size() - 1);
    m.valuation.push_back({els[pick(rng)], els[pick(rng)]});
  }
  return m;
}

const char* kFormulas[] = {"[]p", "<>p", "[](p -> q)", "[]p & <>!q", "!<>[]p", "@[]p", "~[]~p", "[][]p -> []p",
                           "N<>q | (p => []q)"};

}  // namespace

TEST_CASE("worked examples") {
  const Formula box_p = parse("[]p");
  CHECK(eval_all(load("sec2.json"), box_p) == std::vector<Value>{Value::b, Value::b, Value::F0});
  CHECK(eval(load("ex1.json"), "w1", box_p) == Value::b);
  CHECK(holds(load("ex1.json"), "w1", box_p));
  CHECK(eval(load("ex2.json"), "w1", box_p) == Value::F0);
  const Model ex3 = load("ex3.json");
  CHECK(eval(ex3, "w2", box_p) == Value::F0);
  CHECK(eval(ex3, "w3", box_p) == Value::F);
  CHECK(eval(ex3, "w2", parse("[]q")) == Value::F0);
  CHECK(eval(ex3, "w3", parse("[]q")) == Value::n);
  const Model ex4 = load("ex4.json");
  CHECK(eval(ex4, "w1", box_p) == Value::F0);
  CHECK(eval(ex4, "w4", box_p) == Value::F0);
  CHECK(eval(ex4, "w7", box_p) == Value::T0);
}

TEST_CASE("necessitation counterexample") {
  const Model m = load("nec-fail.json");
  const Formula f = parse("[](p -> (p | q))");
  CHECK(eval(m, "w1", f) == Value::F0);
  CHECK_FALSE(holds(m, "w1", f));
  CHECK(holds(m, "w2", parse("p -> (p | q)")));
}

TEST_CASE("self-implication holds everywhere") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Model m = random_model(rng, 1 + i % 4);
    for (const char* a : kFormulas) {
      const Formula f = Formula::imp(parse(a), parse(a));
      for (std::size_t w = 0; w < m.frame.size(); ++w) CHECK(holds(m, static_cast<int>(w), f));
    }
  }
}

TEST_CASE("box can be computed through the base lattice") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const Model m = random_model(rng, 1 + i % 4);
    for (const char* a : {"p", "!q", "p & @q", "[]q"}) {
      const Formula f = parse(a);
      const auto inner = eval_all(m, f);
      const auto boxed = eval_all(m, Formula::box(f));
      for (std::size_t w = 0; w < m.frame.size(); ++w) {
        std::vector<Value> succ;
        for (int s : m.frame.successors[w]) succ.push_back(inner[static_cast<std::size_t>(s)]);
        const auto carrier = oracle::elements(std::string(to_string(m.frame.logic(static_cast<int>(w)).lattice->id())).c_str());
        CHECK(boxed[w] == oracle::down(*oracle::glb(succ, oracle::six()), carrier));
      }
    }
  }
}

TEST_CASE("unreachable worlds do not change values") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    const Model m = random_model(rng, 1 + i % 3);
    Model bigger = m;
    const int extra = static_cast<int>(m.frame.size());
    bigger.frame.worlds.push_back("extra");
    bigger.frame.logics.push_back(LogicId::LETK);
    bigger.frame.successors.push_back({0, extra});
    bigger.valuation.push_back({Value::b, Value::n});
    for (const char* a : kFormulas) {
      const auto small = eval_all(m, parse(a));
      const auto big = eval_all(bigger, parse(a));
      for (std::size_t w = 0; w < small.size(); ++w) CHECK(small[w] == big[w]);
    }
  }
}

TEST_CASE("a reflexive single world is transparent to the modalities") {
  for (LogicId l : kAllLogics)
    for (Value x : MatrixLogic::get(l).lattice->elements()) {
      Model m;
      m.frame = Frame::from_relation({l}, {{0, 0}});
      m.atoms = {"p"};
      m.valuation = {{x}};
      CHECK(eval(m, 0, parse("[]p")) == x);
      CHECK(eval(m, 0, parse("<>p")) == x);
      m.diamond = DiamondVariant::down;
      CHECK(eval(m, 0, parse("<>p")) == x);
    }
}

TEST_CASE("no successors") {
  for (LogicId l : kAllLogics) {
    Model m;
    m.frame = Frame::from_relation({l}, {});
    m.atoms = {"p"};
    m.valuation = {{MatrixLogic::get(l).bottom()}};
    CHECK(eval(m, 0, parse("[]p")) == MatrixLogic::get(l).lattice->top());
    CHECK(eval(m, 0, parse("<>p")) == MatrixLogic::get(l).bottom());
  }
}

TEST_CASE("classical negation around the box in LJ4") {
  Model m;
  m.frame = Frame::from_relation({LogicId::LJ4, LogicId::LJ4}, {{0, 0}, {0, 1}, {1, 1}});
  m.atoms = {"p"};
  m.valuation = {{Value::b}, {Value::b}};
  for (int w = 0; w < 2; ++w) {
    CHECK(eval(m, w, parse("~p")) == Value::F);
    CHECK(eval(m, w, parse("~[]~p")) == Value::T);
  }
  m.diamond = DiamondVariant::cnegbox;
  CHECK(eval(m, 0, parse("<>p")) == Value::T);
}

TEST_CASE("diamond variants on the mixed two-world fixture") {
  Model m = load("diamond-compare.json");
  CHECK(m.diamond == DiamondVariant::down);
  CHECK(eval(m, "w1", parse("<>p")) == Value::F0);
  CHECK(eval(m, "w1", parse("!([]!p)")) == Value::T0);
  m.diamond = DiamondVariant::negbox;
  CHECK(eval(m, "w1", parse("<>p")) == Value::T0);
  m.diamond = DiamondVariant::up;
  CHECK(eval(m, "w1", parse("<>p")) == Value::T0);

  const Model printed = Model::build(spec_of({{"w1", "FDE"}, {"w2", "K3"}}, {{"w1", "w2"}},
                                             {{"w1", {{"p", "n"}}}, {"w2", {{"p", "n"}}}}));
  Model down = printed;
  down.diamond = DiamondVariant::down;
  CHECK(eval(down, "w1", parse("<>p")) == Value::n);
  CHECK(eval(down, "w1", parse("!([]!p)")) == Value::n);
}

TEST_CASE("axiom 5 on the Euclidean fixture depends on the diamond") {
  Model m = load("euclid3.json");
  const Formula five = parse("<>p -> []<>p");
  CHECK(eval(m, "w1", five) == Value::F0);
  CHECK_FALSE(holds(m, "w1", five));
  m.diamond = DiamondVariant::up;
  CHECK(eval(m, "w2", parse("<>p")) == Value::T0);
  CHECK(holds(m, "w1", five));
}

TEST_CASE("evaluating several formulas at once") {
  const Model m = load("ex3.json");
  const std::vector<Formula> fs = {parse("[]p"), parse("[]q"), parse("[]p & []q")};
  const auto all = eval_many(m, fs);
  REQUIRE(all.size() == 3);
  for (std::size_t i = 0; i < fs.size(); ++i) CHECK(all[i] == eval_all(m, fs[i]));
}

TEST_CASE("evaluation errors") {
  const Model m = load("ex1.json");
  try {
    eval(m, "w9", parse("p"));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::unknown_world);
  }
  try {
    eval(m, "w1", parse("[]r"));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::unknown_atom);
  }
  CHECK_THROWS_AS(eval(m, 7, parse("p")), Error);
}

TEST_CASE("validation") {
  CHECK(validate(load_model_file(fixture("ex1.json"))).ok());

  const auto bad_value = validate(spec_of({{"w1", "B3s"}}, {}, {{"w1", {{"p", "n"}}}}));
  REQUIRE(bad_value.errors.size() == 1);
  CHECK(bad_value.errors[0] == "value n of p at w1 is not in B3s");

  const auto bad_pair = validate(spec_of({{"a", "K3"}, {"b", "LP"}}, {{"a", "x"}}, {}));
  REQUIRE(bad_pair.errors.size() == 1);
  CHECK(bad_pair.errors[0] == "relation pair (a, x) names unknown world x");

  ModelSpec dup = spec_of({{"w1", "K3"}}, {}, {});
  dup.worlds.push_back("w1");
  CHECK_FALSE(validate(dup).ok());
  CHECK_FALSE(validate(ModelSpec{}).ok());
  CHECK_FALSE(validate(spec_of({{"w1", "S4"}}, {}, {})).ok());

  const auto missing = validate(spec_of({{"w1", "K3"}, {"w2", "LP"}}, {}, {{"w1", {{"q", "n"}}}}));
  CHECK(missing.ok());
  REQUIRE(missing.warnings.size() == 1);
  CHECK(missing.warnings[0] == "atom q has no value at w2; using F0");

  try {
    Model::build(spec_of({{"w1", "B3s"}}, {{"w1", "w2"}}, {{"w1", {{"p", "n"}}}}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::invalid_model);
    CHECK(std::string(e.what()).find("not in B3s") != std::string::npos);
    CHECK(std::string(e.what()).find("unknown world w2") != std::string::npos);
  }
}

TEST_CASE("lattice names work as logic names") {
  const Model m = Model::build(spec_of({{"w1", "N3w"}}, {{"w1", "w1"}}, {{"w1", {{"p", "n"}}}}));
  CHECK(m.frame.logics[0] == LogicId::K3);
}

TEST_CASE("model documents") {
  const ModelSpec s = parse_model_json(R"({"worlds":["u","v"],"logics":{"u":"LETK","v":"J3"},
      "relation":[["u","v"]],"valuation":{"u":{"p":"T"},"v":{"p":"b"}},"diamond":"negbox"})");
  CHECK(s.worlds == std::vector<std::string>{"u", "v"});
  CHECK(s.diamond == DiamondVariant::negbox);
  const ModelSpec again = parse_model_json(to_json(s));
  CHECK(to_json(again, -1) == to_json(s, -1));
  const Model m = Model::build(s);
  CHECK(to_json(m.to_spec(), -1) == to_json(s, -1));

  const ModelSpec frame_only = parse_model_json(R"({"worlds":["u"],"logics":{"u":"K3"},"relation":[]})");
  CHECK(frame_only.valuation.empty());

  for (const char* bad : {R"({"worlds":["u"],"logics":{"u":"K3"},"relation":[],"extra":1})", R"([1,2])",
                          R"({"worlds":"u"})", R"({"worlds":["u"],"logics":{"u":"K3"},"relation":[["u"]]})",
                          "{", R"({"worlds":["u"],"logics":{"u":"K3"},"relation":[],"diamond":"sideways"})"}) {
    CAPTURE(bad);
    try {
      parse_model_json(bad);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::invalid_model);
    }
  }
  try {
    load_model_file(fixture("no-such-file.json"));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::io_error);
  }
}
