#include <doctest.h>

#include "mlms/error.hpp"
#include "mlms/lattice.hpp"
#include "oracle.hpp"

using namespace mlms;

namespace {

std::vector<Value> subset(unsigned mask, const std::vector<Value>& from) {
  std::vector<Value> out;
  for (std::size_t i = 0; i < from.size(); ++i)
    if (mask & (1u << i)) out.push_back(from[i]);
  return out;
}

}  // namespace

TEST_CASE("value tokens round trip") {
  for (Value v : kAllValues) CHECK(parse_value(to_string(v)) == v);
  CHECK_FALSE(parse_value("t0").has_value());
  CHECK_FALSE(parse_value("").has_value());
}

TEST_CASE("snapshots name exactly six values") {
  int named = 0;
  for (int bits = 0; bits < 8; ++bits) {
    const Snapshot s{(bits & 4) != 0, (bits & 2) != 0, (bits & 1) != 0};
    if (auto v = value_of(s)) {
      ++named;
      CHECK(snapshot_of(*v) == s);
    }
  }
  CHECK(named == 6);
  CHECK_FALSE(value_of({false, false, true}).has_value());
  CHECK_FALSE(value_of({true, true, true}).has_value());
}

TEST_CASE("L6 order agrees with the oracle") {
  for (Value x : kAllValues)
    for (Value y : kAllValues) CHECK(l6_leq(x, y) == oracle::leq(x, y));
  CHECK(l6_leq(Value::b, Value::T0));
  CHECK_FALSE(l6_leq(Value::n, Value::b));
  CHECK_FALSE(l6_leq(Value::b, Value::n));
}

TEST_CASE("sublattice carriers, bounds and interpretations agree with the oracle") {
  for (LatticeId id : kAllLattices) {
    const Lattice& lat = Lattice::get(id);
    const std::string name(to_string(id));
    CAPTURE(name);
    const auto want = oracle::elements(name.c_str());
    REQUIRE(lat.elements() == want);
    CHECK(lat.top() == *oracle::lub(want, want));
    CHECK(lat.bottom() == *oracle::glb(want, want));
    for (unsigned mask = 0; mask < (1u << want.size()); ++mask) {
      const auto xs = subset(mask, want);
      CHECK(lat.join_set(xs) == *oracle::lub(xs, want));
      CHECK(lat.meet_set(xs) == *oracle::glb(xs, want));
    }
    for (Value x : kAllValues) {
      CHECK(lat.down(x) == oracle::down(x, want));
      CHECK(lat.up(x) == oracle::up(x, want));
      CHECK(down_interpret(x, lat) == lat.down(x));
      CHECK(up_interpret(x, lat) == lat.up(x));
    }
  }
}

TEST_CASE("spot values") {
  const Lattice& l6 = Lattice::get(LatticeId::L6);
  const Value tb[] = {Value::T, Value::T0, Value::b};
  CHECK(l6.meet_set(tb) == Value::b);
  const Value bn[] = {Value::b, Value::n};
  CHECK(Lattice::get(LatticeId::L4s).join_set(bn) == Value::T);
  CHECK(Lattice::get(LatticeId::L4s).meet_set(bn) == Value::F);
  CHECK(l6.join_set(bn) == Value::T0);
  CHECK(down_interpret(Value::b, Lattice::get(LatticeId::N3w)) == Value::F0);
  CHECK(down_interpret(Value::n, Lattice::get(LatticeId::B3w)) == Value::F0);
  CHECK(down_interpret(Value::T0, Lattice::get(LatticeId::L4s)) == Value::T);
  CHECK(up_interpret(Value::b, Lattice::get(LatticeId::N3w)) == Value::T0);
  CHECK(up_interpret(Value::F0, Lattice::get(LatticeId::L4s)) == Value::F);
  CHECK(down_interpret(Value::T, Lattice::get(LatticeId::C2w)) == Value::T0);
}

TEST_CASE("members are fixed by both interpretations") {
  for (LatticeId id : kAllLattices) {
    const Lattice& lat = Lattice::get(id);
    for (Value x : lat.elements()) {
      CHECK(lat.down(x) == x);
      CHECK(lat.up(x) == x);
    }
  }
}

TEST_CASE("checked operations reject foreign elements") {
  const Lattice& k = Lattice::get(LatticeId::N3w);
  CHECK_THROWS_AS(k.meet(Value::b, Value::n), Error);
  CHECK_THROWS_AS(k.leq(Value::T, Value::n), Error);
  const Value foreign[] = {Value::T0, Value::b};
  CHECK_THROWS_AS(k.join_set(foreign), Error);
  try {
    k.join(Value::b, Value::T0);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::element_not_in_lattice);
  }
}

TEST_CASE("law suite passes on every sublattice") {
  for (LatticeId id : kSublattices) {
    const auto report = verify_lattice_laws(Lattice::get(id));
    CAPTURE(to_string(id));
    CHECK(report.all_passed());
    CHECK(report.laws.size() == 7);
    for (const auto& law : report.laws) {
      CAPTURE(law.law);
      CHECK(law.cases > 0);
      CHECK(law.witness.empty());
    }
  }
}

TEST_CASE("binary bounds in a sublattice sit below or above the L6 ones") {
  for (LatticeId id : kSublattices) {
    const Lattice& lat = Lattice::get(id);
    for (Value x : lat.elements())
      for (Value y : lat.elements()) {
        CHECK(oracle::leq(lat.meet(x, y), *oracle::glb({x, y}, oracle::six())));
        CHECK(oracle::leq(*oracle::lub({x, y}, oracle::six()), lat.join(x, y)));
      }
  }
}
