#include "mlms/lattice.hpp"

#include <sstream>

#include "mlms/error.hpp"

namespace mlms {

namespace {

constexpr ValueSet kFull = 0x3F;

ValueSet elements_for(LatticeId id) {
  using V = Value;
  switch (id) {
    case LatticeId::L6: return kFull;
    case LatticeId::L4w: return bit(V::T0) | bit(V::b) | bit(V::n) | bit(V::F0);
    case LatticeId::L4s: return bit(V::T) | bit(V::b) | bit(V::n) | bit(V::F);
    case LatticeId::B3w: return bit(V::T0) | bit(V::b) | bit(V::F0);
    case LatticeId::B3s: return bit(V::T) | bit(V::b) | bit(V::F);
    case LatticeId::N3w: return bit(V::T0) | bit(V::n) | bit(V::F0);
    case LatticeId::N3s: return bit(V::T) | bit(V::n) | bit(V::F);
    case LatticeId::C2w: return bit(V::T0) | bit(V::F0);
    case LatticeId::C2s: return bit(V::T) | bit(V::F);
  }
  return 0;
}

// Rank in the chain F < F0 < {n,b} < T0 < T; n and b share a rank.
int rank(Value v) noexcept {
  switch (v) {
    case Value::F: return 0;
    case Value::F0: return 1;
    case Value::n:
    case Value::b: return 2;
    case Value::T0: return 3;
    case Value::T: return 4;
  }
  return -1;
}

// Greatest element of `candidates` (w.r.t. the L6 order) that dominates all others,
// or the least when `greatest` is false. Returns false if no such element exists.
bool extremum(ValueSet candidates, bool greatest, Value& out) {
  for (Value c : kAllValues) {
    if (!contains(candidates, c)) continue;
    bool ok = true;
    for (Value d : kAllValues) {
      if (!contains(candidates, d)) continue;
      if (greatest ? !l6_leq(d, c) : !l6_leq(c, d)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      out = c;
      return true;
    }
  }
  return false;
}

ValueSet lower_set(ValueSet within, Value x) {
  ValueSet s = 0;
  for (Value y : kAllValues)
    if (contains(within, y) && l6_leq(y, x)) s |= bit(y);
  return s;
}

ValueSet upper_set(ValueSet within, Value x) {
  ValueSet s = 0;
  for (Value y : kAllValues)
    if (contains(within, y) && l6_leq(x, y)) s |= bit(y);
  return s;
}

}  // namespace

std::string_view to_string(Value v) noexcept {
  switch (v) {
    case Value::T: return "T";
    case Value::T0: return "T0";
    case Value::b: return "b";
    case Value::n: return "n";
    case Value::F0: return "F0";
    case Value::F: return "F";
  }
  return "?";
}

std::optional<Value> parse_value(std::string_view token) noexcept {
  for (Value v : kAllValues)
    if (to_string(v) == token) return v;
  return std::nullopt;
}

std::string_view to_string(LatticeId id) noexcept {
  switch (id) {
    case LatticeId::L6: return "L6";
    case LatticeId::L4w: return "L4w";
    case LatticeId::L4s: return "L4s";
    case LatticeId::B3w: return "B3w";
    case LatticeId::B3s: return "B3s";
    case LatticeId::N3w: return "N3w";
    case LatticeId::N3s: return "N3s";
    case LatticeId::C2w: return "C2w";
    case LatticeId::C2s: return "C2s";
  }
  return "?";
}

std::optional<LatticeId> parse_lattice(std::string_view token) noexcept {
  for (LatticeId id : kAllLattices)
    if (to_string(id) == token) return id;
  return std::nullopt;
}

bool l6_leq(Value x, Value y) noexcept {
  if (x == y) return true;
  // n and b are the only incomparable pair.
  if ((x == Value::n && y == Value::b) || (x == Value::b && y == Value::n)) return false;
  return rank(x) < rank(y);
}

Lattice::Lattice(LatticeId id, ValueSet elements) : id_(id), elements_(elements) {
  for (Value v : kAllValues)
    if (mlms::contains(elements_, v)) ordered_.push_back(v);
  extremum(elements_, true, top_);
  extremum(elements_, false, bottom_);
  for (Value x : ordered_) {
    for (Value y : ordered_) {
      ValueSet lower = lower_set(elements_, x) & lower_set(elements_, y);
      ValueSet upper = upper_set(elements_, x) & upper_set(elements_, y);
      extremum(lower, true, meet_[index_of(x)][index_of(y)]);
      extremum(upper, false, join_[index_of(x)][index_of(y)]);
    }
  }
  for (Value x : kAllValues) {
    Value d = bottom_;
    for (Value y : ordered_)
      if (l6_leq(y, x)) d = join_[index_of(d)][index_of(y)];
    down_[index_of(x)] = d;
    Value u = top_;
    for (Value y : ordered_)
      if (l6_leq(x, y)) u = meet_[index_of(u)][index_of(y)];
    up_[index_of(x)] = u;
  }
}

const Lattice& Lattice::get(LatticeId id) {
  static const std::array<Lattice, 9> all = {
      Lattice(LatticeId::L6, elements_for(LatticeId::L6)),
      Lattice(LatticeId::L4w, elements_for(LatticeId::L4w)),
      Lattice(LatticeId::L4s, elements_for(LatticeId::L4s)),
      Lattice(LatticeId::B3w, elements_for(LatticeId::B3w)),
      Lattice(LatticeId::B3s, elements_for(LatticeId::B3s)),
      Lattice(LatticeId::N3w, elements_for(LatticeId::N3w)),
      Lattice(LatticeId::N3s, elements_for(LatticeId::N3s)),
      Lattice(LatticeId::C2w, elements_for(LatticeId::C2w)),
      Lattice(LatticeId::C2s, elements_for(LatticeId::C2s)),
  };
  return all[static_cast<std::size_t>(id)];
}

void Lattice::require(Value v) const {
  if (!contains(v)) {
    std::ostringstream msg;
    msg << to_string(v) << " is not an element of " << to_string(id_);
    throw Error(ErrorKind::element_not_in_lattice, msg.str());
  }
}

bool Lattice::leq(Value x, Value y) const {
  require(x);
  require(y);
  return l6_leq(x, y);
}

Value Lattice::meet(Value x, Value y) const {
  require(x);
  require(y);
  return meet_unchecked(x, y);
}

Value Lattice::join(Value x, Value y) const {
  require(x);
  require(y);
  return join_unchecked(x, y);
}

Value Lattice::meet_set(std::span<const Value> xs) const {
  Value acc = top_;
  for (Value x : xs) {
    require(x);
    acc = meet_unchecked(acc, x);
  }
  return acc;
}

Value Lattice::join_set(std::span<const Value> xs) const {
  Value acc = bottom_;
  for (Value x : xs) {
    require(x);
    acc = join_unchecked(acc, x);
  }
  return acc;
}

Value meet_set(std::span<const Value> xs, const Lattice& lat) { return lat.meet_set(xs); }
Value join_set(std::span<const Value> xs, const Lattice& lat) { return lat.join_set(xs); }
Value down_interpret(Value x, const Lattice& sub) noexcept { return sub.down(x); }
Value up_interpret(Value x, const Lattice& sub) noexcept { return sub.up(x); }

bool LawReport::all_passed() const noexcept {
  for (const auto& law : laws)
    if (!law.passed) return false;
  return true;
}

namespace {

std::vector<Value> members(ValueSet s) {
  std::vector<Value> out;
  for (Value v : kAllValues)
    if (contains(s, v)) out.push_back(v);
  return out;
}

std::string show(ValueSet s) {
  std::string out = "{";
  bool first = true;
  for (Value v : members(s)) {
    if (!first) out += ",";
    out += to_string(v);
    first = false;
  }
  return out + "}";
}

class LawCheck {
 public:
  explicit LawCheck(std::string name) { result_.law = std::move(name); }

  void expect(bool ok, const std::string& witness) {
    ++result_.cases;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.witness = witness;
    }
  }

  LawResult take() { return std::move(result_); }

 private:
  LawResult result_;
};

}  // namespace

LawReport verify_lattice_laws(const Lattice& sub) {
  const Lattice& base = Lattice::get(LatticeId::L6);
  const ValueSet s = sub.element_set();
  LawReport report;
  report.lattice = sub.id();

  {
    LawCheck law("complete");
    for (unsigned mask = 0; mask < 64; ++mask) {
      if ((mask & ~s) != 0) continue;
      auto xs = members(static_cast<ValueSet>(mask));
      Value m = sub.meet_set(xs);
      Value j = sub.join_set(xs);
      bool ok = true;
      for (Value x : xs) ok = ok && l6_leq(m, x) && l6_leq(x, j);
      for (Value c : sub.elements()) {
        bool lower = true, upper = true;
        for (Value x : xs) {
          lower = lower && l6_leq(c, x);
          upper = upper && l6_leq(x, c);
        }
        if (lower) ok = ok && l6_leq(c, m);
        if (upper) ok = ok && l6_leq(j, c);
      }
      law.expect(ok, "X=" + show(static_cast<ValueSet>(mask)));
    }
    report.laws.push_back(law.take());
  }

  {
    LawCheck law("down_monotone");
    for (Value x : kAllValues)
      for (Value y : kAllValues)
        if (l6_leq(x, y))
          law.expect(l6_leq(sub.down(x), sub.down(y)),
                     std::string(to_string(x)) + "<=" + std::string(to_string(y)));
    report.laws.push_back(law.take());
  }

  {
    LawCheck law("bounds_commute_with_down");
    for (unsigned mask = 1; mask < 64; ++mask) {
      if ((mask & ~s) != 0) continue;
      auto xs = members(static_cast<ValueSet>(mask));
      bool ok = sub.join_set(xs) == sub.down(base.join_set(xs)) &&
                sub.meet_set(xs) == sub.down(base.meet_set(xs));
      law.expect(ok, "X=" + show(static_cast<ValueSet>(mask)));
    }
    report.laws.push_back(law.take());
  }

  {
    LawCheck law("interpreted_bounds_inequality");
    for (unsigned mask = 1; mask < 64; ++mask) {
      auto xs = members(static_cast<ValueSet>(mask));
      std::vector<Value> downs;
      for (Value x : xs) downs.push_back(sub.down(x));
      bool ok = l6_leq(sub.join_set(downs), sub.down(base.join_set(xs))) &&
                l6_leq(sub.down(base.meet_set(xs)), sub.meet_set(downs));
      law.expect(ok, "X=" + show(static_cast<ValueSet>(mask)));
    }
    report.laws.push_back(law.take());
  }

  {
    LawCheck law("binary_bounds_comparison");
    for (Value x : sub.elements())
      for (Value y : sub.elements()) {
        bool ok = l6_leq(sub.meet(x, y), base.meet(x, y)) && l6_leq(base.join(x, y), sub.join(x, y));
        law.expect(ok, std::string(to_string(x)) + "," + std::string(to_string(y)));
      }
    report.laws.push_back(law.take());
  }

  {
    LawCheck law("meet_distributes_over_joins");
    for (unsigned mask = 0; mask < 64; ++mask) {
      if ((mask & ~s) != 0) continue;
      auto xs = members(static_cast<ValueSet>(mask));
      for (Value x : sub.elements()) {
        std::vector<Value> meets;
        for (Value y : xs) meets.push_back(sub.meet(x, y));
        law.expect(sub.meet(x, sub.join_set(xs)) == sub.join_set(meets),
                   std::string(to_string(x)) + " . " + show(static_cast<ValueSet>(mask)));
      }
    }
    report.laws.push_back(law.take());
  }

  {
    LawCheck law("down_preserves_meets");
    for (Value x : kAllValues)
      for (Value y : kAllValues)
        law.expect(sub.meet(sub.down(x), sub.down(y)) == sub.down(base.meet(x, y)),
                   std::string(to_string(x)) + "," + std::string(to_string(y)));
    report.laws.push_back(law.take());
  }

  return report;
}

}  // namespace mlms
