#include "mlms/model.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "mlms/error.hpp"

namespace mlms {

std::string_view to_string(DiamondVariant d) noexcept {
  switch (d) {
    case DiamondVariant::up: return "up";
    case DiamondVariant::down: return "down";
    case DiamondVariant::negbox: return "negbox";
    case DiamondVariant::cnegbox: return "cnegbox";
  }
  return "?";
}

std::optional<DiamondVariant> parse_diamond(std::string_view token) noexcept {
  for (auto d : {DiamondVariant::up, DiamondVariant::down, DiamondVariant::negbox, DiamondVariant::cnegbox})
    if (to_string(d) == token) return d;
  return std::nullopt;
}

Validation validate(const ModelSpec& spec) {
  Validation out;
  std::set<std::string> worlds;
  if (spec.worlds.empty()) out.errors.push_back("model has no worlds");
  for (const auto& w : spec.worlds) {
    if (w.empty()) out.errors.push_back("world with an empty name");
    if (!worlds.insert(w).second) out.errors.push_back("world " + w + " is listed twice");
  }
  std::map<std::string, LogicId> logic;
  for (const auto& [w, token] : spec.logics) {
    if (!worlds.count(w)) {
      out.errors.push_back("logic given for unknown world " + w);
      continue;
    }
    if (auto l = parse_logic_or_lattice(token))
      logic.emplace(w, *l);
    else
      out.errors.push_back("world " + w + " has unknown logic " + token);
  }
  for (const auto& w : spec.worlds)
    if (!spec.logics.count(w)) out.errors.push_back("world " + w + " has no logic");
  for (const auto& [a, b] : spec.relation) {
    if (!worlds.count(a)) out.errors.push_back("relation pair (" + a + ", " + b + ") names unknown world " + a);
    if (!worlds.count(b)) out.errors.push_back("relation pair (" + a + ", " + b + ") names unknown world " + b);
  }
  std::set<std::string> atoms;
  for (const auto& [w, vals] : spec.valuation) {
    if (!worlds.count(w)) {
      out.errors.push_back("valuation given for unknown world " + w);
      continue;
    }
    for (const auto& [atom, token] : vals) {
      atoms.insert(atom);
      auto v = parse_value(token);
      if (!v) {
        out.errors.push_back("value " + token + " of " + atom + " at " + w + " is not a value");
        continue;
      }
      auto it = logic.find(w);
      if (it == logic.end()) continue;
      const Lattice& lat = *MatrixLogic::get(it->second).lattice;
      if (!lat.contains(*v))
        out.errors.push_back("value " + token + " of " + atom + " at " + w + " is not in " +
                             std::string(to_string(lat.id())));
    }
  }
  for (const auto& atom : atoms) {
    for (const auto& w : spec.worlds) {
      auto it = spec.valuation.find(w);
      if (it != spec.valuation.end() && it->second.count(atom)) continue;
      std::string fallback = "the lattice bottom";
      if (auto l = logic.find(w); l != logic.end()) fallback = std::string(to_string(MatrixLogic::get(l->second).bottom()));
      out.warnings.push_back("atom " + atom + " has no value at " + w + "; using " + fallback);
    }
  }
  return out;
}

bool Frame::related(int from, int to) const {
  const auto& s = successors[static_cast<std::size_t>(from)];
  return std::binary_search(s.begin(), s.end(), to);
}

int Frame::index_of(const std::string& world) const {
  auto it = std::find(worlds.begin(), worlds.end(), world);
  if (it == worlds.end()) throw Error(ErrorKind::unknown_world, "unknown world " + world);
  return static_cast<int>(it - worlds.begin());
}

Frame Frame::from_relation(std::vector<LogicId> logics, const std::vector<std::pair<int, int>>& pairs) {
  Frame f;
  f.logics = std::move(logics);
  f.successors.resize(f.logics.size());
  for (std::size_t i = 0; i < f.logics.size(); ++i) f.worlds.push_back("w" + std::to_string(i + 1));
  for (auto [a, b] : pairs) f.successors[static_cast<std::size_t>(a)].push_back(b);
  for (auto& s : f.successors) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  return f;
}

int Model::atom_index(const std::string& atom) const {
  auto it = std::lower_bound(atoms.begin(), atoms.end(), atom);
  return it != atoms.end() && *it == atom ? static_cast<int>(it - atoms.begin()) : -1;
}

Value Model::value(int world, const std::string& atom) const {
  const int k = atom_index(atom);
  if (k < 0) throw Error(ErrorKind::unknown_atom, "atom " + atom + " has no value in the model");
  return valuation[static_cast<std::size_t>(world)][static_cast<std::size_t>(k)];
}

Model Model::build(const ModelSpec& spec) {
  const Validation v = validate(spec);
  if (!v.ok()) {
    std::string msg = "invalid model:";
    for (const auto& e : v.errors) msg += "\n  " + e;
    throw Error(ErrorKind::invalid_model, msg);
  }
  Model m;
  m.diamond = spec.diamond.value_or(DiamondVariant::up);
  m.frame.worlds = spec.worlds;
  for (const auto& w : spec.worlds) m.frame.logics.push_back(*parse_logic_or_lattice(spec.logics.at(w)));
  m.frame.successors.resize(spec.worlds.size());
  for (const auto& [a, b] : spec.relation)
    m.frame.successors[static_cast<std::size_t>(m.frame.index_of(a))].push_back(m.frame.index_of(b));
  for (auto& s : m.frame.successors) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  std::set<std::string> atoms;
  for (const auto& [w, vals] : spec.valuation)
    for (const auto& [atom, _] : vals) atoms.insert(atom);
  m.atoms.assign(atoms.begin(), atoms.end());
  for (std::size_t i = 0; i < spec.worlds.size(); ++i) {
    std::vector<Value> row(m.atoms.size(), m.frame.logic(static_cast<int>(i)).bottom());
    if (auto it = spec.valuation.find(spec.worlds[i]); it != spec.valuation.end())
      for (std::size_t k = 0; k < m.atoms.size(); ++k)
        if (auto a = it->second.find(m.atoms[k]); a != it->second.end()) row[k] = *parse_value(a->second);
    m.valuation.push_back(std::move(row));
  }
  return m;
}

ModelSpec Model::to_spec() const {
  ModelSpec s;
  s.worlds = frame.worlds;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    s.logics[frame.worlds[i]] = std::string(to_string(frame.logics[i]));
    for (int j : frame.successors[i]) s.relation.emplace_back(frame.worlds[i], frame.worlds[static_cast<std::size_t>(j)]);
    for (std::size_t k = 0; k < atoms.size(); ++k)
      s.valuation[frame.worlds[i]][atoms[k]] = std::string(to_string(valuation[i][k]));
  }
  s.diamond = diamond;
  return s;
}

namespace {

class Evaluator {
 public:
  explicit Evaluator(const Model& m) : m_(m), n_(m.frame.size()) {}

  const std::vector<Value>& run(const Formula& f) {
    if (auto it = memo_.find(f.id()); it != memo_.end()) return it->second;
    std::vector<Value> out(n_);
    switch (f.op()) {
      case Op::atom: {
        const int k = m_.atom_index(f.name());
        if (k < 0) throw Error(ErrorKind::unknown_atom, "atom " + f.name() + " has no value in the model");
        for (std::size_t w = 0; w < n_; ++w) out[w] = m_.valuation[w][static_cast<std::size_t>(k)];
        break;
      }
      case Op::bottom:
        for (std::size_t w = 0; w < n_; ++w) out[w] = logic(w).bottom();
        break;
      case Op::neg:
      case Op::circ:
      case Op::cneg:
      case Op::nabla: {
        const Connective c = f.op() == Op::neg    ? Connective::neg
                             : f.op() == Op::circ ? Connective::circ
                             : f.op() == Op::cneg ? Connective::cneg
                                                  : Connective::nabla;
        const auto& a = run(f.operand());
        for (std::size_t w = 0; w < n_; ++w) out[w] = apply(logic(w), c, a[w]);
        break;
      }
      case Op::conj:
      case Op::disj:
      case Op::imp:
      case Op::impl: {
        const Connective c = f.op() == Op::conj   ? Connective::conj
                             : f.op() == Op::disj ? Connective::disj
                             : f.op() == Op::imp  ? Connective::imp
                                                  : Connective::impl;
        const auto a = run(f.lhs());
        const auto& b = run(f.rhs());
        for (std::size_t w = 0; w < n_; ++w) out[w] = apply(logic(w), c, a[w], b[w]);
        break;
      }
      case Op::box: {
        const auto& a = run(f.operand());
        for (std::size_t w = 0; w < n_; ++w) {
          const Lattice& lat = *logic(w).lattice;
          Value acc = lat.top();
          for (int s : m_.frame.successors[w]) acc = lat.meet_unchecked(acc, lat.down(a[static_cast<std::size_t>(s)]));
          out[w] = acc;
        }
        break;
      }
      case Op::diamond: {
        if (m_.diamond == DiamondVariant::negbox || m_.diamond == DiamondVariant::cnegbox) {
          const Op n = m_.diamond == DiamondVariant::negbox ? Op::neg : Op::cneg;
          const Formula dual = Formula::unary(n, Formula::box(Formula::unary(n, f.operand())));
          keep_.push_back(dual);
          out = run(dual);
          break;
        }
        const auto& a = run(f.operand());
        const bool up = m_.diamond == DiamondVariant::up;
        for (std::size_t w = 0; w < n_; ++w) {
          const Lattice& lat = *logic(w).lattice;
          Value acc = lat.bottom();
          for (int s : m_.frame.successors[w]) {
            const Value x = a[static_cast<std::size_t>(s)];
            acc = lat.join_unchecked(acc, up ? lat.up(x) : lat.down(x));
          }
          out[w] = acc;
        }
        break;
      }
    }
    keep_.push_back(f);
    return memo_.emplace(f.id(), std::move(out)).first->second;
  }

 private:
  const MatrixLogic& logic(std::size_t w) const { return m_.frame.logic(static_cast<int>(w)); }

  const Model& m_;
  std::size_t n_;
  std::unordered_map<const void*, std::vector<Value>> memo_;
  std::vector<Formula> keep_;  // keeps memo keys alive
};

}  // namespace

std::vector<Value> eval_all(const Model& model, const Formula& f) {
  Evaluator e(model);
  return e.run(f);
}

std::vector<std::vector<Value>> eval_many(const Model& model, const std::vector<Formula>& fs) {
  Evaluator e(model);
  std::vector<std::vector<Value>> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(e.run(f));
  return out;
}

Value eval(const Model& model, int world, const Formula& f) {
  if (world < 0 || static_cast<std::size_t>(world) >= model.frame.size())
    throw Error(ErrorKind::unknown_world, "world index " + std::to_string(world) + " out of range");
  return eval_all(model, f)[static_cast<std::size_t>(world)];
}

Value eval(const Model& model, const std::string& world, const Formula& f) {
  return eval(model, model.frame.index_of(world), f);
}

bool holds(const Model& model, int world, const Formula& f) {
  return model.frame.logic(world).is_designated(eval(model, world, f));
}

bool holds(const Model& model, const std::string& world, const Formula& f) {
  return holds(model, model.frame.index_of(world), f);
}

}  // namespace mlms
