#include "mlms/model_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mlms/error.hpp"

namespace mlms {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorKind::invalid_model, msg); }

const std::string& as_string(const json& j, const std::string& where) {
  if (!j.is_string()) bad(where + " must be a string");
  return j.get_ref<const std::string&>();
}

}  // namespace

ModelSpec parse_model_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) bad("model document must be a JSON object");
  for (const auto& [key, _] : doc.items())
    if (key != "worlds" && key != "logics" && key != "relation" && key != "valuation" && key != "diamond")
      bad("unknown member " + key);

  ModelSpec spec;
  if (!doc.contains("worlds") || !doc["worlds"].is_array()) bad("worlds must be an array of strings");
  for (const auto& w : doc["worlds"]) spec.worlds.push_back(as_string(w, "world name"));

  if (!doc.contains("logics") || !doc["logics"].is_object()) bad("logics must be an object mapping worlds to logics");
  for (const auto& [w, l] : doc["logics"].items()) spec.logics[w] = as_string(l, "logic of " + w);

  if (doc.contains("relation")) {
    if (!doc["relation"].is_array()) bad("relation must be an array of pairs");
    for (const auto& pair : doc["relation"]) {
      if (!pair.is_array() || pair.size() != 2) bad("relation entries must be two-element arrays");
      spec.relation.emplace_back(as_string(pair[0], "relation entry"), as_string(pair[1], "relation entry"));
    }
  }

  if (doc.contains("valuation")) {
    if (!doc["valuation"].is_object()) bad("valuation must be an object");
    for (const auto& [w, vals] : doc["valuation"].items()) {
      if (!vals.is_object()) bad("valuation of " + w + " must be an object");
      for (const auto& [atom, v] : vals.items()) spec.valuation[w][atom] = as_string(v, "value of " + atom + " at " + w);
    }
  }

  if (doc.contains("diamond")) {
    const auto& token = as_string(doc["diamond"], "diamond");
    auto d = parse_diamond(token);
    if (!d) bad("diamond must be one of up, down, negbox, cnegbox; got " + token);
    spec.diamond = d;
  }
  return spec;
}

ModelSpec load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io_error, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model_json(buf.str());
}

std::string to_json(const ModelSpec& spec, int indent) {
  json doc;
  doc["worlds"] = spec.worlds;
  doc["logics"] = json::object();
  for (const auto& [w, l] : spec.logics) doc["logics"][w] = l;
  doc["relation"] = json::array();
  for (const auto& [a, b] : spec.relation) doc["relation"].push_back({a, b});
  if (!spec.valuation.empty()) {
    doc["valuation"] = json::object();
    for (const auto& [w, vals] : spec.valuation)
      for (const auto& [atom, v] : vals) doc["valuation"][w][atom] = v;
  }
  if (spec.diamond) doc["diamond"] = std::string(to_string(*spec.diamond));
  return doc.dump(indent);
}

}  // namespace mlms
