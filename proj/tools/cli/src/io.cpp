#include "logmut/cli/io.hpp"

#include <algorithm>

namespace logmut::io {

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw Error(ErrorKind::Parse, what); }

Int as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) schema_error(where + ": expected an integer");
  return j.get<Int>();
}

LatticeVec as_vec(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) schema_error(where + ": expected [x, y]");
  return {as_int(j[0], where), as_int(j[1], where)};
}

Rational as_rational(const std::string& s) {
  Rational q;
  try {
    q = Rational(s, 10);
  } catch (const std::invalid_argument&) {
    schema_error("bad rational '" + s + "'");
  }
  if (q.get_den() == 0) schema_error("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

DatumDocument parse_datum_document(std::string_view text) { return parse_datum_document(parse_json(text)); }

DatumDocument parse_datum_document(const json& j) {
  if (!j.is_object()) schema_error("datum document must be an object");
  if (!j.contains("edges") || !j["edges"].is_array()) schema_error("datum document needs an \"edges\" array");
  std::vector<RawEdge> raw;
  std::size_t i = 0;
  for (const auto& edge : j["edges"]) {
    const std::string where = "edges[" + std::to_string(i++) + "]";
    if (!edge.is_object() || !edge.contains("e") || !edge.contains("nu")) schema_error(where + ": needs \"e\" and \"nu\"");
    LatticeVec e = as_vec(edge["e"], where + ".e");
    if (!edge["nu"].is_array()) schema_error(where + ".nu: expected an array");
    std::vector<Int> parts;
    for (const auto& p : edge["nu"]) parts.push_back(as_int(p, where + ".nu"));
    raw.push_back({e, Partition(std::move(parts))});
  }
  DatumDocument doc;
  doc.datum = LogDatum::validate(raw);
  if (j.contains("name")) {
    if (!j["name"].is_string()) schema_error("name must be a string");
    doc.name = j["name"].get<std::string>();
  }
  if (j.contains("comment")) {
    if (!j["comment"].is_string()) schema_error("comment must be a string");
    doc.comment = j["comment"].get<std::string>();
  }
  return doc;
}

json to_json(LatticeVec v) { return json::array({v.x, v.y}); }

json to_json(const Partition& p) { return json(p.parts()); }

json to_json(const LogDatum& s) {
  json edges = json::array();
  for (const auto& e : s.edges()) edges.push_back({{"e", to_json(e.vector())}, {"nu", to_json(e.partition())}});
  return {{"edges", std::move(edges)}};
}

json to_json(const DatumDocument& doc) {
  json j = to_json(doc.datum);
  if (!doc.name.empty()) j["name"] = doc.name;
  if (!doc.comment.empty()) j["comment"] = doc.comment;
  return j;
}

json to_json(const Certificate& c) {
  json steps = json::array();
  for (const auto& s : c.steps) steps.push_back({{"edge", s.edge}, {"part", s.part}});
  return {{"steps", std::move(steps)}, {"terminal", to_json(c.terminal)}};
}

Certificate parse_certificate(std::string_view text) { return parse_certificate(parse_json(text)); }

Certificate parse_certificate(const json& j) {
  if (!j.is_object() || !j.contains("steps") || !j["steps"].is_array() || !j.contains("terminal")) {
    schema_error("certificate needs \"steps\" and \"terminal\"");
  }
  Certificate c;
  for (const auto& s : j["steps"]) {
    if (!s.is_object() || !s.contains("edge") || !s.contains("part")) schema_error("step needs \"edge\" and \"part\"");
    Int edge = as_int(s["edge"], "step.edge");
    if (edge < 1) schema_error("step.edge must be >= 1");
    c.steps.push_back({static_cast<std::size_t>(edge), as_int(s["part"], "step.part")});
  }
  c.terminal = parse_datum_document(j["terminal"]).datum;
  return c;
}

json to_json(const Verdict& v) {
  json j{{"verdict", verdict_name(v)}};
  if (const auto* yes = std::get_if<VerdictYes>(&v)) {
    j["certificate"] = to_json(yes->certificate);
  } else if (const auto* no = std::get_if<VerdictNo>(&v)) {
    j["explored"] = no->explored;
  } else if (const auto* unk = std::get_if<VerdictUnknown>(&v)) {
    j["explored"] = unk->explored;
    j["depth_bound"] = unk->depth_bound;
    j["state_limit_hit"] = unk->state_limit_hit;
    j["overflow_pruned"] = unk->overflow_pruned;
  }
  return j;
}

json to_json(const BiPoly& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back(json::array({e.first, e.second, c.get_str()}));
  return terms;
}

BiPoly parse_bipoly(const json& j) {
  if (j.is_string()) return logmut::parse_bipoly(j.get<std::string>());
  if (!j.is_array()) schema_error("polynomial must be a string or an array of [a, b, \"p/q\"]");
  BiPoly f;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) schema_error("polynomial term must be [a, b, \"p/q\"]");
    Int a = as_int(t[0], "term x-exponent"), b = as_int(t[1], "term u-exponent");
    if (a < 0 || b < 0 || a > 1000 || b > 1000) schema_error("term exponent out of range");
    Rational c;
    if (t[2].is_number_integer()) {
      c = Rational(t[2].get<long>());
    } else if (t[2].is_string()) {
      c = as_rational(t[2].get<std::string>());
    } else {
      schema_error("term coefficient must be \"p/q\" or an integer");
    }
    f += BiPoly::term(static_cast<int>(a), static_cast<int>(b), c);
  }
  return f;
}

json to_json(const WallAssignment& w, const LogDatum& s) {
  json walls = json::array();
  for (std::size_t i = 0; i < w.walls.size(); ++i) {
    json factors = json::array();
    json text = json::array();
    for (const auto& f : w.walls[i].factors) {
      factors.push_back(to_json(f));
      text.push_back(f.to_string());
    }
    json wall{{"factors", std::move(factors)}, {"text", std::move(text)}};
    if (i < s.size()) wall["e"] = to_json(s[i].vector());
    walls.push_back(std::move(wall));
  }
  return {{"walls", std::move(walls)}};
}

WallAssignment parse_wall_assignment(std::string_view text, const LogDatum& s) {
  return parse_wall_assignment(parse_json(text), s);
}

WallAssignment parse_wall_assignment(const json& j, const LogDatum& s) {
  if (!j.is_object() || !j.contains("walls") || !j["walls"].is_array()) schema_error("wall assignment needs a \"walls\" array");
  const auto& walls = j["walls"];
  if (walls.size() != s.size()) {
    throw Error(ErrorKind::ShapeMismatch, "datum has " + std::to_string(s.size()) + " edges but " +
                                              std::to_string(walls.size()) + " walls were given");
  }
  WallAssignment w;
  w.walls.resize(s.size());
  std::vector<bool> filled(s.size(), false);
  for (std::size_t i = 0; i < walls.size(); ++i) {
    const auto& wall = walls[i];
    if (!wall.is_object() || !wall.contains("factors") || !wall["factors"].is_array()) {
      schema_error("walls[" + std::to_string(i) + "] needs a \"factors\" array");
    }
    std::size_t slot = i;
    if (wall.contains("e")) {
      LatticeVec e = as_vec(wall["e"], "walls[" + std::to_string(i) + "].e");
      auto it = std::find_if(s.edges().begin(), s.edges().end(), [&](const Edge& edge) { return edge.vector() == e; });
      if (it == s.edges().end()) throw Error(ErrorKind::ShapeMismatch, "no edge " + to_string(e) + " in the datum");
      slot = static_cast<std::size_t>(it - s.edges().begin());
    }
    if (filled[slot]) throw Error(ErrorKind::ShapeMismatch, "two walls for edge " + std::to_string(slot + 1));
    filled[slot] = true;
    for (const auto& f : wall["factors"]) w.walls[slot].factors.push_back(parse_bipoly(f));
  }
  return w;
}

}  // namespace logmut::io
