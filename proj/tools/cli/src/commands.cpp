#include "logmut/cli/commands.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "logmut/cli/io.hpp"
#include "logmut/cli/svg.hpp"
#include "logmut/decider.hpp"
#include "logmut/mutation.hpp"
#include "logmut/wallfn.hpp"

namespace logmut::cli {

namespace {

using io::json;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << content;
  if (!out) throw IoError("failed writing '" + path + "'");
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return kIoOrParse;
    case ErrorKind::IllegalMutation: return kIllegalMutation;
    default: return kInvalidDatum;
  }
}

struct InputOptions {
  std::string path;
  std::string named;

  void attach(CLI::App* cmd) {
    cmd->add_option("path", path, "Datum JSON file");
    cmd->add_option("--named", named, "Use a named datum instead: A<n>, tom or jerry");
  }

  io::DatumDocument load() const {
    if (!named.empty()) return {logmut::named(std::string_view(named)), named, {}};
    if (path.empty()) throw IoError("no input: give a datum file or --named");
    return io::parse_datum_document(std::string_view(read_file(path)));
  }
};

struct LimitOptions {
  std::size_t max_depth = SearchLimits{}.max_depth;
  std::size_t max_states = SearchLimits{}.max_states;
  unsigned threads = 1;

  void attach(CLI::App* cmd) {
    cmd->add_option("--max-depth", max_depth, "Longest mutation sequence explored")->capture_default_str();
    cmd->add_option("--max-states", max_states, "Distinct classes stored before giving up")->capture_default_str();
    cmd->add_option("--threads", threads, "Worker threads for frontier expansion")->capture_default_str()->check(CLI::PositiveNumber);
  }

  SearchLimits limits() const { return {max_depth, max_states, threads}; }
};

bool is_flat(const json& j) {
  return std::none_of(j.begin(), j.end(), [](const json& v) { return v.is_structured(); });
}

// Like dump(2), but arrays of scalars stay on one line.
void pretty(std::ostream& os, const json& j, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
  if (j.is_array() && (j.empty() || is_flat(j))) {
    os << j.dump();
  } else if (j.is_array()) {
    os << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      os << pad;
      pretty(os, j[i], indent + 2);
      os << (i + 1 < j.size() ? ",\n" : "\n");
    }
    os << std::string(static_cast<std::size_t>(indent), ' ') << ']';
  } else if (j.is_object() && !j.empty()) {
    const bool inline_obj = is_flat(j) || std::all_of(j.begin(), j.end(), [](const json& v) {
                              return !v.is_structured() || (v.is_array() && is_flat(v));
                            });
    if (inline_obj && j.size() <= 3) {
      os << '{';
      std::size_t i = 0;
      for (auto it = j.begin(); it != j.end(); ++it, ++i) os << (i ? ", " : "") << json(it.key()).dump() << ": " << it->dump();
      os << '}';
      return;
    }
    os << "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      os << pad << json(it.key()).dump() << ": ";
      pretty(os, *it, indent + 2);
      os << (i + 1 < j.size() ? ",\n" : "\n");
    }
    os << std::string(static_cast<std::size_t>(indent), ' ') << '}';
  } else {
    os << j.dump();
  }
}

void emit(std::ostream& out, const json& j) {
  pretty(out, j);
  out << '\n';
}

std::string partition_text(const Partition& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

std::string assignment_text(const std::vector<Partition>& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + partition_text(a[i]);
  return s + ")";
}

std::size_t resolve_edge(const LogDatum& s, const std::string& spec) {
  if (spec.find(',') != std::string::npos) {
    std::string t = spec;
    for (char& c : t) {
      if (c == '(' || c == ')' || c == '[' || c == ']' || c == ',') c = ' ';
    }
    std::istringstream in(t);
    Int x, y;
    if (!(in >> x >> y)) throw Error(ErrorKind::Parse, "bad edge vector '" + spec + "'");
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i].vector() == LatticeVec{x, y}) return i + 1;
    }
    throw Error(ErrorKind::IllegalMutation, "no edge with vector " + to_string(LatticeVec{x, y}));
  }
  try {
    std::size_t used = 0;
    long v = std::stol(spec, &used);
    if (used != spec.size() || v < 1) throw std::invalid_argument(spec);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw Error(ErrorKind::Parse, "bad edge '" + spec + "' (1-based position or x,y)");
  }
}

json fan_json(const FanPresentation& fan) {
  json cones = json::array(), walls = json::array();
  for (const auto& c : fan.maximal_cones) cones.push_back(json::array({c.first, c.second, c.joint}));
  for (const auto& w : fan.walls) walls.push_back(json::array({w.ray, w.joint}));
  return {{"maximal_cones", cones}, {"walls", walls}, {"joint", fan.joint}};
}

std::string vec3_text(const Vec3& v) {
  return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," + std::to_string(v[2]) + ")";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mutations and zero-mutability of log data on a rank-2 lattice", "logmut"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable JSON on stdout");

  // validate
  InputOptions validate_in;
  auto* validate = app.add_subcommand("validate", "Check a datum and print it in canonical order");
  validate_in.attach(validate);

  // named
  std::string named_name;
  auto* named_cmd = app.add_subcommand("named", "Print a named datum: A<n>, tom, jerry");
  named_cmd->add_option("name", named_name)->required();

  // mutate
  InputOptions mutate_in;
  std::string edge_spec;
  std::size_t part_index = 0;
  Int part_value = 0;
  bool trace = false;
  auto* mutate_cmd = app.add_subcommand("mutate", "Apply one mutation");
  mutate_in.attach(mutate_cmd);
  mutate_cmd->add_option("--edge", edge_spec, "1-based counterclockwise position, or the edge vector x,y")->required();
  auto* part_opt = mutate_cmd->add_option("--part", part_index, "1-based index into the decreasing partition");
  auto* value_opt = mutate_cmd->add_option("--part-value", part_value, "Mutate the first part with this value");
  part_opt->excludes(value_opt);
  mutate_cmd->add_flag("--trace", trace, "Report the branches taken");

  // decide
  InputOptions decide_in;
  LimitOptions decide_limits;
  std::string cert_path;
  auto* decide = app.add_subcommand("decide", "Search for a mutation sequence to a zero-mutable rank-one datum");
  decide_in.attach(decide);
  decide_limits.attach(decide);
  decide->add_option("--cert", cert_path, "Write the certificate JSON here on Yes");

  // enumerate
  InputOptions enum_in;
  LimitOptions enum_limits;
  std::string edges_text;
  auto* enumerate = app.add_subcommand("enumerate", "Decide every partition assignment on fixed edge vectors");
  enum_in.attach(enumerate);
  enum_limits.attach(enumerate);
  enumerate->add_option("--edges", edges_text, "Edge vectors as JSON, e.g. [[3,0],[0,2],[-3,-2]]");

  // render
  InputOptions render_in;
  std::string svg_path;
  svg::RenderSpec spec;
  bool no_labels = false, no_points = false;
  auto* render = app.add_subcommand("render", "Draw the polygon of a datum as SVG");
  render_in.attach(render);
  render->add_option("--svg", svg_path, "Output file (stdout if omitted)");
  render->add_option("--scale", spec.scale, "Pixels per lattice unit")->capture_default_str()->check(CLI::PositiveNumber);
  render->add_flag("--no-labels", no_labels, "Omit edge labels");
  render->add_flag("--no-points", no_points, "Omit lattice points");

  // report
  InputOptions report_in;
  std::string walls_path;
  std::optional<std::uint64_t> gen_seed;
  auto* report = app.add_subcommand("report", "Fan, component types, kinks and wall-function checks");
  report_in.attach(report);
  report->add_option("--walls", walls_path, "Wall assignment JSON to check");
  report->add_option("--gen-walls", gen_seed, "Synthesize a generic wall assignment from this seed");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kIoOrParse;
  }

  try {
    if (validate->parsed()) {
      auto doc = validate_in.load();
      if (as_json) {
        emit(out, json{{"valid", true}, {"datum", io::to_json(doc)}});
      } else {
        emit(out, io::to_json(doc));
      }
      return kOk;
    }

    if (named_cmd->parsed()) {
      io::DatumDocument doc{logmut::named(std::string_view(named_name)), named_name, {}};
      emit(out, io::to_json(doc));
      return kOk;
    }

    if (mutate_cmd->parsed()) {
      auto doc = mutate_in.load();
      const LogDatum& s = doc.datum;
      std::size_t edge = resolve_edge(s, edge_spec);
      std::size_t k = part_index;
      if (value_opt->count() > 0) {
        k = part_index_of(s, edge, part_value);
        if (k == 0) {
          throw Error(ErrorKind::IllegalMutation,
                      "edge " + std::to_string(edge) + " has no part equal to " + std::to_string(part_value));
        }
      } else if (part_opt->count() == 0) {
        k = 1;
      }
      MutationTrace t = mutate_traced(s, {edge, k});
      if (as_json) {
        json branches = json::array();
        for (auto b : t.branches) branches.push_back(std::string(to_string(b)));
        emit(out, json{{"datum", io::to_json(t.result)},
                    {"edge", edge},
                    {"part", k},
                    {"h", t.height},
                    {"part_value", t.part_value},
                    {"branches", branches}});
      } else {
        if (trace) {
          out << "# mutation at edge " << edge << " " << s[edge - 1] << ", part " << k << " (value " << t.part_value
              << "), h = " << t.height << '\n';
          out << "# branches:";
          for (auto b : t.branches) out << ' ' << to_string(b);
          out << '\n';
        }
        emit(out, io::to_json(t.result));
      }
      return kOk;
    }

    if (decide->parsed()) {
      auto doc = decide_in.load();
      Verdict v = is_zero_mutable(doc.datum, decide_limits.limits());
      if (const auto* yes = std::get_if<VerdictYes>(&v); yes && !cert_path.empty()) {
        std::ostringstream cert;
        emit(cert, io::to_json(yes->certificate));
        write_file(cert_path, cert.str());
      }
      if (as_json) {
        json j = io::to_json(v);
        j["datum"] = io::to_json(doc.datum);
        emit(out, j);
      } else {
        out << verdict_name(v) << '\n';
        if (const auto* yes = std::get_if<VerdictYes>(&v)) {
          out << "certificate: " << yes->certificate.steps.size() << " mutation(s)\n";
          for (std::size_t i = 0; i < yes->certificate.steps.size(); ++i) {
            const auto& st = yes->certificate.steps[i];
            out << "  " << (i + 1) << ": edge " << st.edge << ", part " << st.part << '\n';
          }
          out << "terminal: " << yes->certificate.terminal << '\n';
        } else if (const auto* no = std::get_if<VerdictNo>(&v)) {
          out << "explored " << no->explored << " classes; no zero-mutable rank-one datum is reachable\n";
        } else if (const auto* unk = std::get_if<VerdictUnknown>(&v)) {
          const char* reason = unk->state_limit_hit          ? "the state limit"
                               : unk->depth_bound == decide_limits.max_depth ? "the depth limit"
                                                                            : "integer overflow";
          out << "explored " << unk->explored << " classes; stopped by " << reason << " (depth " << unk->depth_bound
              << ")\n";
          if (unk->overflow_pruned > 0) out << unk->overflow_pruned << " successor(s) left the 64-bit range\n";
        }
      }
      if (is_yes(v)) return kOk;
      return is_no(v) ? kVerdictNo : kVerdictUnknown;
    }

    if (enumerate->parsed()) {
      std::vector<LatticeVec> edges;
      if (!edges_text.empty()) {
        json j = io::parse_json(edges_text);
        if (!j.is_array()) throw Error(ErrorKind::Parse, "--edges must be a JSON array of [x, y]");
        for (const auto& e : j) {
          if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
            throw Error(ErrorKind::Parse, "--edges must be a JSON array of [x, y]");
          }
          edges.push_back({e[0].get<Int>(), e[1].get<Int>()});
        }
      } else {
        const auto doc = enum_in.load();
        for (const auto& e : doc.datum.edges()) edges.push_back(e.vector());
      }
      auto rows = enumerate_zero_mutable(edges, enum_limits.limits());
      if (as_json) {
        json jrows = json::array();
        for (const auto& r : rows) {
          json a = json::array();
          for (const auto& p : r.assignment) a.push_back(io::to_json(p));
          json row = io::to_json(r.verdict);
          row["assignment"] = a;
          jrows.push_back(row);
        }
        json e = json::array();
        for (auto v : edges) e.push_back(io::to_json(v));
        emit(out, json{{"edges", e}, {"rows", jrows}});
      } else {
        out << "#  assignment  verdict\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
          out << (i + 1) << "  " << assignment_text(rows[i].assignment) << "  " << verdict_name(rows[i].verdict);
          if (const auto* yes = std::get_if<VerdictYes>(&rows[i].verdict)) {
            out << " (" << yes->certificate.steps.size() << " steps)";
          }
          out << '\n';
        }
      }
      return kOk;
    }

    if (render->parsed()) {
      auto doc = render_in.load();
      spec.label_edges = !no_labels;
      spec.show_lattice_points = !no_points;
      std::string image = svg::render(doc.datum, spec);
      json verts = json::array();
      for (auto v : polygon(doc.datum)) verts.push_back(io::to_json(v));
      if (svg_path.empty()) {
        if (as_json) {
          emit(out, json{{"vertices", verts}, {"svg", image}});
        } else {
          out << image;
        }
      } else {
        write_file(svg_path, image);
        if (as_json) emit(out, json{{"vertices", verts}, {"file", svg_path}});
      }
      return kOk;
    }

    if (report->parsed()) {
      auto doc = report_in.load();
      const LogDatum& s = doc.datum;
      FanPresentation fan = fan_presentation(s);
      ComponentReport comps = component_types(s);
      KinkReport kr = kinks(s);
      json j{{"datum", io::to_json(s)}, {"fan", fan_json(fan)}};
      json jc = json::array();
      for (const auto& c : comps.components) jc.push_back({{"index", c.index}, {"label", c.label}});
      j["components"] = jc;
      j["kinks"] = kr.kinks;

      if (!as_json) {
        out << "datum " << s << '\n';
        out << "fan: joint " << vec3_text(fan.joint) << '\n';
        for (std::size_t i = 0; i < fan.maximal_cones.size(); ++i) {
          const auto& c = fan.maximal_cones[i];
          out << "  cone " << (i + 1) << ": <" << vec3_text(c.first) << ", " << vec3_text(c.second) << ", "
              << vec3_text(c.joint) << ">  index " << comps.components[i].index << "  " << comps.components[i].label
              << '\n';
        }
        out << "kinks:";
        for (Int k : kr.kinks) out << ' ' << k;
        out << '\n';
      }

      auto check_walls = [&](const WallAssignment& w) {
        bool joint = joint_compatible(s, w);
        SubordinationReport sub = is_subordinate(s, w);
        json jw{{"joint_compatible", joint}, {"subordinate", sub.subordinate}, {"problems", sub.problems}};
        std::optional<GenericityReport> gen;
        if (sub.subordinate) {
          gen = is_generic(s, w);
          jw["generic"] = gen->generic;
          json pairs = json::array();
          for (const auto& p : gen->pairs) {
            pairs.push_back({{"edge", p.edge},
                             {"factors", json::array({p.first, p.second})},
                             {"proportional", p.proportional},
                             {"common_component", p.common_component},
                             {"resultant_u", p.resultant.to_string('x')},
                             {"meets_only_at_origin_globally", p.meets_only_at_origin_globally}});
          }
          jw["pairs"] = pairs;
        }
        j["walls"] = io::to_json(w, s);
        j["wall_check"] = jw;
        if (!as_json) {
          out << "wall functions:\n";
          for (std::size_t i = 0; i < w.walls.size(); ++i) {
            out << "  f_" << (i + 1) << " =";
            for (const auto& f : w.walls[i].factors) out << " (" << f.to_string() << ")";
            out << '\n';
          }
          out << (joint ? "joint-compatible" : "not joint-compatible") << '\n';
          out << (sub.subordinate ? "subordinate" : "not subordinate") << '\n';
          for (const auto& p : sub.problems) out << "  " << p << '\n';
          if (gen) out << (gen->generic ? "generic" : "not generic") << '\n';
        }
      };
      if (!walls_path.empty()) check_walls(io::parse_wall_assignment(std::string_view(read_file(walls_path)), s));
      if (gen_seed) check_walls(generic_wall_assignment(s, *gen_seed));
      if (as_json) emit(out, j);
      return kOk;
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    if (as_json) emit(out, json{{"error", "IO"}, {"message", e.what()}});
    return kIoOrParse;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (as_json) emit(out, json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}});
    return exit_code_for(e.kind());
  }
  return kIoOrParse;
}

}  // namespace logmut::cli
