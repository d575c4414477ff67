#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "../support.hpp"
#include "logmut/cli/commands.hpp"
#include "logmut/cli/io.hpp"
#include "logmut/decider.hpp"
#include "logmut/mutation.hpp"

using namespace logmut;
using nlohmann::json;
using testing::fixture;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "logmut");
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

LogDatum datum_of(const std::string& text) { return io::parse_datum_document(std::string_view(text)).datum; }

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("logmut_cli_test_" + name)).string();
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string p = temp_path(name);
  std::ofstream(p) << content;
  return p;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::vector<Int>> vertices(const json& j) { return j.at("vertices").get<std::vector<std::vector<Int>>>(); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("validate") {
  auto r = invoke({"validate", fixture("tom.json")});
  CHECK(r.code == cli::kOk);
  CHECK(datum_of(r.out) == testing::tom());

  auto bad = invoke({"validate", fixture("bad_closure.json")});
  CHECK(bad.code == cli::kInvalidDatum);
  CHECK(bad.err.find("ClosureViolation") != std::string::npos);

  auto missing = invoke({"validate", fixture("no_such_file.json")});
  CHECK(missing.code == cli::kIoOrParse);

  auto garbage = invoke({"validate", write_temp("garbage.json", "{\"edges\": [")});
  CHECK(garbage.code == cli::kIoOrParse);

  CHECK(invoke({"validate"}).code == cli::kIoOrParse);
  CHECK(invoke({"frobnicate"}).code == cli::kIoOrParse);
  CHECK(invoke({"--help"}).code == cli::kOk);
}

TEST_CASE("validate sorts and round trips") {
  auto shuffled = write_temp("shuffled.json",
                             R"({"edges":[{"e":[-3,-2],"nu":[1]},{"e":[3,0],"nu":[1,2]},{"e":[0,2],"nu":[1,1]}]})");
  auto r = invoke({"validate", shuffled});
  REQUIRE(r.code == cli::kOk);
  auto again = invoke({"validate", write_temp("roundtrip.json", r.out)});
  CHECK(again.out == r.out);
  CHECK(datum_of(r.out) == testing::tom());

  auto named = invoke({"named", "A3"});
  CHECK(datum_of(named.out) == testing::an(3));
  CHECK(invoke({"named", "B7"}).code == cli::kIoOrParse);
}

TEST_CASE("mutate") {
  auto r = invoke({"mutate", fixture("quad.json"), "--edge", "-2,0"});
  REQUIRE(r.code == cli::kOk);
  CHECK(datum_of(r.out) == testing::quad_mutated());

  auto by_position = invoke({"mutate", fixture("quad.json"), "--edge", "3", "--part-value", "2"});
  CHECK(by_position.out == r.out);

  auto j = invoke({"--json", "mutate", "--named", "jerry", "--edge", "2", "--part", "1"});
  REQUIRE(j.code == cli::kOk);
  auto doc = json::parse(j.out);
  CHECK(doc["h"] == 3);
  CHECK(doc["part_value"] == 2);
  CHECK(io::parse_datum_document(doc["datum"]).datum == mutate(testing::jerry(), {2, 1}));

  auto traced = invoke({"mutate", "--named", "jerry", "--edge", "2", "--trace"});
  CHECK(traced.out.rfind("# mutation at edge 2", 0) == 0);

  auto stuck = invoke({"mutate", fixture("stuck.json"), "--edge", "2"});
  CHECK(stuck.code == cli::kIllegalMutation);
  CHECK(stuck.err.find("h") != std::string::npos);

  CHECK(invoke({"mutate", "--named", "tom", "--edge", "7"}).code == cli::kIllegalMutation);
  CHECK(invoke({"mutate", "--named", "tom", "--edge", "5,5"}).code == cli::kIllegalMutation);
  CHECK(invoke({"mutate", "--named", "tom", "--edge", "1", "--part", "1", "--part-value", "2"}).code ==
        cli::kIoOrParse);
}

TEST_CASE("decide") {
  auto a5 = invoke({"--json", "decide", "--named", "A5"});
  REQUIRE(a5.code == cli::kOk);
  auto j = json::parse(a5.out);
  CHECK(j["verdict"] == "Yes");
  CHECK(j["certificate"]["steps"].size() == 6);

  auto tom = invoke({"decide", fixture("tom.json")});
  CHECK(tom.code == cli::kOk);
  CHECK(tom.out.rfind("Yes\n", 0) == 0);
  CHECK(tom.out.find("certificate: 3 mutation(s)") != std::string::npos);

  auto rank_one = write_temp("rank_one.json", R"({"edges":[{"e":[2,0],"nu":[2]},{"e":[-2,0],"nu":[1,1]}]})");
  auto no = invoke({"decide", rank_one});
  CHECK(no.code == cli::kVerdictNo);
  CHECK(no.out.rfind("No\n", 0) == 0);

  auto unknown = invoke({"--json", "decide", "--named", "A6", "--max-depth", "2"});
  CHECK(unknown.code == cli::kVerdictUnknown);
  CHECK(json::parse(unknown.out)["verdict"] == "Unknown");

  std::string cert = temp_path("jerry_cert.json");
  std::filesystem::remove(cert);
  REQUIRE(invoke({"decide", fixture("jerry.json"), "--cert", cert}).code == cli::kOk);
  auto c = io::parse_certificate(std::string_view(slurp(cert)));
  CHECK(c.steps.size() == 4);
  CHECK(verify_certificate(testing::jerry(), c));

  CHECK(invoke({"decide", "--named", "tom", "--threads", "0"}).code == cli::kIoOrParse);
}

TEST_CASE("enumerate") {
  auto r = invoke({"enumerate", "--edges", "[[3,0],[0,2],[-3,-2]]", "--max-depth", "4"});
  REQUIRE(r.code == cli::kOk);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line))
    if (!line.empty() && line[0] != '#') ++count;
  CHECK(count == 6);

  auto j = invoke({"--json", "enumerate", "--named", "tom", "--max-depth", "4"});
  REQUIRE(j.code == cli::kOk);
  auto doc = json::parse(j.out);
  REQUIRE(doc["rows"].size() == 6);
  CHECK(doc["rows"][3]["verdict"] == "Yes");
  CHECK(doc["rows"][4]["verdict"] == "Yes");

  CHECK(invoke({"enumerate", "--edges", "[[3,0],[0,2]"}).code == cli::kIoOrParse);
  CHECK(invoke({"enumerate", "--edges", "[[1,0],[0,1]]"}).code == cli::kInvalidDatum);
}

TEST_CASE("render") {
  auto a = invoke({"render", fixture("quad.json")});
  auto b = invoke({"render", fixture("quad.json")});
  REQUIRE(a.code == cli::kOk);
  CHECK(a.out == b.out);
  CHECK(a.out.find("<svg") != std::string::npos);
  CHECK(a.out.find("((-2,0),(2))") != std::string::npos);

  auto bare = invoke({"render", fixture("quad.json"), "--no-labels", "--no-points"});
  CHECK(bare.out.find("<text") == std::string::npos);
  CHECK(bare.out.find("<circle") == std::string::npos);

  auto fig = json::parse(invoke({"--json", "render", fixture("quad.json")}).out);
  CHECK(vertices(fig) == std::vector<std::vector<Int>>{{0, 0}, {2, 1}, {-1, 3}, {-3, 3}});
  CHECK(fig["svg"].get<std::string>() == a.out);

  auto tom = json::parse(invoke({"--json", "render", "--named", "tom"}).out);
  CHECK(vertices(tom) == std::vector<std::vector<Int>>{{0, 0}, {3, 0}, {3, 2}});

  auto seg = write_temp("segment.json", R"({"edges":[{"e":[1,0],"nu":[1]},{"e":[-1,0],"nu":[1]}]})");
  auto one = json::parse(invoke({"--json", "render", seg}).out);
  CHECK(vertices(one) == std::vector<std::vector<Int>>{{0, 0}, {1, 0}});

  std::string file = temp_path("tom.svg");
  auto written = invoke({"--json", "render", "--named", "tom", "--svg", file});
  REQUIRE(written.code == cli::kOk);
  CHECK(json::parse(written.out)["file"] == file);
  CHECK(slurp(file) == invoke({"render", "--named", "tom"}).out);
}

TEST_CASE("report") {
  auto r = invoke({"--json", "report", fixture("tom.json")});
  REQUIRE(r.code == cli::kOk);
  auto j = json::parse(r.out);
  CHECK(j["kinks"] == json::array({3, 2, 1}));
  REQUIRE(j["components"].size() == 3);
  CHECK(j["components"][0]["index"] == 1);
  CHECK(j["components"][0]["label"] == "smooth");
  CHECK(j["components"][1]["index"] == 3);
  CHECK(j["components"][2]["index"] == 2);
  CHECK(j["fan"]["maximal_cones"].size() == 3);

  auto text = invoke({"report", "--named", "tom"});
  CHECK(text.out.find("kinks: 3 2 1") != std::string::npos);

  auto a3 = json::parse(invoke({"--json", "report", fixture("a3.json"), "--walls", fixture("a3_walls.json")}).out);
  CHECK(a3["wall_check"]["joint_compatible"] == true);
  CHECK(a3["wall_check"]["subordinate"] == true);
  CHECK(a3["wall_check"]["generic"] == true);

  auto single = invoke({"report", fixture("a3.json"), "--walls", fixture("a3_walls_single_factor.json")});
  CHECK(single.code == cli::kOk);
  CHECK(single.out.find("not subordinate") != std::string::npos);
  CHECK(single.out.find("joint-compatible") != std::string::npos);

  auto jerry = json::parse(invoke({"--json", "report", fixture("jerry.json"), "--walls", fixture("jerry_walls.json")}).out);
  CHECK(jerry["wall_check"]["subordinate"] == true);
  CHECK(jerry["wall_check"]["generic"] == true);

  auto gen = json::parse(invoke({"--json", "report", "--named", "jerry", "--gen-walls", "5"}).out);
  CHECK(gen["wall_check"]["generic"] == true);

  auto mismatch = invoke({"report", "--named", "tom", "--walls", fixture("a3_walls.json")});
  CHECK(mismatch.code == cli::kInvalidDatum);

  auto rank_one = write_temp("report_rank_one.json", R"({"edges":[{"e":[1,0],"nu":[1]},{"e":[-1,0],"nu":[1]}]})");
  CHECK(invoke({"report", rank_one}).code == cli::kInvalidDatum);
}

TEST_CASE("errors in json mode") {
  auto r = invoke({"--json", "validate", fixture("bad_closure.json")});
  CHECK(r.code == cli::kInvalidDatum);
  auto j = json::parse(r.out);
  CHECK(j["error"] == "ClosureViolation");
}

}  // TEST_SUITE
