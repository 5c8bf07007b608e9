#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "hypermatch/text_format.hpp"

using namespace hypermatch;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

/// Scratch directory per test case, removed on exit.
struct Scratch {
  fs::path dir;
  Scratch() {
    static int counter = 0;
    dir = fs::temp_directory_path() / ("hypermatch_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string path(const std::string& name) const { return (dir / name).string(); }
  void write(const std::string& name, const std::string& text) const { std::ofstream(path(name)) << text; }
  std::string read(const std::string& name) const {
    std::ifstream in(path(name));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
};

int cli(const Scratch& s, const std::string& args) {
  const std::string cmd = std::string("'") + HYPERMATCH_CLI + "' " + args + " > '" + s.path("stdout") + "' 2> '" +
                          s.path("stderr") + "'";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

json report(const Scratch& s, const std::string& name) { return json::parse(s.read(name)); }

bool verdict(const json& j, const std::string& name) {
  for (const auto& v : j["verdicts"]) {
    if (v["name"] == name) return v["pass"].get<bool>();
  }
  FAIL("missing verdict " << name);
  return false;
}

}  // namespace

TEST_CASE("generate examples") {
  Scratch s;
  REQUIRE(cli(s, "generate --family cycle --n 5 --out " + s.path("c5.gr")) == 0);
  const auto c5 = parse_graph(s.read("c5.gr"));
  CHECK(c5.num_vertices() == 5);
  CHECK(c5.num_edges() == 5);
  CHECK(c5.max_degree() == 2);

  REQUIRE(cli(s, "generate --family complete --n 4") == 0);
  CHECK(parse_graph(s.read("stdout")).num_edges() == 6);

  const std::string rh = "generate --family random-hypergraph --n 10 --m 20 --r 3 --seed 7 --out ";
  REQUIRE(cli(s, rh + s.path("a.hgr")) == 0);
  REQUIRE(cli(s, rh + s.path("b.hgr")) == 0);
  CHECK(s.read("a.hgr") == s.read("b.hgr"));
  const auto h = parse_hypergraph(s.read("a.hgr"));
  CHECK(h.num_edges() == 20);
  CHECK(h.rank() <= 3);
  REQUIRE(cli(s, "generate --family random-hypergraph --n 10 --m 20 --r 3 --seed 8 --out " + s.path("c.hgr")) == 0);
  CHECK(s.read("a.hgr") != s.read("c.hgr"));

  REQUIRE(cli(s, "generate --family d-regular --n 10 --d 3 --seed 2 --out " + s.path("reg.gr")) == 0);
  const auto reg = parse_graph(s.read("reg.gr"));
  for (VertexId v = 0; v < 10; ++v) CHECK(reg.degree(v) == 3);

  REQUIRE(cli(s, "generate --family line-graph-of --in " + s.path("c5.gr") + " --out " + s.path("lg.gr")) == 0);
  CHECK(parse_graph(s.read("lg.gr")).num_edges() == 5);

  CHECK(cli(s, "generate --family random-hypergraph --n 2 --m 3 --r 4") == 2);
  CHECK(cli(s, "generate --family d-regular --n 5 --d 3") == 2);
  CHECK(cli(s, "generate --family nope --n 5") == 2);
}

TEST_CASE("run examples") {
  Scratch s;
  s.write("tri.gr", "gr 3 3\n0 1\n1 2\n0 2\n");
  REQUIRE(cli(s, "run --algo edge-color --in " + s.path("tri.gr") + " --out " + s.path("col.txt") + " --json " +
                     s.path("r.json")) == 0);
  auto j = report(s, "r.json");
  CHECK(j["schema"] == "hypermatch.run/1");
  CHECK(j["solution"]["palette_max"].get<int>() <= 3);
  CHECK(verdict(j, "proper"));
  CHECK(j["ok"].get<bool>());
  CHECK(j["instance"]["n"] == 3);
  CHECK(j["instance"]["delta"] == 2);
  std::uint64_t total = 0;
  for (const auto& e : j["ledger"]["entries"]) total += e["rounds"].get<std::uint64_t>();
  CHECK(total == j["ledger"]["total"].get<std::uint64_t>());
  CHECK(cli(s, "verify --kind edge-coloring --in " + s.path("tri.gr") + " --solution " + s.path("col.txt")) == 0);

  s.write("star.gr", "gr 6 5\n0 1\n0 2\n0 3\n0 4\n0 5\n");
  REQUIRE(cli(s, "run --algo maximal-matching --in " + s.path("star.gr") + " --out " + s.path("m.txt") + " --json " +
                     s.path("m.json")) == 0);
  j = report(s, "m.json");
  CHECK(j["solution"]["size"] == 1);
  CHECK(verdict(j, "maximal"));
  CHECK(parse_id_list(s.read("m.txt")).size() == 1);

  REQUIRE(cli(s, "generate --family complete --n 5 --out " + s.path("k5.gr")) == 0);
  REQUIRE(cli(s, "run --algo mis --in " + s.path("k5.gr") + " --json " + s.path("mis.json")) == 0);
  j = report(s, "mis.json");
  CHECK(j["solution"]["size"] == 1);
  CHECK(verdict(j, "independent"));
  CHECK(verdict(j, "maximal"));
}

TEST_CASE("every algorithm runs and its solution verifies") {
  Scratch s;
  REQUIRE(cli(s, "generate --family random-graph --n 12 --p 0.3 --seed 5 --out " + s.path("g.gr")) == 0);
  const std::pair<const char*, const char*> cases[] = {
      {"maximal-matching", "maximal-matching"}, {"approx-matching", "matching"},
      {"edge-color", "edge-coloring"},          {"list-edge-color", "edge-coloring"},
      {"rand-edge-color", "edge-coloring"},     {"arb-edge-color", "edge-coloring"},
      {"mis", "mis"},                           {"vertex-color", "vertex-coloring"},
      {"approx-graph-matching", "graph-matching"}, {"orientation", "orientation"},
      {"pseudo-forests", "pseudo-forests"}};
  for (const auto& [algo, kind] : cases) {
    CAPTURE(algo);
    const std::string sol = s.path(std::string(algo) + ".txt");
    REQUIRE(cli(s, std::string("run --algo ") + algo + " --in " + s.path("g.gr") + " --out " + sol + " --json " +
                       s.path("r.json")) == 0);
    const auto j = report(s, "r.json");
    CHECK(j["ok"].get<bool>());
    CHECK(j["algorithm"]["name"] == algo);
    CHECK(cli(s, std::string("verify --kind ") + kind + " --in " + s.path("g.gr") + " --solution " + sol +
                     " --json " + s.path("v.json")) == 0);
    CHECK(report(s, "v.json")["schema"] == "hypermatch.verify/1");
  }

  REQUIRE(cli(s, "generate --family random-hypergraph --n 12 --m 15 --r 3 --seed 4 --out " + s.path("h.hgr")) == 0);
  REQUIRE(cli(s, "run --algo maximal-matching --in " + s.path("h.hgr") + " --out " + s.path("hm.txt") + " --json " +
                     s.path("hr.json")) == 0);
  CHECK(report(s, "hr.json")["instance"]["kind"] == "hypergraph");
  CHECK(cli(s, "verify --kind maximal-matching --in " + s.path("h.hgr") + " --solution " + s.path("hm.txt")) == 0);
}

TEST_CASE("verify rejects tampered solutions with a witness") {
  Scratch s;
  s.write("p3.gr", "gr 3 2\n0 1\n1 2\n");
  s.write("good.txt", "0 1\n1 2\n");
  s.write("bad.txt", "0 1\n1 1\n");
  CHECK(cli(s, "verify --kind edge-coloring --in " + s.path("p3.gr") + " --solution " + s.path("good.txt")) == 0);
  CHECK(cli(s, "verify --kind edge-coloring --in " + s.path("p3.gr") + " --solution " + s.path("bad.txt") +
                   " --json " + s.path("v.json")) == 1);
  auto j = report(s, "v.json");
  CHECK(!j["ok"].get<bool>());
  bool has_witness = false;
  for (const auto& v : j["verdicts"]) {
    if (!v["pass"].get<bool>()) has_witness = v.contains("witness") && !v["witness"].get<std::string>().empty();
  }
  CHECK(has_witness);

  s.write("m.txt", "0\n1\n");
  CHECK(cli(s, "verify --kind matching --in " + s.path("p3.gr") + " --solution " + s.path("m.txt")) == 1);
  s.write("single.txt", "0\n");
  CHECK(cli(s, "verify --kind matching --in " + s.path("p3.gr") + " --solution " + s.path("single.txt")) == 0);
  CHECK(cli(s, "verify --kind maximal-matching --in " + s.path("p3.gr") + " --solution " + s.path("m.txt")) == 1);

  s.write("mis.txt", "0\n1\n");
  CHECK(cli(s, "verify --kind independent-set --in " + s.path("p3.gr") + " --solution " + s.path("mis.txt")) == 1);
  s.write("orient.txt", "0 1\n2 1\n");
  CHECK(cli(s, "verify --kind orientation --in " + s.path("p3.gr") + " --solution " + s.path("orient.txt") +
                   " --bound 1") == 0);
  CHECK(cli(s, "verify --kind orientation --in " + s.path("p3.gr") + " --solution " + s.path("m.txt")) == 2);
}

TEST_CASE("exit codes for usage, parse and oracle budget") {
  Scratch s;
  s.write("g.gr", "gr 3 2\n0 1\n1 2\n");
  s.write("broken.gr", "gr 3 2\n0 1\n");
  CHECK(cli(s, "") == 2);
  CHECK(cli(s, "run --in " + s.path("g.gr")) == 2);
  CHECK(cli(s, "run --algo nope --in " + s.path("g.gr")) == 2);
  CHECK(cli(s, "run --algo mis --in " + s.path("broken.gr")) == 2);
  CHECK(s.read("stderr").find("line") != std::string::npos);
  CHECK(cli(s, "run --algo mis --in " + s.path("missing.gr")) != 0);
  CHECK(cli(s, "run --algo approx-graph-matching --eps 0 --in " + s.path("g.gr")) == 2);
  CHECK(cli(s, "verify --kind nope --in " + s.path("g.gr") + " --solution " + s.path("g.gr")) == 2);

  REQUIRE(cli(s, "generate --family random-graph --n 40 --p 0.5 --seed 1 --out " + s.path("big.gr")) == 0);
  CHECK(cli(s, "run --algo maximal-matching --oracle --in " + s.path("big.gr")) == 3);
  CHECK(cli(s, "run --algo maximal-matching --in " + s.path("big.gr") + " --json " + s.path("r.json")) == 0);
  CHECK(report(s, "r.json")["oracle"]["max_matching"].contains("skipped"));
}

TEST_CASE("reports are deterministic modulo the timestamp") {
  Scratch s;
  REQUIRE(cli(s, "generate --family random-hypergraph --n 20 --m 30 --r 3 --seed 9 --out " + s.path("h.hgr")) == 0);
  for (const char* algo : {"maximal-matching", "approx-matching"}) {
    REQUIRE(cli(s, std::string("run --algo ") + algo + " --seed 3 --in " + s.path("h.hgr") + " --json " + s.path("a.json")) == 0);
    REQUIRE(cli(s, std::string("run --algo ") + algo + " --seed 3 --in " + s.path("h.hgr") + " --json " + s.path("b.json")) == 0);
    auto a = report(s, "a.json");
    auto b = report(s, "b.json");
    a.erase("timestamp");
    b.erase("timestamp");
    CHECK(a.dump() == b.dump());
  }
  s.write("g.gr", "gr 6 7\n0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n0 3\n");
  REQUIRE(cli(s, "run --algo rand-edge-color --seed 11 --in " + s.path("g.gr") + " --json " + s.path("a.json")) == 0);
  REQUIRE(cli(s, "run --algo rand-edge-color --seed 11 --in " + s.path("g.gr") + " --json " + s.path("b.json")) == 0);
  auto a = report(s, "a.json");
  auto b = report(s, "b.json");
  a.erase("timestamp");
  b.erase("timestamp");
  CHECK(a.dump() == b.dump());
}
