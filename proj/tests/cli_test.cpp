#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>

#include <json.hpp>

using nlohmann::json;

namespace {

std::string env_or_fail(const char* name) {
  const char* v = std::getenv(name);
  REQUIRE_MESSAGE(v != nullptr, name << " must be set (ctest sets it)");
  return v;
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the CLI with the given arguments; stderr is discarded.
RunResult run_cli(const std::string& args) {
  const std::string cmd = "'" + env_or_fail("MOTIFCLUST_CLI") + "' " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  const int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_path(const std::string& name) {
  return "/tmp/motifclust_cli_" + std::to_string(getpid()) + "_" + name;
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = temp_path(name);
  std::ofstream f(path);
  f << content;
  REQUIRE(f.good());
  return path;
}

std::string triangle_file() { return write_temp("tri.edges", "1 2\n2 3\n1 3\n"); }

std::string karate() { return env_or_fail("MOTIFCLUST_DATA") + "/karate.edges"; }

bool is_hex16(const std::string& s) {
  if (s.size() != 16) return false;
  for (char c : s)
    if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'))) return false;
  return true;
}

}  // namespace

TEST_CASE("exit codes map error classes") {
  const std::string bad_edges = write_temp("bad.edges", "1 2 3\n");
  CHECK(run_cli("triangles '" + bad_edges + "'").exit_code == 2);

  CHECK(run_cli("mmcc /no/such/file.edges").exit_code == 2);

  const std::string bad_cfg = write_temp("bad.cfg", "wibble = 1\n");
  CHECK(run_cli("mmcc '" + triangle_file() + "' --one-based --config '" + bad_cfg + "'")
            .exit_code == 3);

  CHECK(run_cli("bounds").exit_code == 3);

  std::ostringstream p13;
  for (int v = 0; v < 12; ++v) p13 << v << ' ' << v + 1 << '\n';
  const std::string path13 = write_temp("p13.edges", p13.str());
  CHECK(run_cli("exact '" + path13 + "' --what mmcc").exit_code == 4);

  CHECK(run_cli("anneal '" + triangle_file() + "' --one-based -M 65").exit_code == 4);

  // nonedges pulling toward 1 force real simplex work; one iteration is not enough
  const std::string two_tri =
      write_temp("twotri.edges", "0 1\n0 2\n1 2\n3 4\n3 5\n4 5\n");
  CHECK(run_cli("mmcc '" + two_tri + "' --nonedge-dissim 0.1 --route embedded "
                "--lp-max-iters 1")
            .exit_code == 5);

  CHECK(run_cli("triangles '" + triangle_file() + "' --no-such-flag").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("mmcc --help").exit_code == 0);
}

TEST_CASE("reports follow the published schema") {
  const std::string schema_path = env_or_fail("MOTIFCLUST_SCHEMA") + "/run_report.schema.json";
  std::ifstream sf(schema_path);
  REQUIRE(sf.good());
  const json schema = json::parse(sf);

  const RunResult run =
      run_cli("mmcc '" + triangle_file() + "' --one-based --route embedded --json --timing");
  REQUIRE(run.exit_code == 0);
  const json rep = json::parse(run.out);

  for (const auto& key : schema["required"]) CHECK(rep.contains(key.get<std::string>()));

  // additionalProperties: false
  for (const auto& [key, val] : rep.items()) {
    (void)val;
    CHECK(schema["properties"].contains(key));
  }

  bool command_known = false;
  for (const auto& c : schema["properties"]["command"]["enum"])
    command_known |= c == rep["command"];
  CHECK(command_known);

  CHECK(rep["seed"].is_number_integer());
  CHECK(rep["parameters"].is_object());
  CHECK(rep["results"].is_object());
  REQUIRE(rep.contains("input"));
  for (const auto& key : schema["properties"]["input"]["required"])
    CHECK(rep["input"].contains(key.get<std::string>()));
  CHECK(is_hex16(rep["input"]["digest"].get<std::string>()));
  CHECK(rep["input"]["n"] == 3);
  CHECK(rep["input"]["m"] == 3);
  CHECK(rep["timing"]["wall_ms"].is_number());
}

TEST_CASE("fixed seeds give byte-identical reports") {
  const std::string anneal_cmd = "anneal '" + karate() +
                                 "' --one-based -M 2 --rounds 400 --restarts 2 --seed 9 --json";
  const RunResult a = run_cli(anneal_cmd);
  const RunResult b = run_cli(anneal_cmd);
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"normalized_score\"") != std::string::npos);

  const std::string mmcc_cmd = "mmcc '" + triangle_file() +
                               "' --one-based --nonedge-dissim 0.2 --route embedded "
                               "--pivot-rule random --seed 4 --json";
  const RunResult c = run_cli(mmcc_cmd);
  const RunResult d = run_cli(mmcc_cmd);
  REQUIRE(c.exit_code == 0);
  CHECK(c.out == d.out);
}

TEST_CASE("original vertex labels appear in reports") {
  const RunResult tri = run_cli("triangles '" + triangle_file() + "' --one-based --list --json");
  REQUIRE(tri.exit_code == 0);
  const json trep = json::parse(tri.out);
  CHECK(trep["results"]["count"] == 1);
  CHECK(trep["results"]["triangles"][0] == json({1, 2, 3}));

  const RunResult mm =
      run_cli("mmcc '" + triangle_file() + "' --one-based --route embedded --json");
  REQUIRE(mm.exit_code == 0);
  const json mrep = json::parse(mm.out);
  CHECK(mrep["results"]["partition"].contains("1"));
  CHECK(mrep["results"]["partition"].contains("3"));
  CHECK_FALSE(mrep["results"]["partition"].contains("0"));
  CHECK(mrep["results"]["clusters"] == json::array({{1, 2, 3}}));
  CHECK(mrep["results"]["num_clusters"] == 1);
}

TEST_CASE("eval scores the reference karate split") {
  const std::string gt = env_or_fail("MOTIFCLUST_DATA") + "/ground_truth_karate.json";
  const RunResult r = run_cli("eval '" + karate() + "' --one-based --partition '" + gt +
                              "' --nonedge-dissim-coeff 0.2 --json");
  REQUIRE(r.exit_code == 0);
  const json rep = json::parse(r.out);
  CHECK(rep["results"]["num_clusters"] == 2);
  CHECK(rep["results"]["mmcc_cost"].is_number());
  CHECK(rep["results"]["mmcc_cost"].get<double>() > 0.0);

  // rejects a request that names both evaluation modes
  CHECK(run_cli("eval '" + karate() + "' --one-based --partition '" + gt +
                "' --assignment '" + gt + "'")
            .exit_code == 3);
}

TEST_CASE("eval scores a hand-written assignment") {
  const std::string af = write_temp(
      "assign.json", R"({"assignment": {"1": [0], "2": [0], "3": [0]}})");
  const RunResult r =
      run_cli("eval '" + triangle_file() + "' --one-based --assignment '" + af + "' --json");
  REQUIRE(r.exit_code == 0);
  const json rep = json::parse(r.out);
  CHECK(rep["results"]["normalized_score"] == 1.0);

  const std::string holey = write_temp("holey.json", R"({"assignment": {"1": [0]}})");
  CHECK(run_cli("eval '" + triangle_file() + "' --one-based --assignment '" + holey + "'")
            .exit_code == 2);
}

TEST_CASE("output file holds the same report as stdout") {
  const std::string out = temp_path("report.json");
  const RunResult r = run_cli("bounds --n 9 -o '" + out + "'");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("etcc_bound") != std::string::npos);  // human TSV on stdout

  std::ifstream f(out);
  REQUIRE(f.good());
  const json rep = json::parse(f);
  CHECK(rep["command"] == "bounds");
  CHECK(rep["results"]["ecc_bound"] == 20);
  CHECK(rep["results"]["etcc_bound"] == 27);
  CHECK(rep["results"]["etcc_in_stated_range"] == true);
}

TEST_CASE("bounds warns but answers below the stated range") {
  const RunResult r = run_cli("bounds --n 6 --json");
  REQUIRE(r.exit_code == 0);
  const json rep = json::parse(r.out);
  CHECK(rep["results"]["etcc_in_stated_range"] == false);
  CHECK(rep["results"]["etcc_bound"] == 8);
}

TEST_CASE("randcover demonstrates coverage on a complete graph") {
  std::ostringstream k6;
  for (int v = 1; v < 6; ++v)
    for (int u = 0; u < v; ++u) k6 << u << ' ' << v << '\n';
  const std::string path = write_temp("k6.edges", k6.str());
  const RunResult r = run_cli("randcover '" + path + "' -d 1 --seed 3 --json");
  REQUIRE(r.exit_code == 0);
  const json rep = json::parse(r.out);
  CHECK(rep["results"]["covered_all"] == true);
  CHECK(rep["results"]["degree_ok"] == true);
  CHECK(rep["results"]["num_cliques"].get<int64_t>() <= rep["results"]["bound"].get<int64_t>());
}

TEST_CASE("exact assignment search through the CLI") {
  const RunResult r =
      run_cli("exact '" + triangle_file() + "' --one-based --what assign -M 1 --json");
  REQUIRE(r.exit_code == 0);
  const json rep = json::parse(r.out);
  CHECK(rep["results"]["normalized_score"] == 1.0);
  CHECK(rep["results"]["communities"] == json::array({{1, 2, 3}}));
}
