// End-to-end tests of the command-line binary: output bytes, JSON schemas,
// file round-trips, and the exit-code contract.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hibi/iojson.hpp"

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

const char* cli_path() {
  const char* p = std::getenv("HIBI_CLI");
  REQUIRE_MESSAGE(p != nullptr, "HIBI_CLI must point at the binary");
  return p;
}

RunResult run(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string(cli_path()) + " " + args +
                    (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string temp_path(const std::string& name) {
  const char* dir = std::getenv("TMPDIR");
  return std::string(dir ? dir : "/tmp") + "/" + name;
}

}  // namespace

TEST_CASE("exit codes follow the contract") {
  CHECK(run("--help").code == 0);
  CHECK(run("definitely-not-a-subcommand", true).code == 64);
  CHECK(run("lattice --bogus-flag", true).code == 64);
  CHECK(run("", true).code == 64);

  // domain errors: exit 1 with a diagnostic on stderr, nothing on stdout
  RunResult comparable = run("straighten --d 2 --n 4 --pair 13,24");
  CHECK(comparable.code == 1);
  CHECK(comparable.out.empty());
  RunResult merged = run("straighten --d 2 --n 4 --pair 13,24", true);
  CHECK(merged.out.find("error:") != std::string::npos);

  CHECK(run("lattice --d 3 --n 9").code == 1);       // over the element cap
  CHECK(run("lattice --d 2").code == 1);             // missing --n
  CHECK(run("valuate --d 2 --n 4 --family spec").code == 1);  // no monomial
  CHECK(run("quasi --d 2 --n 4 --family nope --monomial 23").code == 1);
  CHECK(run("beta --d 2 --n 4 --element 99").code == 1);

  // checks that pass exit 0
  CHECK(run("governed --d 2 --n 4").code == 0);
  CHECK(run("verify --d 2 --n 4").code == 0);
}

TEST_CASE("output bytes are deterministic across runs") {
  for (const std::string& args :
       {std::string("lattice --d 2 --n 5"),
        std::string("straighten --d 2 --n 5 --pair 25,34"),
        std::string("quasi --d 2 --n 5 --family maxspec --monomial 25"),
        std::string("triangulate --d 2 --n 4")}) {
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.code == 0);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
  }

  // worker count must not change the bytes either
  RunResult j1 = run("quasi --d 2 --n 5 --family spec --monomial 23 --jobs 1");
  RunResult j4 = run("quasi --d 2 --n 5 --family spec --monomial 23 --jobs 4");
  CHECK(j1.out == j4.out);
}

TEST_CASE("straightening golden bytes") {
  RunResult r = run("straighten --d 2 --n 4 --pair 14,23");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "{\n"
        "  \"pair\": [\n"
        "    \"14\",\n"
        "    \"23\"\n"
        "  ],\n"
        "  \"terms\": [\n"
        "    {\n"
        "      \"k1\": \"24\",\n"
        "      \"k2\": \"13\",\n"
        "      \"coeff\": \"1/1\"\n"
        "    },\n"
        "    {\n"
        "      \"k1\": \"34\",\n"
        "      \"k2\": \"12\",\n"
        "      \"coeff\": \"-1/1\"\n"
        "    }\n"
        "  ]\n"
        "}\n");
}

TEST_CASE("JSON schemas carry the frozen values") {
  using hibi::Json;

  Json chains = Json::parse(run("chains --d 2 --n 4").out);
  CHECK(chains["count"] == 2);
  REQUIRE(chains["chains"].size() == 2);
  CHECK(chains["chains"][0] ==
        Json::array({"12", "13", "14", "24", "34"}));
  CHECK(chains["chains"][1] ==
        Json::array({"12", "13", "23", "24", "34"}));

  Json beta = Json::parse(run("beta --d 4 --n 7 --element 2457").out);
  CHECK(beta["element"] == "2457");
  CHECK(beta["cells"] == Json::parse("[[1,6],[3,4]]"));

  Json quasi = Json::parse(
      run("quasi --d 2 --n 4 --family spec --monomial 23").out);
  CHECK(quasi["family"] == "spec");
  CHECK(quasi["value"] == Json::parse("[1,1,0,0]"));
  REQUIRE(quasi["argminChains"].size() == 1);
  CHECK(quasi["argminChains"][0] ==
        Json::array({"12", "13", "23", "24", "34"}));

  Json fflv = Json::parse(run("fflv --d 2 --n 4 --dilation 1").out);
  CHECK(fflv["latticePoints"].size() == 6);
  CHECK(fflv["ambientDim"] == 4);
  CHECK(fflv["vrep"].size() == 6);

  Json basis = Json::parse(run("hibi-ideal --d 2 --n 4 --degree 2").out);
  REQUIRE(basis.is_array());
  CHECK(basis.size() == 20);
  CHECK(basis[0] == Json::array({"12", "12"}));

  Json verify = Json::parse(run("verify --d 2 --n 5").out);
  CHECK(verify["status"] == "pass");
  for (const auto& chk : verify["checks"]) CHECK(chk["status"] == "pass");
}

TEST_CASE("poset files feed the same pipeline") {
  std::string path = temp_path("hibi_test_poset.json");
  {
    std::ofstream f(path);
    f << "{\"elements\": [\"p\", \"q\"], \"covers\": []}";
  }
  using hibi::Json;
  Json lat = Json::parse(run("lattice --poset " + path).out);
  CHECK(lat["elements"].size() == 4);
  Json ch = Json::parse(run("chains --poset " + path).out);
  CHECK(ch["count"] == 2);

  // label-form and index-form covers must agree
  std::string path2 = temp_path("hibi_test_poset2.json");
  {
    std::ofstream f(path2);
    f << "{\"elements\": [\"a\", \"b\"], \"covers\": [[\"a\", \"b\"]]}";
  }
  std::string path3 = temp_path("hibi_test_poset3.json");
  {
    std::ofstream f(path3);
    f << "{\"elements\": [\"a\", \"b\"], \"covers\": [[0, 1]]}";
  }
  CHECK(run("lattice --poset " + path2).out ==
        run("lattice --poset " + path3).out);

  CHECK(run("lattice --poset /nonexistent/poset.json").code == 1);
  std::remove(path.c_str());
  std::remove(path2.c_str());
  std::remove(path3.c_str());
}

TEST_CASE("--out writes exactly the stdout bytes") {
  std::string path = temp_path("hibi_test_out.json");
  RunResult direct = run("no-body --d 2 --n 4 --chain 12-13-14-24-34");
  CHECK(direct.code == 0);
  RunResult filed =
      run("no-body --d 2 --n 4 --chain 12-13-14-24-34 --out " + path);
  CHECK(filed.code == 0);
  CHECK(filed.out.empty());
  CHECK(slurp(path) == direct.out);
  std::remove(path.c_str());

  CHECK(run("no-body --d 2 --n 4 --chain 12-13-14-24-34 --out "
            "/nonexistent/dir/x.json")
            .code == 1);
}
