#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pentagon/fixtures.hpp"
#include "pentagon/io.hpp"

namespace fs = std::filesystem;

namespace {

const std::string cli = PENTAGON_CLI_PATH;
const fs::path data_dir = PENTAGON_DATA_DIR;

struct run_result {
  int code;
  std::string out;
};

// runs the CLI with stdout captured, stderr passed through
run_result run(const std::string& args) {
  fs::path tmp = fs::temp_directory_path() /
                 ("pentagon_cli_" + std::to_string(::getpid()) + ".out");
  std::string cmd = cli + " " + args + " > " + tmp.string();
  int status = std::system(cmd.c_str());
  std::ifstream in(tmp);
  std::stringstream buf;
  buf << in.rdbuf();
  fs::remove(tmp);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, buf.str()};
}

std::string fixture(const std::string& name) {
  return (data_dir / "fixtures" / name).string();
}
std::string solution_file(const std::string& name) {
  return (data_dir / "solutions" / name).string();
}

}  // namespace

TEST_CASE("validate") {
  CHECK(run("validate " + fixture("s3.json")).code == 0);
  CHECK(run("validate " + fixture("s3.json") + " --clifford").code == 0);
  CHECK(run("validate " + (data_dir / "bad" / "broken.json").string()).code ==
        1);
  CHECK(run("validate " + (data_dir / "bad" / "brandt_b2.json").string() +
            " --clifford")
            .code == 2);
  CHECK(run("validate " + (data_dir / "bad" / "brandt_b2.json").string())
            .code == 0);
  CHECK(run("validate does_not_exist.json").code == 1);
}

TEST_CASE("analyze") {
  auto r = run("analyze " + fixture("s3.json"));
  CHECK(r.code == 0);
  CHECK(r.out.find("component G_1 = {1}") != std::string::npos);
  CHECK(r.out.find("component G_a = {a b}") != std::string::npos);
  CHECK(run("analyze " + (data_dir / "bad" / "brandt_b2.json").string()).code ==
        2);
}

TEST_CASE("check classifies the named example solutions") {
  auto ex32 = run("check " + solution_file("ex32.json"));
  CHECK(ex32.code == 0);
  CHECK(ex32.out.find("E-invariant: yes") != std::string::npos);
  CHECK(ex32.out.find("E-fixed: no") != std::string::npos);

  auto ex52 = run("check " + solution_file("ex52.json"));
  CHECK(ex52.code == 0);
  CHECK(ex52.out.find("E-invariant: no") != std::string::npos);
  CHECK(ex52.out.find("E-fixed: no") != std::string::npos);

  auto js = run("--json check " + solution_file("ex52.json"));
  CHECK(js.code == 0);
  auto parsed = nlohmann::json::parse(js.out);
  CHECK(parsed["valid"] == true);
  CHECK(parsed["flags"]["e_invariant"] == false);
  CHECK(parsed["kernel"] == nlohmann::json({0, 1, 2}));
  CHECK(parsed["identities"]["all_passed"] == true);
}

TEST_CASE("check rejects a non-solution with exit 2") {
  fs::path bad = fs::temp_directory_path() / "pentagon_bad_theta.json";
  {
    std::ofstream out(bad);
    out << R"({"semigroup": ")" +
               (data_dir / "fixtures" / "s3.json").string() +
               R"(", "theta": [[2,2,2],[2,2,2],[2,2,2]]})";
  }
  CHECK(run("check " + bad.string()).code == 2);
  // malformed theta shape is an input error, not a failed check
  {
    std::ofstream out(bad);
    out << R"({"semigroup": ")" +
               (data_dir / "fixtures" / "s3.json").string() +
               R"(", "theta": [[0,1],[0,1]]})";
  }
  CHECK(run("check " + bad.string()).code == 1);
  fs::remove(bad);
}

TEST_CASE("kernel") {
  auto r = run("kernel " + solution_file("ex52.json"));
  CHECK(r.code == 0);
  CHECK(r.out.find("{1 a b}") != std::string::npos);
  CHECK(r.out.find("normal subsemigroup") != std::string::npos);
}

TEST_CASE("quiet mode suppresses output but keeps the status") {
  auto r = run("--quiet check " + solution_file("ex32.json"));
  CHECK(r.code == 0);
  CHECK(r.out.empty());
}

TEST_CASE("enumerate writes solutions that check accepts") {
  fs::path dir = fs::temp_directory_path() / "pentagon_enum_out";
  fs::remove_all(dir);
  auto r = run("enumerate " + fixture("s3.json") + " --out " + dir.string());
  CHECK(r.code == 0);
  CHECK(r.out.find("9 solution(s)") != std::string::npos);
  int n_files = 0;
  for (const auto& f : fs::directory_iterator(dir)) {
    ++n_files;
    CHECK(run("check " + f.path().string()).code == 0);
  }
  CHECK(n_files == 9);
  fs::remove_all(dir);
}

TEST_CASE("enumerate respects filters and --up-to-iso") {
  auto inv = run("enumerate " + fixture("s3.json") + " --filter e-invariant");
  CHECK(inv.out.find("3 solution(s)") != std::string::npos);
  auto iso = run("enumerate " + fixture("z4.json") + " --up-to-iso");
  CHECK(iso.out.find("3 solution(s)") != std::string::npos);
  CHECK(run("enumerate " + fixture("s3.json") + " --filter bogus").code == 1);
}

TEST_CASE("census collects per-file errors without aborting the batch") {
  // the bad directory holds a non-associative table and the (valid,
  // non-Clifford) Brandt semigroup
  auto r = run("census " + (data_dir / "bad").string() + " 2> /dev/null");
  CHECK(r.code == 0);
  CHECK(r.out.find("brandt_b2,5,3,10,7,0,1,0,0,,,") != std::string::npos);
  CHECK(r.out.find("broken") == std::string::npos);
}

TEST_CASE("census output is deterministic and thread-independent") {
  auto a = run("census " + (data_dir / "fixtures").string());
  auto b = run("census " + (data_dir / "fixtures").string());
  auto c = run("--threads 4 census " + (data_dir / "fixtures").string());
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(a.out.find("s3,3,2,9,9,5,1,0,2,3,2,4") != std::string::npos);
  CHECK(a.out.find("z4_over_z2,6,2,19,14,5,1,0,2,5,8,6") != std::string::npos);

  auto js = run("census " + (data_dir / "fixtures").string() +
                " --format json");
  CHECK(js.code == 0);
  auto parsed = nlohmann::json::parse(js.out);
  CHECK(parsed.size() == 8);

  // worker count can also come from the environment
  fs::path tmp = fs::temp_directory_path() / "pentagon_env.out";
  std::string cmd = "PENTAGON_THREADS=3 " + cli + " census " +
                    (data_dir / "fixtures").string() + " > " + tmp.string();
  REQUIRE(std::system(cmd.c_str()) == 0);
  std::ifstream in(tmp);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == a.out);
  fs::remove(tmp);
}

TEST_CASE("construct subcommands") {
  fs::path tmp = fs::temp_directory_path() / "pentagon_construct";
  fs::create_directories(tmp);

  // invariant: the s3 congruence/mu data reproducing the gamma solution
  pentagon::io::write_text(tmp / "rho.json", R"({"classes": [0, 0, 1]})");
  pentagon::io::write_text(tmp / "mu.json", R"({"map": [1, 1, 2]})");
  auto inv = run("construct invariant " + fixture("s3.json") +
                 " --congruence " + (tmp / "rho.json").string() + " --mu " +
                 (tmp / "mu.json").string() + " --out " +
                 (tmp / "inv.json").string());
  CHECK(inv.code == 0);
  auto loaded = pentagon::io::load_solution_file(tmp / "inv.json");
  CHECK(pentagon::solution(loaded.semigroup, loaded.theta) ==
        pentagon::fixtures::s3_gamma_solution());

  // a mu violating the representative law exits 2
  pentagon::io::write_text(tmp / "bad_mu.json", R"({"map": [0, 0, 2]})");
  CHECK(run("construct invariant " + fixture("s3.json") + " --congruence " +
            (tmp / "rho.json").string() + " --mu " +
            (tmp / "bad_mu.json").string())
            .code == 2);

  // fixed: the componentwise identity family on s3 gives I
  pentagon::io::write_text(tmp / "family.json", R"({
    "semilattice_spec": {
      "meets": [[0, 1], [1, 1]],
      "groups": [{"table": [[0]]}, {"table": [[0, 1], [1, 0]]}],
      "homs": [{"from": 0, "to": 1, "map": [0]}]
    },
    "group_solutions": [
      {"e": 0, "theta": [[0]]},
      {"e": 1, "theta": [[0, 1], [0, 1]]}
    ],
    "connectors": [{"from": 1, "to": 0, "map": [0, 0]}]
  })");
  auto fixed = run("construct fixed --family " + (tmp / "family.json").string() +
                   " --out " + (tmp / "fixed.json").string());
  CHECK(fixed.code == 0);
  auto fixed_loaded = pentagon::io::load_solution_file(tmp / "fixed.json");
  CHECK(pentagon::solution(fixed_loaded.semigroup, fixed_loaded.theta) ==
        pentagon::canonical_i(pentagon::fixtures::s3()));

  // fixed-epi wants onto homs: glue Z4 over Z2 along reduction mod 2
  pentagon::io::write_text(tmp / "epi.json", R"({
    "semilattice_spec": {
      "meets": [[0, 1], [1, 1]],
      "groups": [
        {"table": [[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]]},
        {"table": [[0,1],[1,0]]}
      ],
      "homs": [{"from": 0, "to": 1, "map": [0, 1, 0, 1]}]
    },
    "group_solutions": [
      {"e": 0, "theta": [[0,1,0,1],[0,3,0,3],[0,1,0,1],[0,3,0,3]]},
      {"e": 1, "theta": [[0, 1], [0, 1]]}
    ]
  })");
  CHECK(run("construct fixed-epi --spec " + (tmp / "epi.json").string()).code ==
        0);
  // as a family file the same data lacks its upward connectors
  CHECK(run("construct fixed --family " + (tmp / "epi.json").string()).code ==
        1);
  fs::remove_all(tmp);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run("").code == 1);
  CHECK(run("frobnicate x.json").code == 1);
  CHECK(run("construct").code == 1);
}
