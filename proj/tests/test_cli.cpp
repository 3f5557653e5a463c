#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

std::string tool() { return SEMIEQ_TOOL_PATH; }

int run(const std::string& args) {
  std::string cmd = tool() + " " + args + " >/dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("semieq_cli_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("catalog writes a deterministic corpus") {
  TempDir tmp;
  fs::path dir1 = tmp.path / "cat1", dir2 = tmp.path / "cat2";
  CHECK(run("catalog --out " + dir1.string()) == 0);
  CHECK(run("catalog --out " + dir2.string()) == 0);
  int sg_files = 0;
  for (const auto& e : fs::directory_iterator(dir1))
    if (e.path().extension() == ".sg") ++sg_files;
  CHECK(sg_files >= 30);  // 1 + 5 + 24 enumerated plus constructions
  for (const auto& e : fs::directory_iterator(dir1)) {
    if (e.path().extension() != ".sg") continue;
    CHECK(slurp(e.path()) == slurp(dir2 / e.path().filename()));
  }
  CHECK(fs::exists(dir1 / "catalog_manifest.json"));
}

TEST_CASE("solve reports are byte-identical across reruns") {
  TempDir tmp;
  fs::path cat = tmp.path / "cat";
  REQUIRE(run("catalog --out " + cat.string()) == 0);
  fs::path out1 = tmp.path / "r1", out2 = tmp.path / "r2";
  std::string base = "solve --equation kannappan-sine --semigroup " +
                     (cat / "c2.sg").string() + " --z0 a --out ";
  CHECK(run(base + out1.string()) == 0);
  CHECK(run(base + out2.string()) == 0);
  std::string r1 = slurp(out1 / "solve_report.txt");
  CHECK(r1 == slurp(out2 / "solve_report.txt"));
  CHECK(r1.find("RESULT: PASS") != std::string::npos);
  CHECK(r1.find("# run manifest") != std::string::npos);
}

TEST_CASE("exit codes follow the pass/violation/usage contract") {
  TempDir tmp;
  fs::path cat = tmp.path / "cat";
  REQUIRE(run("catalog --out " + cat.string()) == 0);
  std::string c2 = (cat / "c2.sg").string();

  // 0: a passing verify (the half pair solves the equation at z0 = a)
  CHECK(run("verify --semigroup " + c2 +
            " --z0 a --f 1/2,1/2 --g 1/2,1/2") == 0);
  // 1: a non-solution
  CHECK(run("verify --semigroup " + c2 + " --z0 a --f 1,0 --g 1,0") == 1);
  // 2: missing required --z0
  CHECK(run("verify --semigroup " + c2 + " --f 1,0 --g 1,0") == 2);
  // 2: unknown element label
  CHECK(run("verify --semigroup " + c2 +
            " --z0 zebra --f 1,0 --g 1,0") == 2);
  // 2: unreadable semigroup file
  CHECK(run("solve --equation additive --semigroup /nonexistent.sg --z0 a") ==
        2);
  // 2: malformed values
  CHECK(run("verify --semigroup " + c2 + " --z0 a --f wat --g 1,0") == 2);
  // 2: catalog target collides with an existing file
  fs::path blocker = tmp.path / "blocked";
  std::ofstream(blocker) << "not a directory";
  CHECK(run("catalog --out " + (blocker / "sub").string()) == 2);
  // 0: help
  CHECK(run("--help") == 0);
}

TEST_CASE("hunt exits 0 and honors the seed flag") {
  TempDir tmp;
  fs::path cat = tmp.path / "cat";
  REQUIRE(run("catalog --out " + cat.string()) == 0);
  std::string n3 = (cat / "n3.sg").string();
  fs::path out1 = tmp.path / "h1", out2 = tmp.path / "h2";
  std::string base = "hunt --semigroup " + n3 +
                     " --z0 x --trials 60 --seed 5 --format csv --out ";
  CHECK(run(base + out1.string()) == 0);
  CHECK(run(base + out2.string()) == 0);
  CHECK(slurp(out1 / "hunt.csv") == slurp(out2 / "hunt.csv"));
  CHECK(slurp(out1 / "hunt_report.txt")
            .find("unclassified: none") != std::string::npos);
}

TEST_CASE("numeric verify accepts complex values") {
  TempDir tmp;
  fs::path cat = tmp.path / "cat";
  REQUIRE(run("catalog --out " + cat.string()) == 0);
  std::string c2 = (cat / "c2.sg").string();
  CHECK(run("verify --numeric --semigroup " + c2 +
            " --z0 a --f 0.5,0.5 --g 0.5,0.5") == 0);
  CHECK(run("verify --numeric --semigroup " + c2 +
            " --z0 a --f 1+2i,0 --g i,0") == 1);
}

TEST_CASE("characters and sine-subtraction solve succeed on files") {
  TempDir tmp;
  fs::path cat = tmp.path / "cat";
  REQUIRE(run("catalog --out " + cat.string()) == 0);
  CHECK(run("characters --semigroup " + (cat / "c2xn3.sg").string()) == 0);
  CHECK(run("solve --equation sine-subtraction --semigroup " +
            (cat / "n3.sg").string() + " --z0 x") == 0);
  CHECK(run("solve --equation mult-kannappan --semigroup " +
            (cat / "c4.sg").string() + " --z0 a") == 0);
}
