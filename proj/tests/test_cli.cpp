#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

const char* cli_path() {
  const char* p = std::getenv("KLV_CLI");
  REQUIRE_MESSAGE(p != nullptr, "KLV_CLI must point at the klv binary");
  return p;
}

RunResult run(const std::string& args) {
  static int counter = 0;
  fs::path dir = fs::temp_directory_path() / "klv_cli_test";
  fs::create_directories(dir);
  fs::path out = dir / ("out_" + std::to_string(counter) + ".txt");
  fs::path err = dir / ("err_" + std::to_string(counter) + ".txt");
  ++counter;
  std::string cmd = std::string(cli_path()) + " " + args + " > " +
                    out.string() + " 2> " + err.string();
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(status);
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

long long count_lines(const std::string& s) {
  long long n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

long long count_substr(const std::string& s, const std::string& needle) {
  long long n = 0;
  for (std::size_t pos = s.find(needle); pos != std::string::npos;
       pos = s.find(needle, pos + needle.size()))
    ++n;
  return n;
}

}  // namespace

TEST_CASE("orbits") {
  RunResult r = run("orbits --clans 1,1 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(count_lines(r.out) == 4);  // header + 3 orbits
  CHECK(r.out.find("backend,payload,d") == 0);
  CHECK(r.out.find("clan,11,1") != std::string::npos);

  r = run("orbits --diagonal 3 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(count_lines(r.out) == 7);
  CHECK(r.out.find("diagonal,123,0") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("orbits --clans 9,9").exit_code == 2);
  CHECK(run("orbits --clans 2").exit_code == 2);
  CHECK(run("orbits --clans 2,1 --diagonal 3").exit_code == 2);
  CHECK(run("orbits").exit_code == 2);
  CHECK(run("orbits --clans 2,1 --format dot").exit_code == 2);
  CHECK(run("bogus --clans 1,1").exit_code == 2);
  CHECK(run("").exit_code == 2);
  CHECK(run("verify --clans 2,1 --format csv").exit_code == 2);
  CHECK(run("--help").exit_code == 0);
  CHECK(run("--version").exit_code == 0);
}

TEST_CASE("cap override") {
  CHECK(run("orbits --diagonal 7").exit_code == 2);
  RunResult r = run("orbits --diagonal 7 --max-size 7 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(count_lines(r.out) == 5041);  // header + 7!
}

TEST_CASE("closure formats") {
  RunResult dot = run("closure --clans 1,1 --format dot");
  CHECK(dot.exit_code == 0);
  CHECK(count_substr(dot.out, "->") == 2);
  CHECK(dot.out.find("digraph") == 0);

  RunResult json = run("closure --clans 2,1 --format json");
  CHECK(json.exit_code == 0);
  CHECK(count_substr(json.out, "\"payload\"") == 6);
  CHECK(count_substr(json.out, "\"lower\"") == 6);  // six covers

  RunResult diag = run("closure --diagonal 2 --format text");
  CHECK(diag.exit_code == 0);
  CHECK(diag.out.find("12 < 21") != std::string::npos);
}

TEST_CASE("table output") {
  RunResult csv = run("table --clans 1,1 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(count_lines(csv.out) == 6);  // header + 5 comparable pairs
  CHECK(csv.out.find("lower,upper,coeffs\n") == 0);
  CHECK(csv.out.find("+-,11,\"1\"") != std::string::npos);

  RunResult mu = run("table --clans 2,2 --format csv --mu");
  CHECK(mu.exit_code == 0);
  CHECK(mu.out.find("lower,upper,coeffs,mu\n") == 0);
  CHECK(mu.out.find("\"1 1\"") != std::string::npos);  // a 1+q entry

  RunResult txt = run("table --diagonal 3");
  CHECK(txt.exit_code == 0);
  CHECK(count_substr(txt.out, "= 1") == 19);
}

TEST_CASE("verify exits clean and reports") {
  RunResult r = run("verify --clans 2,1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("semicontinuity") != std::string::npos);
  CHECK(r.out.find("all checks passed") != std::string::npos);

  RunResult diag = run("verify --diagonal 4 --format json");
  CHECK(diag.exit_code == 0);
  CHECK(count_substr(diag.out, "\"violations\": []") == 3);
  CHECK(diag.out.find("elapsed_ms") == std::string::npos);

  RunResult timed = run("verify --clans 1,1 --format json --timing");
  CHECK(timed.exit_code == 0);
  CHECK(timed.out.find("elapsed_ms") != std::string::npos);
}

TEST_CASE("file output and determinism") {
  fs::path dir = fs::temp_directory_path() / "klv_cli_test";
  fs::create_directories(dir);
  fs::path f1 = dir / "a.json";
  fs::path f2 = dir / "b.json";

  RunResult r1 = run("table --clans 2,2 --format json --out " + f1.string());
  CHECK(r1.exit_code == 0);
  CHECK(r1.out.find(f1.string()) != std::string::npos);  // summary line
  RunResult r2 = run("table --clans 2,2 --format json --out " + f2.string() +
                     " --quiet");
  CHECK(r2.exit_code == 0);
  CHECK(r2.out.empty());
  CHECK(slurp(f1) == slurp(f2));
  CHECK(!slurp(f1).empty());

  RunResult s1 = run("verify --clans 2,1 --format json");
  RunResult s2 = run("verify --clans 2,1 --format json");
  CHECK(s1.out == s2.out);
}
