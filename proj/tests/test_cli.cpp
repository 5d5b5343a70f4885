#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "dynwg/cli.hpp"
#include "dynwg/json_io.hpp"
#include "dynwg/verify.hpp"

using namespace dynwg;

namespace {

struct Run {
  int code = 0;
  std::string out, err;
  json j() const { return json::parse(out); }
};

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() / ("dynwg-cli-" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  const std::filesystem::path& path() const { return path_; }
  std::string str() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

// Runs in-process against a private cache dir, so nothing touches ~/.cache.
// JSON output unless the caller picks a format.
Run cli(std::vector<std::string> args, const std::string& cache_dir) {
  unsetenv("DYNWG_CACHE");
  args.insert(args.begin(), "dynwg");
  if (args.size() > 1 && args[1] != "--help") {
    args.push_back("--cache-dir");
    args.push_back(cache_dir);
    if (std::find(args.begin(), args.end(), "--format") == args.end()) {
      args.push_back("--format");
      args.push_back("json");
    }
  }
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string matrix_text(const json& block, int r, int c) { return block["matrix"][r][c]["text"].get<std::string>(); }

}  // namespace

TEST_CASE("op") {
  TempDir d;
  Run r = cli({"op", "--algebra", "A1", "--hw", "2", "--mu", "0", "--word", "1"}, d.str());
  REQUIRE(r.code == kExitOk);
  json j = r.j();
  CHECK(j["algebra"] == "A1");
  CHECK(j["target"] == json::array({0}));
  CHECK(matrix_text(j, 0, 0) == "-(x1+2*h)/x1");
  CHECK(RatFun::parse(matrix_text(j, 0, 0)) == ratfun_from_json(j["matrix"][0][0]));

  r = cli({"op", "--algebra", "A2", "--hw", "1,1", "--mu", "0,0", "--word", "1,2,1"}, d.str());
  REQUIRE(r.code == kExitOk);
  j = r.j();
  CHECK(j["matrix"].size() == 2);
  CHECK(j["matrix"][0].size() == 2);
  CHECK(j["basis_labels"]["source"].size() == 2);
  const Run other = cli({"op", "--algebra", "A2", "--hw", "1,1", "--mu", "0,0", "--word", "2,1,2"}, d.str());
  CHECK(other.j()["matrix"] == j["matrix"]);

  r = cli({"op", "--algebra", "A2", "--hw", "1,1", "--mu", "0,0", "--word", ""}, d.str());
  REQUIRE(r.code == kExitOk);
  j = r.j();
  CHECK(matrix_text(j, 0, 0) == "1");
  CHECK(matrix_text(j, 0, 1) == "0");
  CHECK(matrix_text(j, 1, 1) == "1");

  r = cli({"op", "--algebra", "A1", "--hw", "2", "--mu", "0", "--word", "1", "--format", "text"}, d.str());
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("-(x1+2*h)/x1") != std::string::npos);

  const auto file = d.path() / "block.json";
  r = cli({"op", "--algebra", "A1", "--hw", "4", "--mu", "2", "--word", "1", "--output", file.string()}, d.str());
  CHECK(r.code == kExitOk);
  std::ifstream in(file);
  const json written = json::parse(in);
  CHECK(matrix_text(written, 0, 0) == "-(x1+2*h)/(x1-2*h)");
}

TEST_CASE("op errors") {
  TempDir d;
  Run r = cli({"op", "--algebra", "A2", "--hw", "1,1", "--mu", "0,0", "--word", "1,1"}, d.str());
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("not reduced") != std::string::npos);
  r = cli({"op", "--algebra", "A2", "--hw", "1,1", "--mu", "-1,2", "--word", "1"}, d.str());
  CHECK(r.code == kExitUsage);
  r = cli({"op", "--algebra", "A2", "--hw", "1", "--mu", "0,0", "--word", "1"}, d.str());
  CHECK(r.code == kExitUsage);
  r = cli({"op", "--algebra", "Q7", "--hw", "1", "--mu", "0", "--word", "1"}, d.str());
  CHECK(r.code == kExitUsage);
  r = cli({"op", "--algebra", "A1", "--hw", "2"}, d.str());
  CHECK(r.code == kExitUsage);
  r = cli({"frobnicate"}, d.str());
  CHECK(r.code == kExitUsage);
  r = cli({"--help"}, d.str());
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("verify suites") {
  TempDir d;
  Run r = cli({"verify", "satake-rank1", "--lambda-max", "8"}, d.str());
  CHECK(r.code == kExitOk);
  json j = r.j();
  CHECK(j["ok"] == true);
  CHECK(j["total"] == 25);

  r = cli({"verify", "cocycle", "--algebra", "G2", "--hw", "0,1"}, d.str());
  CHECK(r.code == kExitOk);
  CHECK(r.j()["ok"] == true);

  r = cli({"verify", "levi", "--algebra", "B2", "--hw", "0,1"}, d.str());
  CHECK(r.code == kExitOk);

  r = cli({"verify", "rep", "--algebra", "A3", "--dim-cap", "200"}, d.str());
  CHECK(r.code == kExitOk);
  CHECK(r.j()["total"].get<int>() > 40);

  r = cli({"verify", "cocycle", "--algebra", "A2"}, d.str());
  CHECK(r.code == kExitUsage);
  r = cli({"verify", "nonsense"}, d.str());
  CHECK(r.code == kExitUsage);

  r = cli({"verify", "satake-rank1", "--lambda-max", "3", "--format", "text"}, d.str());
  CHECK(r.code == kExitOk);
  CHECK_FALSE(r.out.empty());
}

TEST_CASE("reports are deterministic") {
  TempDir d;
  for (const char* suite : {"satake-rank1", "cocycle", "levi", "rep"}) {
    CAPTURE(suite);
    std::vector<std::string> args{"verify", suite, "--algebra", "B2", "--seed", "17"};
    if (std::string(suite) == "cocycle" || std::string(suite) == "levi") {
      args.push_back("--hw");
      args.push_back("1,1");
    }
    auto one = args, four = args;
    one.insert(one.end(), {"--jobs", "1"});
    four.insert(four.end(), {"--jobs", "4"});
    const Run a = cli(one, d.str());
    const Run b = cli(four, d.str());
    const Run c = cli(four, d.str());
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    CHECK(b.out == c.out);
  }
}

TEST_CASE("cache") {
  TempDir d;
  Run r = cli({"cache", "list"}, d.str());
  CHECK(r.code == kExitOk);
  CHECK(r.j()["entries"].empty());

  r = cli({"cache", "warm", "--algebra", "A2", "--hw", "1,1"}, d.str());
  CHECK(r.code == kExitOk);
  r = cli({"cache", "list"}, d.str());
  CHECK(r.j()["entries"] == json::array({"A2_1-1"}));
  // Warming again changes nothing.
  const auto stamp = std::filesystem::last_write_time(d.path() / "A2_1-1.json");
  r = cli({"cache", "warm", "--algebra", "A2", "--hw", "1,1"}, d.str());
  CHECK(r.code == kExitOk);
  CHECK(cli({"cache", "list"}, d.str()).j()["entries"].size() == 1);
  CHECK(std::filesystem::last_write_time(d.path() / "A2_1-1.json") == stamp);

  r = cli({"cache", "warm", "--algebra", "B2", "--hw", "1,0", "--hw", "0,1"}, d.str());
  CHECK(cli({"cache", "list"}, d.str()).j()["entries"].size() == 3);
  r = cli({"cache", "clear"}, d.str());
  CHECK(r.j()["removed"] == 3);
  CHECK(cli({"cache", "list"}, d.str()).j()["entries"].empty());
  CHECK(cli({"cache", "warm"}, d.str()).code == kExitUsage);
}

TEST_CASE("rep-info") {
  TempDir d;
  Run r = cli({"rep-info", "--algebra", "G2", "--hw", "1,0"}, d.str());
  REQUIRE(r.code == kExitOk);
  json j = r.j();
  CHECK(j["dim"] == 7);
  long total = 0;
  for (const auto& w : j["weights"]) total += w["multiplicity"].get<long>();
  CHECK(total == 7);
  r = cli({"rep-info", "--algebra", "A3", "--hw", "5,5,5", "--dim-cap", "100"}, d.str());
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("error:") == 0);
}

TEST_CASE("installed binary") {
  TempDir d;
  const std::string cmd = std::string(DYNWG_CLI_PATH) + " op --algebra A1 --hw 2 --mu 0 --word 1 --format text --cache-dir " +
                          d.str() + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 256> buf{};
  while (fgets(buf.data(), static_cast<int>(buf.size()), p)) out += buf.data();
  const int status = pclose(p);
  CHECK(WEXITSTATUS(status) == kExitOk);
  CHECK(out.find("-(x1+2*h)/x1") != std::string::npos);

  const std::string bad = std::string(DYNWG_CLI_PATH) + " op --algebra A2 --hw 1,1 --mu 0,0 --word 1,1 --cache-dir " +
                          d.str() + " 2>/dev/null";
  CHECK(WEXITSTATUS(std::system(bad.c_str())) == kExitUsage);
}

TEST_CASE("cache directory from the environment") {
  TempDir env, flag;
  const std::string bin = std::string(DYNWG_CLI_PATH);
  const std::string warm = "DYNWG_CACHE=" + env.str() + " " + bin + " cache warm --algebra A1 --hw 3 >/dev/null";
  CHECK(WEXITSTATUS(std::system(warm.c_str())) == kExitOk);
  CHECK(std::filesystem::exists(env.path() / "A1_3.json"));
  // The variable wins over an explicit flag.
  const std::string both = "DYNWG_CACHE=" + env.str() + " " + bin + " cache warm --algebra A1 --hw 5 --cache-dir " +
                           flag.str() + " >/dev/null";
  CHECK(WEXITSTATUS(std::system(both.c_str())) == kExitOk);
  CHECK(std::filesystem::exists(env.path() / "A1_5.json"));
  CHECK_FALSE(std::filesystem::exists(flag.path() / "A1_5.json"));
}
