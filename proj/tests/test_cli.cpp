#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "codebounds/code_io.hpp"
#include "codebounds/nets.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = codebounds::cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(CODEBOUNDS_DATA_DIR) + "/" + name; }

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("codebounds_cli_" + name);
  fs::remove_all(p);
  return p;
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("bound") {
  auto r = run({"bound", "5", "7", "6", "--method", "plotkin"});
  CHECK(r.code == 0);
  CHECK(r.out == "15\n");
  r = run({"bound", "5", "8", "6", "--method", "plotkin"});
  CHECK(r.out == "inapplicable\n");
  r = run({"bound", "5", "8", "6", "--method", "divisibility"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("70\n", 0) == 0);
  CHECK(contains(r.out, "phi(4) -98"));
  CHECK(contains(r.out, "r 4"));
  r = run({"bound", "4", "11", "8"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("60", 0) == 0);
  r = run({"bound", "5", "9", "6", "--method", "recursion"});
  CHECK(r.out.rfind("350", 0) == 0);
  CHECK(run({"bound", "5", "7"}).code == 2);
  CHECK(run({"bound", "5", "7", "9"}).code == 2);
  CHECK(run({"bound", "5", "7", "6", "--method", "magic"}).code == 2);
}

TEST_CASE("enumerate") {
  const fs::path dir = scratch("enum");
  auto r = run({"enumerate", "3", "3", "2", "8", "--out", dir.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "count 1\n");
  CHECK(fs::exists(dir / "class_0001.code"));
  std::ifstream idx(dir / "index.txt");
  std::stringstream s;
  s << idx.rdbuf();
  const auto list = codebounds::parse_class_list(s.str());
  CHECK(list.classes.size() == 1);
  CHECK(list.size == 8);
  std::ifstream one(dir / "class_0001.code");
  std::stringstream t;
  t << one.rdbuf();
  CHECK(codebounds::parse_code(t.str()) == list.classes[0]);
  fs::remove_all(dir);

  r = run({"enumerate", "4", "11", "8", "60"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "refused"));
  r = run({"enumerate", "3", "5", "2", "12", "--budget", "10"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "partial"));
  CHECK(run({"enumerate", "2", "4", "2", "8", "--threads", "2"}).out == "count 1\n");
}

TEST_CASE("net") {
  auto r = run({"net", "check", data("net_1_2.net")});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "axioms ok"));
  r = run({"net", "check", data("identity4.net")});
  CHECK(r.code == 2);
  CHECK(contains(r.out, "axioms FAIL"));

  const fs::path dir = scratch("net");
  fs::create_directories(dir);
  r = run({"net", "gh-expand", data("gh8_klein4.gh"), "--out", (dir / "fig1.net").string()});
  CHECK(r.code == 0);
  CHECK(run({"net", "check", (dir / "fig1.net").string()}).code == 0);
  r = run({"net", "to-code", (dir / "fig1.net").string(), "--out", (dir / "fig1.code").string()});
  CHECK(r.code == 0);
  r = run({"net", "from-code", (dir / "fig1.code").string()});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("2 4\n", 0) == 0);
  r = run({"net", "to-code", data("latin3.net")});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("3 3 9\n", 0) == 0);
  CHECK(run({"net", "check", (dir / "missing.net").string()}).code == 2);
  CHECK(run({"net", "frobnicate", data("latin3.net")}).code == 2);
  fs::remove_all(dir);
}

TEST_CASE("verify") {
  const fs::path dir = scratch("verify");
  auto r = run({"verify", "a3_16_11", "--json", "--out", dir.string()});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"verdict\": \"verified\""));
  CHECK(fs::exists(dir / "a3_16_11.cert.json"));
  CHECK(fs::exists(dir / "a3_16_11.cert.txt"));
  r = run({"verify", "a3_16_11"});
  CHECK(contains(r.out, "verdict verified"));
  CHECK(contains(r.out, "bound 29"));
  r = run({"verify", "nonsense"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "unknown theorem id"));
  fs::remove_all(dir);
}

TEST_CASE("parse errors are reported with exit code 2") {
  const fs::path dir = scratch("bad");
  fs::create_directories(dir);
  {
    std::ofstream f(dir / "bad.code");
    f << "3 3 2\n0 1 2\n0 1 7\n";
  }
  auto r = run({"net", "from-code", (dir / "bad.code").string()});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "parse error"));
  fs::remove_all(dir);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
