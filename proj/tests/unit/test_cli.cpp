#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run run(const std::string& args, const std::string& env = "") {
  const std::string err_path = "cli_stderr.txt";
  const std::string cmd = env + " " STURMLAB_BIN " " + args + " 2>" + err_path;
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err_path);
  return r;
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream(path, std::ios::binary) << body;
}

}  // namespace

TEST_CASE("generate") {
  auto r = run("generate --phi 3,-1,1,5 --n 20");
  CHECK(r.code == 0);
  CHECK(r.out == "01000100010001000100\n");
  r = run("generate --phi 3,-1,1,5 --n 0");
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  r = run("generate --phi 1,0,3,1 --n 5");
  CHECK(r.code == 3);
  CHECK(r.err.find("phi must be irrational") != std::string::npos);
}

TEST_CASE("forbidden set, zero-run bound and verification") {
  auto r = run("forbidden --phi 3,-1,1,5 --k-max 10 --summary cli_summary.json");
  CHECK(r.code == 0);
  CHECK(r.out == "k\n1\n2\n3\n6\n7\n10\n");
  const auto s = nlohmann::json::parse(slurp("cli_summary.json"));
  CHECK(s["m"] == 5);
  r = run("forbidden --phi 3,-1,1,5 --k-max 1 --format json");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["records"] == nlohmann::json::array({1}));
  r = run("forbidden --phi 3,-1,1,5 --k-max 40 --verify --word-n 20000 --summary cli_summary.json");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(slurp("cli_summary.json"))["verification"]["violation_count"] == 0);
  // A bound that is too small for the zero runs of the word is caught.
  r = run("forbidden --phi 3,-1,1,5 --k-max 10 --m 4 --verify --word-n 2000");
  CHECK(r.code == 4);
}

TEST_CASE("continued fraction dump") {
  const auto r = run("cf --phi 1,1,2,5 --depth 4");
  CHECK(r.code == 0);
  CHECK(r.out == "i,a,p,q\n0,1,1,1\n1,1,2,1\n2,1,3,2\n3,1,5,3\n4,1,8,5\n");
}

TEST_CASE("config file with flag overrides") {
  write_file("cli_config.json",
             R"({"phi": [3, -1, 1, 5], "ranges": {"k_max": 7}, "output": {"format": "csv"}})");
  auto r = run("forbidden --config cli_config.json");
  CHECK(r.code == 0);
  CHECK(r.out == "k\n1\n2\n3\n6\n7\n");
  r = run("forbidden --config cli_config.json --k-max 3");
  CHECK(r.out == "k\n1\n2\n3\n");
  write_file("cli_bad.json", R"({"phi": [3, -1, 1, 5], "bogus": 1})");
  CHECK(run("forbidden --config cli_bad.json --k-max 3").code == 2);
  write_file("cli_broken.json", "{not json");
  CHECK(run("forbidden --config cli_broken.json").code == 2);
  CHECK(run("forbidden --phi 3,-1,1,5").code == 2);  // k_max missing
  CHECK(run("nonsense").code == 2);
}

TEST_CASE("hypotheses fail fast with exit code 3") {
  auto r = run("stability-periodic --phi 0,1,2,5 --alpha 1.4 --k-range 2,5");  // sqrt(5)/2 > 1
  CHECK(r.code == 3);
  r = run("stability-periodic --phi -1,1,2,5 --alpha 1.4 --k-range 2,5");  // golden, below 3/4
  CHECK(r.code == 3);
  CHECK(r.err.find("(3/4, 1)") != std::string::npos);
  r = run("density --phi 3,-1,1,5 --alpha 1.0 --word 01");
  CHECK(r.code == 3);
  CHECK(r.err.find("alpha") != std::string::npos);
  r = run("ergodicity --phi -1,1,2,5 --k-range 1,5 --d 3");  // arc [1 - phi, phi] shorter than 1/2
  CHECK(r.code == 3);
  CHECK(r.err.find("1/2") != std::string::npos);
}

TEST_CASE("density of a Sturmian window is zero and of a periodic word is positive") {
  auto r = run("density --phi 3,-1,1,5 --alpha 2 --m-max 200 --summary cli_summary.json");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(slurp("cli_summary.json"))["value"] == 0.0);
  r = run("density --phi 3,-1,1,5 --alpha 2 --word 0 --mode exact --summary cli_summary.json");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(slurp("cli_summary.json"))["value"] == doctest::Approx(1.0));
}

TEST_CASE("scans are byte-identical across thread counts") {
  const char* scans[] = {
      "ergodicity --phi 3,-1,1,5 --k-range 1,300 --d 5",
      "stability-periodic --phi 3,-1,1,5 --alpha 1.4 --lambda 0.001 --k-range 2,40",
      "stability-family --phi 3,-1,1,5 --alpha 1.8 --lambda 0.001 --n-range 2,60 --horizon 4096",
  };
  for (const char* s : scans) {
    const auto a = run(std::string(s) + " --threads 1 --summary cli_s1.json");
    const auto b = run(std::string(s) + " --threads 3 --summary cli_s3.json");
    const auto e = run(std::string(s) + " --summary cli_se.json", "STURMLAB_THREADS=2");
    CHECK(a.code == 0);
    CHECK(a.out.size() > 100);
    CHECK(a.out == b.out);
    CHECK(a.out == e.out);
    CHECK(slurp("cli_s1.json") == slurp("cli_s3.json"));
  }
}

TEST_CASE("csv reals round-trip") {
  const auto r = run("stability-periodic --phi 3,-1,1,5 --alpha 1.4 --lambda 0.001 --k-range 2,6");
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "kind,parameter,base_density,perturbation_gain,margin,pass,tail_bound,min_density");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    std::istringstream cells(line);
    std::string kind, k, base, gain, margin;
    std::getline(cells, kind, ',');
    std::getline(cells, k, ',');
    std::getline(cells, base, ',');
    std::getline(cells, gain, ',');
    std::getline(cells, margin, ',');
    CHECK(kind == "periodic");
    const double b = std::strtod(base.c_str(), nullptr), g = std::strtod(gain.c_str(), nullptr);
    CHECK(std::strtod(margin.c_str(), nullptr) == b - g);
  }
  CHECK(rows == 5);
}
