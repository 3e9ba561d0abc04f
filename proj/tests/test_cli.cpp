#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>
#include <string>

#include "apsbench/graph_io.hpp"
#include "apsbench/report.hpp"

using namespace apsbench;

namespace {

std::string binary() {
  const char* env = std::getenv("APSBENCH_BIN");
  REQUIRE(env != nullptr);
  return env;
}

int run(const std::string& args) {
  std::string cmd = binary() + " " + args + " 2>/dev/null";
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) { return read_text_file(path); }

}  // namespace

TEST_CASE("construct writes a parseable instance with the right order") {
  REQUIRE(run("construct --k 4 --p 2 --out cli_g42.json") == 0);
  auto inst = hy_instance_from_json(slurp("cli_g42.json"));
  CHECK(inst.graph.order() == 22);
  CHECK(inst.graph.is_regular(4));

  REQUIRE(run("construct --k 3 --p 1 --out cli_g31.json") == 0);
  auto odd = hy_instance_from_json(slurp("cli_g31.json"));
  CHECK(odd.graph.order() == 34);
}

TEST_CASE("construct rejects bad parameters with nonzero exit") {
  CHECK(run("construct --k 5 --p 0 --out cli_bad.json") != 0);
  CHECK(run("construct --k 2 --p 3 --out cli_bad.json") != 0);
  CHECK(run("construct --k 4 --p 1 --out cli_bad.json") != 0);
}

TEST_CASE("identical config produces byte-identical reports") {
  REQUIRE(run("construct --k 6 --p 3 --base random --seed 11 --out cli_a.json") == 0);
  REQUIRE(run("construct --k 6 --p 3 --base random --seed 11 --out cli_b.json") == 0);
  CHECK(slurp("cli_a.json") == slurp("cli_b.json"));
  REQUIRE(run("construct --k 6 --p 3 --base random --seed 12 --out cli_c.json") == 0);
  CHECK(slurp("cli_a.json") != slurp("cli_c.json"));

  REQUIRE(run("table I --out cli_t1a.csv") == 0);
  REQUIRE(run("table I --out cli_t1b.csv") == 0);
  CHECK(slurp("cli_t1a.csv") == slurp("cli_t1b.csv"));

  // the sampled table is pinned by its seed too
  REQUIRE(run("table III --min-order 60 --samples 2 --seed 9 --out cli_t3a.csv") == 0);
  REQUIRE(run("table III --min-order 60 --samples 2 --seed 9 --out cli_t3b.csv") == 0);
  CHECK(slurp("cli_t3a.csv") == slurp("cli_t3b.csv"));
}

TEST_CASE("table I emits nine rows in both formats") {
  REQUIRE(run("table I --out cli_t1.csv") == 0);
  std::istringstream in(slurp("cli_t1.csv"));
  std::string line;
  int rows = 0;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      header = true;
      CHECK(line == "k,r_k,kappa_k,rounded_r,rounded_kappa");
      continue;
    }
    ++rows;
  }
  CHECK(rows == 9);

  REQUIRE(run("table I --format json --out cli_t1.json") == 0);
  CHECK(slurp("cli_t1.json").find("\"rows\"") != std::string::npos);
}

TEST_CASE("energy at zero angle reports the total weight") {
  REQUIRE(run("construct --k 4 --p 2 --out cli_e.json") == 0);
  REQUIRE(run("energy --graph cli_e.json --theta 0 --out cli_e.csv") == 0);
  std::string text = slurp("cli_e.csv");
  CHECK(text.find("# total: 44") != std::string::npos);
  CHECK(run("energy --graph cli_e.json --theta 0.1 --kappa 0.1 --out cli_e2.csv") != 0);
}

TEST_CASE("verify exits zero on a reduced suite") {
  CHECK(run("verify --max-n 5 --samples 12 --seed 3") == 0);
}

TEST_CASE("energy accepts the kappa rule on a plain edge list") {
  write_text_file("cli_p3.txt", "# n 3\n0 1 1 1.0\n1 2 1 1.0\n");
  REQUIRE(run("energy --graph cli_p3.txt --kappa 0.3 --out cli_p3.csv") == 0);
  CHECK(slurp("cli_p3.csv").find("# total:") != std::string::npos);
  // multigraphs are collapsed before evaluation
  write_text_file("cli_multi.txt", "0 1 2 1.0\n1 2 1 1.0\n");
  REQUIRE(run("energy --graph cli_multi.txt --kappa 0.3 --out cli_multi.csv") == 0);
  CHECK(slurp("cli_multi.csv").find("# total:") != std::string::npos);
}

TEST_CASE("table III sampling reports an instance range around the canonical value") {
  REQUIRE(run("table III --min-order 60 --samples 3 --seed 5 --out cli_t3.csv") == 0);
  std::istringstream in(slurp("cli_t3.csv"));
  std::string line;
  std::vector<std::string> header;
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (header.empty()) {
      header = cells;
      continue;
    }
    ++rows;
    double rhat = 0, lo = 0, hi = 0;
    for (size_t c = 0; c < cells.size(); ++c) {
      if (header[c] == "rhat_k") rhat = std::stod(cells[c]);
      if (header[c] == "rhat_min") lo = std::stod(cells[c]);
      if (header[c] == "rhat_max") hi = std::stod(cells[c]);
    }
    CHECK(lo <= rhat);
    CHECK(rhat <= hi);
    CHECK(hi - lo < 1e-2);  // instance variation stays tiny
  }
  CHECK(rows == 8);
}
