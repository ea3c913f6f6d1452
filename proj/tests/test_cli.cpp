#include <doctest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "twapx/cli.hpp"
#include "twapx/io.hpp"

using namespace twapx;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "twapx");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  fs::path dir = fs::path(TWAPX_TEST_TMP) / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

// Drops the trailing wall_ms column.
std::string without_time(const std::string& row) { return row.substr(0, row.rfind(',')); }

}  // namespace

TEST_CASE("decompose mindeg on P10") {
  const fs::path dir = scratch("mindeg");
  REQUIRE(run({"generate", "--family", "path", "--n", "10", "--out", (dir / "p10.gr").string()}).code == 0);
  auto r = run({"decompose", "--algo", "mindeg", "--in", (dir / "p10.gr").string(), "--out",
                (dir / "p10.td").string(), "--report", (dir / "r.csv").string()});
  CHECK(r.code == 0);
  auto td = parse_decomposition(read_text_file(dir / "p10.td"));
  CHECK(td.decomposition.width + 1 == 2);
  auto csv = lines(read_text_file(dir / "r.csv"));
  REQUIRE(csv.size() == 2);
  CHECK(csv[0] == report_csv_header());
  CHECK(without_time(csv[1]) == "p10,10,9,mindeg,heuristic,0,2,0,0");
  // append-only: a second run adds one row, no second header
  run({"decompose", "--algo", "rs4", "--in", (dir / "p10.gr").string(), "--out",
       (dir / "p10b.td").string(), "--report", (dir / "r.csv").string()});
  csv = lines(read_text_file(dir / "r.csv"));
  CHECK(csv.size() == 3);
  CHECK(csv[2].rfind("p10,10,9,rs4,search,1,", 0) == 0);

  auto v = run({"validate", "--graph", (dir / "p10.gr").string(), "--td", (dir / "p10.td").string()});
  CHECK(v.code == 0);
  CHECK(v.out == "valid, width 1\n");
}

TEST_CASE("fixed k exceeds") {
  const fs::path dir = scratch("exceeds");
  run({"generate", "--family", "complete", "--n", "10", "--out", (dir / "k10.gr").string()});
  auto r = run({"decompose", "--algo", "rs4", "--k", "2", "--in", (dir / "k10.gr").string()});
  CHECK(r.code == 3);
  CHECK(r.err.find("the treewidth exceeds k-1") != std::string::npos);
  CHECK(r.out.empty());
}

TEST_CASE("deterministic output") {
  const fs::path dir = scratch("determinism");
  run({"generate", "--family", "partial-ktree", "--n", "40", "--k", "3", "--p", "0.3", "--seed", "4", "--out",
       (dir / "g.gr").string()});
  auto a = run({"decompose", "--algo", "bg367", "--in", (dir / "g.gr").string()});
  auto b = run({"decompose", "--algo", "bg367", "--in", (dir / "g.gr").string()});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("s td ", 0) == 0);
}

TEST_CASE("validate reports violations") {
  const fs::path dir = scratch("validate");
  write_text_file(dir / "tri.gr", "p tw 3 3\n1 2\n2 3\n1 3\n");
  write_text_file(dir / "bad.td", "s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n");
  auto r = run({"validate", "--graph", (dir / "tri.gr").string(), "--td", (dir / "bad.td").string()});
  CHECK(r.code == 1);
  CHECK(r.out.find("violation") != std::string::npos);
}

TEST_CASE("parse errors and usage") {
  const fs::path dir = scratch("parse");
  write_text_file(dir / "bad.gr", "p tw 3 2\n1 2\n");
  auto r = run({"decompose", "--in", (dir / "bad.gr").string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("parse error") != std::string::npos);
  CHECK(run({"decompose", "--in", (dir / "missing.gr").string()}).code == 2);
  CHECK(run({"decompose", "--algo", "bogus", "--in", "x"}).code == 2);
  CHECK(run({"decompose", "--k", "2", "--search", "--in", "x"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("exact") {
  const fs::path dir = scratch("exact");
  run({"generate", "--family", "grid", "--rows", "3", "--cols", "3", "--out", (dir / "g.gr").string()});
  auto r = run({"exact", "--in", (dir / "g.gr").string()});
  CHECK(r.code == 0);
  CHECK(r.out == "3\n");
  run({"generate", "--family", "path", "--n", "15", "--out", (dir / "big.gr").string()});
  CHECK(run({"exact", "--in", (dir / "big.gr").string()}).code == 2);
}

TEST_CASE("bench golden") {
  const fs::path dir = scratch("bench");
  const fs::path corpus = dir / "corpus";
  fs::create_directories(corpus);
  run({"generate", "--family", "path", "--n", "12", "--out", (corpus / "a_path.gr").string()});
  run({"generate", "--family", "cycle", "--n", "15", "--out", (corpus / "b_cycle.gr").string()});
  run({"generate", "--family", "grid", "--rows", "4", "--cols", "5", "--out", (corpus / "c_grid.gr").string()});
  run({"generate", "--family", "tree", "--n", "25", "--seed", "3", "--out", (corpus / "d_tree.gr").string()});
  run({"generate", "--family", "partial-ktree", "--n", "30", "--k", "3", "--p", "0.25", "--seed", "5", "--out",
       (corpus / "e_pkt.gr").string()});
  auto r = run({"bench", "--dir", corpus.string(), "--algos", "rs4,half45,mindeg", "--report",
                (dir / "bench.csv").string()});
  CHECK(r.code == 0);
  auto csv = lines(read_text_file(dir / "bench.csv"));
  REQUIRE(csv.size() == 16);
  CHECK(csv[0] == report_csv_header());
  std::string got;
  for (std::size_t i = 1; i < csv.size(); ++i) got += without_time(csv[i]) + "\n";
  const std::string golden = read_text_file(fs::path(TWAPX_GOLDEN_DIR) / "bench_rows.csv");
  CHECK(got == golden);
}
