#include "twapx/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "twapx/generators.hpp"
#include "twapx/io.hpp"
#include "twapx/triangulation.hpp"
#include "twapx/validation.hpp"

namespace twapx {
namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitParse = 2;
constexpr int kExitExceeds = 3;

struct DecomposeArgs {
  std::string algo = "rs4";
  std::optional<int> k;
  bool search = false;
  bool adaptive = false;
  std::string alpha = "4/3";
  std::string in;
  std::string out;
  std::string report;
};

struct BenchArgs {
  std::string dir;
  std::vector<std::string> algos{"rs4", "half45", "mindeg"};
  std::string report;
  bool adaptive = false;
  std::string alpha = "4/3";
};

struct GenerateArgs {
  std::string family;
  int n = 10;
  int k = 2;
  int rows = 3;
  int cols = 3;
  double p = 0.3;
  std::uint64_t seed = 1;
  std::string out;
};

ParsedGraph load_graph(const std::string& path) {
  ParsedGraph pg = read_graph_file(path);
  return pg;
}

void warn_dropped(const ParsedGraph& pg, std::ostream& err) {
  if (pg.dropped_self_loops > 0) err << "warning: dropped " << pg.dropped_self_loops << " self-loop(s)\n";
  if (pg.dropped_duplicates > 0) err << "warning: dropped " << pg.dropped_duplicates << " duplicate edge(s)\n";
}

void print_violations(const std::vector<Violation>& vs, std::ostream& out) {
  for (const Violation& v : vs) out << "violation: " << v.message << '\n';
}

int run_decompose(const DecomposeArgs& a, std::ostream& out, std::ostream& err) {
  const Algorithm algo = parse_algorithm(a.algo);
  const Rational alpha = parse_rational(a.alpha);
  const ParsedGraph pg = load_graph(a.in);
  warn_dropped(pg, err);

  DecomposeMode mode;
  mode.adaptive = a.adaptive;
  if (a.k) {
    if (*a.k < 1) {
      err << "error: --k must be at least 1\n";
      return kExitParse;
    }
    mode.fixed_k = *a.k;
  }
  const DecomposeResult res = decompose(pg.graph, algo, mode, alpha, fs::path(a.in).stem().string());
  if (res.outcome.exceeds()) {
    err << "the treewidth exceeds k-1 (k = " << res.outcome.k << ")\n";
    return kExitExceeds;
  }
  const TreeDecomposition& td = res.outcome.success->decomposition;
  const std::string text = emit_decomposition(td, pg.graph.num_vertices());
  if (a.out.empty()) {
    out << text;
  } else {
    write_text_file(a.out, text);
    out << "width_plus_one " << res.report.width_plus_one << " k_used " << res.k_used << '\n';
  }
  if (!a.report.empty()) append_report(a.report, res.report);
  return kExitOk;
}

int run_validate(const std::string& graph_path, const std::string& td_path, std::ostream& out) {
  const ParsedGraph pg = load_graph(graph_path);
  const ParsedDecomposition pd = read_decomposition_file(td_path);
  std::vector<Violation> vs;
  if (pd.num_vertices != pg.graph.num_vertices()) {
    vs.push_back({ViolationKind::kBagVertexOutOfRange, -1, {-1, -1}, -1,
                  "decomposition header names " + std::to_string(pd.num_vertices) +
                      " vertices, graph has " + std::to_string(pg.graph.num_vertices())});
  }
  auto more = check_tree_decomposition(pg.graph, pd.decomposition);
  vs.insert(vs.end(), more.begin(), more.end());
  if (!vs.empty()) {
    print_violations(vs, out);
    return kExitInvalid;
  }
  out << "valid, width " << pd.decomposition.width << '\n';
  return kExitOk;
}

int run_exact(const std::string& path, std::ostream& out, std::ostream& err) {
  const ParsedGraph pg = load_graph(path);
  if (pg.graph.num_vertices() > kMaxExactTreewidthVertices) {
    err << "error: exact needs at most " << kMaxExactTreewidthVertices << " vertices, got "
        << pg.graph.num_vertices() << '\n';
    return kExitParse;
  }
  out << exact_treewidth(pg.graph) << '\n';
  return kExitOk;
}

int run_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(a.dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".gr") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<Algorithm> algos;
  for (const std::string& s : a.algos) algos.push_back(parse_algorithm(s));
  const Rational alpha = parse_rational(a.alpha);

  int status = kExitOk;
  out << report_csv_header() << '\n';
  for (const fs::path& file : files) {
    const ParsedGraph pg = load_graph(file.string());
    for (Algorithm algo : algos) {
      DecomposeMode mode;
      mode.adaptive = a.adaptive;
      const DecomposeResult res = decompose(pg.graph, algo, mode, alpha, file.stem().string());
      const auto vs = check_tree_decomposition(pg.graph, res.outcome.success->decomposition);
      if (!vs.empty()) {
        err << file.stem().string() << '/' << algorithm_name(algo) << ": invalid decomposition\n";
        print_violations(vs, err);
        status = kExitInvalid;
      }
      out << report_csv_row(res.report) << '\n';
      if (!a.report.empty()) append_report(a.report, res.report);
    }
  }
  return status;
}

int run_generate(const GenerateArgs& a, std::ostream& out) {
  std::mt19937_64 rng(a.seed);
  Graph g;
  const std::string& f = a.family;
  if (f == "path") g = path_graph(a.n);
  else if (f == "cycle") g = cycle_graph(a.n);
  else if (f == "complete") g = complete_graph(a.n);
  else if (f == "grid") g = grid_graph(a.rows, a.cols);
  else if (f == "tree") g = random_tree(a.n, rng);
  else if (f == "gnp") g = random_gnp(a.n, a.p, rng);
  else if (f == "ktree") g = random_k_tree(a.n, a.k, rng);
  else if (f == "partial-ktree") g = random_partial_k_tree(a.n, a.k, 1.0 - a.p, rng);
  else throw std::invalid_argument("unknown family '" + f + "'");
  const std::string text = emit_graph(g);
  if (a.out.empty()) out << text;
  else write_text_file(a.out, text);
  return kExitOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"treewidth approximation by balanced separators"};
  app.require_subcommand(1);

  DecomposeArgs dec;
  auto* c_dec = app.add_subcommand("decompose", "triangulate a graph and emit a tree decomposition");
  c_dec->add_option("--algo", dec.algo, "rs4 | half45 | bg367 | mindeg | generic")
      ->check(CLI::IsMember({"rs4", "half45", "bg367", "mindeg", "generic"}));
  auto* k_opt = c_dec->add_option("--k", dec.k, "fixed k; Exceeds means the treewidth exceeds k-1");
  auto* s_opt = c_dec->add_flag("--search", dec.search, "least k that succeeds (the default)");
  k_opt->excludes(s_opt);
  c_dec->add_flag("--adaptive", dec.adaptive, "grow W' until a separator is found");
  c_dec->add_option("--alpha", dec.alpha, "three-way sum parameter p/q");
  c_dec->add_option("--in", dec.in)->required();
  c_dec->add_option("--out", dec.out, "defaults to stdout");
  c_dec->add_option("--report", dec.report, "CSV file to append a row to");

  std::string val_graph, val_td;
  auto* c_val = app.add_subcommand("validate", "check a tree decomposition");
  c_val->add_option("--graph", val_graph)->required();
  c_val->add_option("--td", val_td)->required();

  std::string exact_in;
  auto* c_exact = app.add_subcommand("exact", "exact treewidth for small graphs");
  c_exact->add_option("--in", exact_in)->required();

  BenchArgs bench;
  auto* c_bench = app.add_subcommand("bench", "run algorithms over every .gr file in a directory");
  c_bench->add_option("--dir", bench.dir)->required();
  c_bench->add_option("--algos", bench.algos)->delimiter(',');
  c_bench->add_option("--report", bench.report);
  c_bench->add_flag("--adaptive", bench.adaptive);
  c_bench->add_option("--alpha", bench.alpha);

  GenerateArgs gen;
  auto* c_gen = app.add_subcommand("generate", "write a synthetic graph");
  c_gen->add_option("--family", gen.family, "path | cycle | complete | grid | tree | gnp | ktree | partial-ktree")
      ->required();
  c_gen->add_option("--n", gen.n);
  c_gen->add_option("--k", gen.k);
  c_gen->add_option("--rows", gen.rows);
  c_gen->add_option("--cols", gen.cols);
  c_gen->add_option("--p", gen.p, "edge probability (gnp) or drop probability (partial-ktree)");
  c_gen->add_option("--seed", gen.seed);
  c_gen->add_option("--out", gen.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  }

  try {
    if (*c_dec) return run_decompose(dec, out, err);
    if (*c_val) return run_validate(val_graph, val_td, out);
    if (*c_exact) return run_exact(exact_in, out, err);
    if (*c_bench) return run_bench(bench, out, err);
    if (*c_gen) return run_generate(gen, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  }
  return kExitParse;
}

}  // namespace twapx
