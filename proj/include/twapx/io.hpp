#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "twapx/decomposition.hpp"
#include "twapx/graph.hpp"
#include "twapx/triangulation.hpp"

namespace twapx {

/// Malformed input; line() is 1-based, 0 when the problem is not tied to a
/// line (for example a missing header).
class ParseError : public std::runtime_error {
public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

struct ParsedGraph {
  Graph graph;
  /// External label of each internal vertex (the 1-based file id).
  std::vector<long long> labels;
  int dropped_self_loops = 0;
  int dropped_duplicates = 0;
};

/// PACE .gr text: "c" comment lines, one "p tw <n> <m>" header, then m
/// lines "<u> <v>" with 1-based ids. Self-loops and repeated edges are
/// dropped and counted; they still count toward m.
ParsedGraph parse_graph(std::string_view text);
ParsedGraph read_graph_file(const std::filesystem::path& path);

std::string emit_graph(const Graph& g);

/// PACE .td text: "s td <bags> <max bag size> <n>", one "b <i> <v...>"
/// line per bag, then one "<i> <j>" line per tree edge, all 1-based.
std::string emit_decomposition(const TreeDecomposition& td, Vertex n);

struct ParsedDecomposition {
  TreeDecomposition decomposition;
  Vertex num_vertices = 0;
};

/// Inverse of emit_decomposition. The width field is recomputed from the
/// bags; a header whose max bag size disagrees is a ParseError.
ParsedDecomposition parse_decomposition(std::string_view text);
ParsedDecomposition read_decomposition_file(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

std::string report_csv_header();
std::string report_csv_row(const AlgoReport& r);

/// Appends one row, writing the header first when the file is new or empty.
void append_report(const std::filesystem::path& path, const AlgoReport& r);

}  // namespace twapx
