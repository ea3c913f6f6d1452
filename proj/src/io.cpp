#include "twapx/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace twapx {
namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long to_number(std::string_view tok, int line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  }
  return value;
}

// Calls f(line_number, tokens) for every non-blank, non-comment line.
template <class F>
void for_each_line(std::string_view text, F f) {
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    auto toks = tokens(text.substr(pos, end - pos));
    if (!toks.empty() && toks[0] != "c") f(number, toks);
    if (end == text.size()) break;
    pos = end + 1;
  }
}

}  // namespace

ParsedGraph parse_graph(std::string_view text) {
  ParsedGraph out;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  long long seen_edges = 0;
  std::vector<Edge> edges;
  std::set<Edge> unique;
  for_each_line(text, [&](int line, const std::vector<std::string_view>& t) {
    if (t[0] == "p") {
      if (have_header) throw ParseError(line, "second header");
      if (t.size() != 4 || t[1] != "tw") throw ParseError(line, "malformed header, expected 'p tw <n> <m>'");
      n = to_number(t[2], line);
      m = to_number(t[3], line);
      if (n < 0 || m < 0 || n > 100'000'000) throw ParseError(line, "header counts out of range");
      have_header = true;
      return;
    }
    if (!have_header) throw ParseError(line, "edge before 'p tw' header");
    if (t.size() != 2) throw ParseError(line, "edge line must hold exactly two ids");
    const long long u = to_number(t[0], line);
    const long long v = to_number(t[1], line);
    for (long long id : {u, v}) {
      if (id < 1 || id > n) {
        throw ParseError(line, "vertex id " + std::to_string(id) + " outside 1.." + std::to_string(n));
      }
    }
    ++seen_edges;
    if (u == v) {
      ++out.dropped_self_loops;
      return;
    }
    Edge e{static_cast<Vertex>(std::min(u, v) - 1), static_cast<Vertex>(std::max(u, v) - 1)};
    if (!unique.insert(e).second) {
      ++out.dropped_duplicates;
      return;
    }
    edges.push_back(e);
  });
  if (!have_header) throw ParseError(0, "missing 'p tw <n> <m>' header");
  if (seen_edges != m) {
    throw ParseError(0, "header declares " + std::to_string(m) + " edges but the file lists " +
                            std::to_string(seen_edges));
  }
  out.graph = Graph(static_cast<Vertex>(n), std::span<const Edge>(edges));
  out.labels.resize(static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i) out.labels[static_cast<std::size_t>(i)] = i + 1;
  return out;
}

ParsedGraph read_graph_file(const std::filesystem::path& path) {
  return parse_graph(read_text_file(path));
}

std::string emit_graph(const Graph& g) {
  std::ostringstream os;
  os << "p tw " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) os << u + 1 << ' ' << v + 1 << '\n';
  return os.str();
}

std::string emit_decomposition(const TreeDecomposition& td, Vertex n) {
  std::ostringstream os;
  os << "s td " << td.bags.size() << ' ' << max_bag_width(td.bags) + 1 << ' ' << n << '\n';
  for (std::size_t i = 0; i < td.bags.size(); ++i) {
    os << "b " << i + 1;
    for (Vertex v : td.bags[i]) os << ' ' << v + 1;
    os << '\n';
  }
  for (const auto& [a, b] : td.tree_edges) os << a + 1 << ' ' << b + 1 << '\n';
  return os.str();
}

ParsedDecomposition parse_decomposition(std::string_view text) {
  ParsedDecomposition out;
  bool have_header = false;
  long long num_bags = 0;
  long long max_bag = 0;
  std::vector<char> bag_seen;
  auto& td = out.decomposition;
  for_each_line(text, [&](int line, const std::vector<std::string_view>& t) {
    if (t[0] == "s") {
      if (have_header) throw ParseError(line, "second solution header");
      if (t.size() != 5 || t[1] != "td") {
        throw ParseError(line, "malformed header, expected 's td <bags> <max bag> <n>'");
      }
      num_bags = to_number(t[2], line);
      max_bag = to_number(t[3], line);
      const long long n = to_number(t[4], line);
      if (num_bags < 0 || max_bag < 0 || n < 0) throw ParseError(line, "negative header value");
      out.num_vertices = static_cast<Vertex>(n);
      td.bags.assign(static_cast<std::size_t>(num_bags), {});
      bag_seen.assign(static_cast<std::size_t>(num_bags), 0);
      have_header = true;
      return;
    }
    if (!have_header) throw ParseError(line, "content before 's td' header");
    if (t[0] == "b") {
      if (t.size() < 2) throw ParseError(line, "bag line without an index");
      const long long idx = to_number(t[1], line);
      if (idx < 1 || idx > num_bags) throw ParseError(line, "bag index out of range");
      if (bag_seen[idx - 1]) throw ParseError(line, "bag " + std::to_string(idx) + " listed twice");
      bag_seen[idx - 1] = 1;
      std::vector<Vertex> members;
      for (std::size_t i = 2; i < t.size(); ++i) {
        const long long v = to_number(t[i], line);
        if (v < 1 || v > out.num_vertices) throw ParseError(line, "bag vertex out of range");
        members.push_back(static_cast<Vertex>(v - 1));
      }
      td.bags[static_cast<std::size_t>(idx - 1)] = VertexSet(std::move(members));
      return;
    }
    if (t.size() != 2) throw ParseError(line, "tree edge line must hold exactly two bag indices");
    const long long a = to_number(t[0], line);
    const long long b = to_number(t[1], line);
    if (a < 1 || b < 1 || a > num_bags || b > num_bags) throw ParseError(line, "tree edge index out of range");
    td.tree_edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
  });
  if (!have_header) throw ParseError(0, "missing 's td' header");
  for (std::size_t i = 0; i < bag_seen.size(); ++i) {
    if (!bag_seen[i]) throw ParseError(0, "bag " + std::to_string(i + 1) + " is never listed");
  }
  td.width = max_bag_width(td.bags);
  if (td.width + 1 != max_bag) {
    throw ParseError(0, "header max bag size " + std::to_string(max_bag) + " but largest bag has " +
                            std::to_string(td.width + 1));
  }
  return out;
}

ParsedDecomposition read_decomposition_file(const std::filesystem::path& path) {
  return parse_decomposition(read_text_file(path));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

std::string report_csv_header() {
  return "graph,nodes,edges,algo,mode,k_used,width_plus_one,separator_calls,flow_augmentations,"
         "wall_ms";
}

std::string report_csv_row(const AlgoReport& r) {
  std::string name = r.graph_name;
  if (name.find_first_of(",\"\n") != std::string::npos) {
    std::string quoted = "\"";
    for (char c : name) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    name = quoted + "\"";
  }
  char ms[64];
  std::snprintf(ms, sizeof ms, "%.3f", r.wall_ms);
  std::ostringstream os;
  os << name << ',' << r.n << ',' << r.m << ',' << r.algorithm << ',' << r.mode << ',' << r.k_used
     << ',' << r.width_plus_one << ',' << r.separator_calls << ',' << r.flow_augmentations << ','
     << ms;
  return os.str();
}

void append_report(const std::filesystem::path& path, const AlgoReport& r) {
  std::error_code ec;
  const bool fresh = !std::filesystem::exists(path, ec) || std::filesystem::file_size(path, ec) == 0;
  std::ofstream out(path, std::ios::binary | std::ios::app);
  if (!out) throw std::runtime_error("cannot append to " + path.string());
  if (fresh) out << report_csv_header() << '\n';
  out << report_csv_row(r) << '\n';
}

}  // namespace twapx
