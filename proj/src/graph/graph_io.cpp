#include "dcc/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <string_view>

#include "dcc/text_reader.hpp"

namespace dcc {
namespace detail {

bool TextReader::next(std::vector<std::uint64_t>& fields) {
  while (std::getline(in_, buf_)) {
    ++line_;
    std::string_view s(buf_);
    std::size_t start = s.find_first_not_of(" \t\r");
    if (start == std::string_view::npos || s[start] == '%') continue;
    fields.clear();
    std::size_t i = start;
    while (i < s.size()) {
      if (s[i] == ' ' || s[i] == '\t' || s[i] == '\r') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
      std::uint64_t value = 0;
      auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + j, value);
      if (ec != std::errc() || ptr != s.data() + j) {
        throw ParseError(line_, "expected a non-negative integer, got '" +
                                    std::string(s.substr(i, j - i)) + "'");
      }
      fields.push_back(value);
      i = j;
    }
    return true;
  }
  return false;
}

}  // namespace detail

Graph read_graph(std::istream& in) {
  detail::TextReader reader(in);
  std::vector<std::uint64_t> f;
  if (!reader.next(f)) throw ParseError(0, "missing header 'n m'");
  if (f.size() != 2) throw ParseError(reader.line(), "header must be 'n m'");
  const std::uint64_t n = f[0];
  const std::uint64_t m = f[1];
  if (n >= kNoVertex) throw ParseError(reader.line(), "vertex count too large");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    if (!reader.next(f)) {
      throw ParseError(0, "expected " + std::to_string(m) + " edge lines, found " + std::to_string(i));
    }
    if (f.size() != 2) throw ParseError(reader.line(), "edge line must be 'u v'");
    for (std::uint64_t x : f) {
      if (x < 1 || x > n) {
        throw ParseError(reader.line(), "vertex " + std::to_string(x) + " out of range 1.." + std::to_string(n));
      }
    }
    edges.push_back({static_cast<Vertex>(f[0] - 1), static_cast<Vertex>(f[1] - 1)});
  }
  if (reader.next(f)) throw ParseError(reader.line(), "more edge lines than declared m=" + std::to_string(m));
  return Graph::from_edges(n, edges);
}

Graph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_graph(in);
}

void write_graph(const Graph& g, std::ostream& out) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v) out << u + 1 << ' ' << v + 1 << '\n';
    }
  }
}

void save_graph(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_graph(g, out);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace dcc
