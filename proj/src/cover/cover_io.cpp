#include "dcc/cover_io.hpp"

#include <fstream>
#include <ostream>
#include <string>

#include "dcc/text_reader.hpp"

namespace dcc {

CliqueCover read_cover(std::istream& in) {
  detail::TextReader reader(in);
  std::vector<std::uint64_t> f;
  if (!reader.next(f)) throw ParseError(0, "missing header 'n k s'");
  if (f.size() != 3) throw ParseError(reader.line(), "header must be 'n k s'");
  const std::uint64_t n = f[0], k = f[1], s = f[2];
  if (n >= kNoVertex) throw ParseError(reader.line(), "vertex count too large");
  CliqueCover cover(n);
  std::vector<Vertex> clique;
  std::uint64_t assignments = 0;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (!reader.next(f)) {
      throw ParseError(0, "expected " + std::to_string(k) + " clique lines, found " + std::to_string(i));
    }
    clique.clear();
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (f[j] < 1 || f[j] > n) {
        throw ParseError(reader.line(), "vertex " + std::to_string(f[j]) + " out of range 1.." + std::to_string(n));
      }
      if (j > 0 && f[j] <= f[j - 1]) throw ParseError(reader.line(), "clique ids must be strictly ascending");
      clique.push_back(static_cast<Vertex>(f[j] - 1));
    }
    cover.add_clique(clique);
    assignments += clique.size();
  }
  if (reader.next(f)) throw ParseError(reader.line(), "more clique lines than declared k=" + std::to_string(k));
  if (assignments != s) {
    throw ParseError(0, "header declares s=" + std::to_string(s) + " assignments, found " +
                            std::to_string(assignments));
  }
  return cover;
}

CliqueCover load_cover(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_cover(in);
}

void write_cover(const CliqueCover& cover, std::ostream& out) {
  out << cover.num_vertices() << ' ' << cover.num_cliques() << ' ' << cover.size() << '\n';
  for (Label l = 0; l < cover.num_cliques(); ++l) {
    bool first = true;
    for (Vertex v : cover.clique(l)) {
      if (!first) out << ' ';
      out << v + 1;
      first = false;
    }
    out << '\n';
  }
}

void save_cover(const CliqueCover& cover, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_cover(cover, out);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace dcc
