#include <algorithm>
#include <stdexcept>
#include <string>

#include "dcc/algorithms.hpp"

namespace dcc {
namespace {

// BFS state with scanned-clique flags; reset() clears only what a run touched.
class BfsEngine {
 public:
  explicit BfsEngine(const DccRepresentation& dcc)
      : dcc_(dcc),
        dist_(dcc.num_vertices(), kInfinity),
        parent_(dcc.num_vertices(), kNoVertex),
        scanned_(dcc.cover.num_cliques(), 0) {}

  void run(Vertex s) {
    std::size_t head = order_.size();
    dist_[s] = 0;
    order_.push_back(s);
    // order_ doubles as the FIFO queue.
    while (head < order_.size()) {
      const Vertex v = order_[head++];
      for (Label l : dcc_.dual.labels(v)) {
        if (scanned_[l]) continue;
        scanned_[l] = 1;
        scanned_list_.push_back(l);
        for (Vertex u : dcc_.cover.clique(l)) {
          if (dist_[u] != kInfinity) continue;
          dist_[u] = dist_[v] + 1;
          parent_[u] = v;
          order_.push_back(u);
        }
      }
    }
  }

  void reset() {
    for (Vertex v : order_) {
      dist_[v] = kInfinity;
      parent_[v] = kNoVertex;
    }
    for (Label l : scanned_list_) scanned_[l] = 0;
    order_.clear();
    scanned_list_.clear();
  }

  bool discovered(Vertex v) const { return dist_[v] != kInfinity; }
  const std::vector<std::uint32_t>& dist() const { return dist_; }
  const std::vector<Vertex>& order() const { return order_; }
  std::size_t cliques_scanned() const { return scanned_list_.size(); }

  BfsResult take() {
    BfsResult r;
    r.dist = std::move(dist_);
    r.parent = std::move(parent_);
    r.order = std::move(order_);
    r.cliques_scanned = scanned_list_.size();
    return r;
  }

  std::vector<Vertex> take_parents() { return std::move(parent_); }

 private:
  const DccRepresentation& dcc_;
  std::vector<std::uint32_t> dist_;
  std::vector<Vertex> parent_;
  std::vector<char> scanned_;
  std::vector<Vertex> order_;
  std::vector<Label> scanned_list_;
};

}  // namespace

BfsResult bfs(const DccRepresentation& dcc, Vertex s) {
  if (s >= dcc.num_vertices()) {
    throw std::out_of_range("source " + std::to_string(s) + " out of range for n=" +
                            std::to_string(dcc.num_vertices()));
  }
  BfsEngine engine(dcc);
  engine.run(s);
  return engine.take();
}

Forest bfs_forest(const DccRepresentation& dcc) {
  BfsEngine engine(dcc);
  Forest f;
  for (Vertex v : cover_universe(dcc.cover)) {
    if (engine.discovered(v)) continue;
    f.roots.push_back(v);
    engine.run(v);
  }
  f.parent = engine.take_parents();
  return f;
}

Forest dfs_forest(const DccRepresentation& dcc) {
  const std::size_t n = dcc.num_vertices();
  Forest f;
  f.parent.assign(n, kNoVertex);
  std::vector<char> discovered(n, 0);
  std::vector<std::size_t> cursor(dcc.cover.num_cliques(), 0);
  // Frame: vertex and index of the label of L_v being scanned.
  struct Frame {
    Vertex v;
    std::size_t li;
  };
  std::vector<Frame> stack;
  for (Vertex root : cover_universe(dcc.cover)) {
    if (discovered[root]) continue;
    f.roots.push_back(root);
    discovered[root] = 1;
    stack.push_back({root, 0});
    while (!stack.empty()) {
      Frame& top = stack.back();
      auto labels = dcc.dual.labels(top.v);
      if (top.li == labels.size()) {
        stack.pop_back();
        continue;
      }
      const Label l = labels[top.li];
      auto c = dcc.cover.clique(l);
      if (cursor[l] == c.size()) {
        ++top.li;
        continue;
      }
      const Vertex u = c[cursor[l]++];
      if (discovered[u]) continue;
      discovered[u] = 1;
      f.parent[u] = top.v;
      stack.push_back({u, 0});
    }
  }
  return f;
}

Eccentricities eccentricity_sweep(const DccRepresentation& dcc) {
  const auto universe = cover_universe(dcc.cover);
  if (universe.empty()) throw std::domain_error("eccentricities need a nonempty cover");
  Eccentricities out;
  out.eccentricity.assign(dcc.num_vertices(), kInfinity);
  out.radius = kInfinity;
  BfsEngine engine(dcc);
  for (Vertex s : universe) {
    engine.reset();
    engine.run(s);
    if (engine.order().size() != universe.size()) {
      for (Vertex u : universe) {
        if (!engine.discovered(u)) throw DisconnectedGraphError(s, u);
      }
    }
    const std::uint32_t ecc = engine.dist()[engine.order().back()];
    out.eccentricity[s] = ecc;
    out.diameter = std::max(out.diameter, ecc);
    out.radius = std::min(out.radius, ecc);
  }
  for (Vertex v : universe) {
    if (out.eccentricity[v] == out.radius) out.center.push_back(v);
  }
  return out;
}

}  // namespace dcc
