#include "gsc/graph.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace gsc {

Graph Graph::make(int n, std::span<const Edge> edges) {
  if (n < 1) throw GraphError("graph needs at least one vertex, got n = " + std::to_string(n));
  Graph g;
  g.adjacency_.resize(static_cast<std::size_t>(n));
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  std::size_t twice_edges = 0;
  for (auto& nbrs : g.adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    twice_edges += nbrs.size();
  }
  g.edge_count_ = twice_edges / 2;
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order()) {
    throw GraphError("vertex " + std::to_string(v) + " outside [0, " + std::to_string(order()) + ")");
  }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adjacency_[v];
}

int Graph::degree(Vertex v) const {
  check_vertex(v);
  return static_cast<int>(adjacency_[v].size());
}

int Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& nbrs : adjacency_) best = std::max(best, nbrs.size());
  return static_cast<int>(best);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> out;
  out.reserve(adjacency_.size());
  for (const auto& nbrs : adjacency_) out.push_back(static_cast<int>(nbrs.size()));
  return out;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != adjacency_.size()) throw GraphError("permutation size does not match graph order");
  std::vector<bool> seen(perm.size(), false);
  for (Vertex p : perm) {
    if (p < 0 || p >= order() || seen[p]) throw GraphError("relabeling is not a permutation");
    seen[p] = true;
  }
  std::vector<Edge> mapped;
  mapped.reserve(edge_count_);
  for (auto [u, v] : edges()) mapped.emplace_back(perm[u], perm[v]);
  return make(order(), mapped);
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

StructureClass classify(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  StructureClass result;
  if (!is_connected(g)) return result;
  if (g.edge_count() + 1 == n) {
    result.tag = StructureTag::kTree;
    return result;
  }
  if (g.edge_count() != n) return result;

  result.tag = StructureTag::kUnicyclic;
  std::vector<int> deg = g.degrees();
  std::vector<bool> removed(n, false);
  std::vector<Vertex> leaves;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (deg[v] == 1) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    Vertex v = leaves.back();
    leaves.pop_back();
    removed[v] = true;
    for (Vertex w : g.neighbors(v)) {
      if (!removed[w] && --deg[w] == 1) leaves.push_back(w);
    }
  }
  Vertex start = 0;
  while (removed[start]) ++start;
  // Remaining subgraph is 2-regular and connected: walk it.
  Vertex prev = -1;
  Vertex cur = start;
  do {
    result.cycle.push_back(cur);
    Vertex next = -1;
    for (Vertex w : g.neighbors(cur)) {
      if (!removed[w] && w != prev) {
        next = w;
        break;
      }
    }
    prev = cur;
    cur = next;
  } while (cur != start);
  return result;
}

std::string to_string(StructureTag tag) {
  switch (tag) {
    case StructureTag::kTree:
      return "tree";
    case StructureTag::kUnicyclic:
      return "unicyclic";
    case StructureTag::kOther:
      break;
  }
  return "other";
}

Graph attach_path(const Graph& g, Vertex v, int r) {
  if (r < 1) throw GraphError("attached path needs at least one vertex, got r = " + std::to_string(r));
  if (v < 0 || v >= g.order()) {
    throw GraphError("attachment vertex " + std::to_string(v) + " outside [0, " + std::to_string(g.order()) + ")");
  }
  const int n = g.order();
  std::vector<Edge> edges = g.edges();
  edges.emplace_back(v, n);
  for (int i = 1; i < r; ++i) edges.emplace_back(n + i - 1, n + i);
  return Graph::make(n + r, edges);
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  std::vector<Edge> edges;
  auto fail = [&](const std::string& what) {
    throw GraphError("edge list line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    if (n < 0) {
      if (!(fields >> n) || n < 1) fail("expected a positive vertex count");
      std::string rest;
      if (fields >> rest) fail("trailing text after vertex count");
      continue;
    }
    Vertex u = 0, v = 0;
    std::string rest;
    if (!(fields >> u >> v) || (fields >> rest)) fail("expected two vertex indices");
    if (u < 0 || u >= n || v < 0 || v >= n) fail("vertex index out of range");
    if (u == v) fail("self-loop");
    edges.emplace_back(u, v);
  }
  if (n < 0) throw GraphError("edge list is empty");
  return Graph::make(n, edges);
}

}  // namespace gsc
