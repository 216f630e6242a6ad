#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gsc {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Raised on invalid graph construction or an out-of-range vertex argument.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Undirected simple graph on vertices 0..n-1. Immutable once built;
/// adjacency lists are sorted and duplicate free.
class Graph {
 public:
  /// Builds a graph from an edge list. Repeated pairs (in either orientation)
  /// collapse to one edge. Throws GraphError on n < 1, an endpoint outside
  /// [0, n) or a self-loop.
  static Graph make(int n, std::span<const Edge> edges);
  static Graph make(int n, std::initializer_list<Edge> edges) {
    return make(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const;
  int degree(Vertex v) const;
  int max_degree() const;
  bool has_edge(Vertex u, Vertex v) const;

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;
  std::vector<int> degrees() const;

  /// Relabels vertex v as perm[v].
  Graph relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph() = default;
  void check_vertex(Vertex v) const;

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

inline Graph make_graph(int n, std::span<const Edge> edges) { return Graph::make(n, edges); }
inline Graph make_graph(int n, std::initializer_list<Edge> edges) { return Graph::make(n, edges); }

inline int degree(const Graph& g, Vertex v) { return g.degree(v); }
inline int max_degree(const Graph& g) { return g.max_degree(); }

bool is_connected(const Graph& g);

enum class StructureTag { kTree, kUnicyclic, kOther };

struct StructureClass {
  StructureTag tag = StructureTag::kOther;
  /// Unique cycle in traversal order; empty unless tag == kUnicyclic.
  std::vector<Vertex> cycle;
};

/// Tree iff connected with n-1 edges; unicyclic iff connected with n edges.
/// The cycle is what survives repeated removal of degree-1 vertices.
StructureClass classify(const Graph& g);

std::string to_string(StructureTag tag);

/// Adds a path on r new vertices n..n+r-1 (in path order) and joins vertex n
/// to v. r == 1 attaches a pendant vertex.
Graph attach_path(const Graph& g, Vertex v, int r);

/// Plain edge-list text: first line n, then one "u v" pair per line. Blank
/// lines and lines starting with '#' are skipped.
Graph read_edge_list(std::istream& in);

}  // namespace gsc
