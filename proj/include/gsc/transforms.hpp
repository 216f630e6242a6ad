#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

#include "gsc/graph.hpp"

namespace gsc {

/// A rewrite's input and output together with the resulting index change.
struct RewriteOutcome {
  Graph before;
  Graph after;
  double alpha = 0.0;
  double delta_chi = 0.0;
};

/// Hypothesis of a rewrite is not met by its arguments.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct PathMergePair {
  Graph split;   // q with paths of a and b vertices both attached at u
  Graph merged;  // q with one path of a + b vertices attached at u
};

/// Builds the two graphs compared by the path-merge rewrite. Requires q
/// connected with at least two vertices and a >= b >= 1.
PathMergePair lemma1_setup(const Graph& q, Vertex u, int a, int b);

/// Moves edge u-u2 to u'-u2, where u has degree 3, u2 is a neighbor of u of
/// degree at most 3, and u' is the pendant end of a path hanging from u that
/// does not pass through u2.
Graph lemma2_reroute(const Graph& h, Vertex u, Vertex u2, Vertex u_prime);

/// chi_alpha(after) - chi_alpha(before).
double index_delta(const Graph& before, const Graph& after, double alpha);

RewriteOutcome make_outcome(Graph before, Graph after, double alpha);

/// Inputs for the reroute rewrite together with the vertices it names.
struct RerouteInstance {
  Graph h;
  Vertex u = 0;
  Vertex u1 = 0;
  Vertex u2 = 0;
  Vertex u_prime = 0;
  int path_len = 0;
};

/// Random connected graph on n vertices: a random recursive tree plus each
/// remaining pair independently with probability extra_edge_p.
Graph random_connected_graph(int n, double extra_edge_p, std::mt19937_64& rng);

struct PathMergeInstance {
  Graph q;
  Vertex u = 0;
  int a = 0;
  int b = 0;
};

/// Random path-merge input: 2 <= |q| <= max_q, 1 <= b <= a <= max_len.
PathMergeInstance random_path_merge_instance(std::mt19937_64& rng, int max_q = 8, int max_len = 4);

/// Random reroute input: base graph on 3..max_m vertices with a degree-two
/// vertex u, a path of 1..max_len vertices hung at u, and u2 picked among
/// u's original neighbors with degree <= 3.
RerouteInstance random_reroute_instance(std::mt19937_64& rng, int max_m = 8, int max_len = 4);

}  // namespace gsc
