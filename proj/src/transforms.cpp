#include "gsc/transforms.hpp"

#include <algorithm>
#include <string>

#include "gsc/indices.hpp"

namespace gsc {

PathMergePair lemma1_setup(const Graph& q, Vertex u, int a, int b) {
  if (q.order() < 2) throw PreconditionError("path merge needs |V(q)| >= 2");
  if (b < 1 || a < b) {
    throw PreconditionError("path merge needs a >= b >= 1, got a = " + std::to_string(a) + ", b = " + std::to_string(b));
  }
  if (u < 0 || u >= q.order()) throw PreconditionError("attachment vertex out of range");
  if (!is_connected(q)) throw PreconditionError("path merge needs a connected base graph");
  return {attach_path(attach_path(q, u, a), u, b), attach_path(q, u, a + b)};
}

Graph lemma2_reroute(const Graph& h, Vertex u, Vertex u2, Vertex u_prime) {
  const int n = h.order();
  for (Vertex v : {u, u2, u_prime}) {
    if (v < 0 || v >= n) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
  }
  if (h.degree(u) != 3) throw PreconditionError("u must have degree 3, has " + std::to_string(h.degree(u)));
  if (!h.has_edge(u, u2)) throw PreconditionError("u2 is not a neighbor of u");
  if (h.degree(u_prime) != 1) throw PreconditionError("u' is not a pendant vertex");
  if (h.degree(u2) > 3) {
    throw PreconditionError("u2 has degree " + std::to_string(h.degree(u2)) + " > 3");
  }
  // Walk from u' toward u through degree-2 vertices.
  Vertex prev = u_prime;
  Vertex cur = h.neighbors(u_prime)[0];
  while (cur != u) {
    if (h.degree(cur) != 2) throw PreconditionError("u' does not end a path hanging from u");
    Vertex next = h.neighbors(cur)[0] == prev ? h.neighbors(cur)[1] : h.neighbors(cur)[0];
    prev = cur;
    cur = next;
  }
  if (prev == u2) throw PreconditionError("u2 lies on the path ending at u'");

  std::vector<Edge> edges;
  for (auto e : h.edges()) {
    if (e != Edge{std::min(u, u2), std::max(u, u2)}) edges.push_back(e);
  }
  edges.emplace_back(u_prime, u2);
  return make_graph(n, edges);
}

double index_delta(const Graph& before, const Graph& after, double alpha) {
  return chi_alpha(after, alpha) - chi_alpha(before, alpha);
}

RewriteOutcome make_outcome(Graph before, Graph after, double alpha) {
  const double d = index_delta(before, after, alpha);
  return {std::move(before), std::move(after), alpha, d};
}

Graph random_connected_graph(int n, double extra_edge_p, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<Vertex> parent(0, v - 1);
    edges.emplace_back(parent(rng), v);
  }
  std::bernoulli_distribution extra(extra_edge_p);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (extra(rng)) edges.emplace_back(u, v);
    }
  }
  return make_graph(n, edges);
}

PathMergeInstance random_path_merge_instance(std::mt19937_64& rng, int max_q, int max_len) {
  const int nq = std::uniform_int_distribution<int>(2, max_q)(rng);
  Graph q = random_connected_graph(nq, 0.2, rng);
  const Vertex u = std::uniform_int_distribution<Vertex>(0, nq - 1)(rng);
  const int a = std::uniform_int_distribution<int>(1, max_len)(rng);
  const int b = std::uniform_int_distribution<int>(1, a)(rng);
  return {std::move(q), u, a, b};
}

RerouteInstance random_reroute_instance(std::mt19937_64& rng, int max_m, int max_len) {
  while (true) {
    const int m = std::uniform_int_distribution<int>(3, max_m)(rng);
    Graph base = random_connected_graph(m, 0.15, rng);
    std::vector<Vertex> deg_two;
    for (Vertex v = 0; v < m; ++v) {
      if (base.degree(v) == 2) deg_two.push_back(v);
    }
    if (deg_two.empty()) continue;
    const Vertex u = deg_two[std::uniform_int_distribution<std::size_t>(0, deg_two.size() - 1)(rng)];
    std::vector<Vertex> candidates;
    for (Vertex w : base.neighbors(u)) {
      if (base.degree(w) <= 3) candidates.push_back(w);
    }
    if (candidates.empty()) continue;
    const Vertex u2 = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
    const Vertex u1 = base.neighbors(u)[0] == u2 ? base.neighbors(u)[1] : base.neighbors(u)[0];
    const int len = std::uniform_int_distribution<int>(1, max_len)(rng);
    return {attach_path(base, u, len), u, u1, u2, m + len - 1, len};
  }
}

}  // namespace gsc
