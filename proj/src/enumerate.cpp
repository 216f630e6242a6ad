#include "gsc/enumerate.hpp"

#include <set>
#include <string>

#include "gsc/canonical.hpp"
#include "gsc/graph6.hpp"

namespace gsc {
namespace {

std::vector<Graph> from_canonical(const std::set<std::string>& forms) {
  std::vector<Graph> out;
  out.reserve(forms.size());
  for (const auto& form : forms) out.push_back(parse_graph6(form));
  return out;
}

}  // namespace

std::string to_string(GraphClass c) { return c == GraphClass::kTree ? "tree" : "unicyclic"; }

CeilingError::CeilingError(int n, int ceiling)
    : std::out_of_range("n = " + std::to_string(n) + " exceeds the enumeration ceiling " + std::to_string(ceiling)),
      ceiling_(ceiling) {}

std::vector<Graph> all_trees(int n, const EnumerationLimits& limits) {
  if (n > limits.tree_ceiling) throw CeilingError(n, limits.tree_ceiling);
  if (n < 1) throw std::invalid_argument("tree order must be >= 1");
  std::vector<Graph> level{make_graph(1, {})};
  for (int k = 2; k <= n; ++k) {
    std::set<std::string> seen;
    for (const Graph& t : level) {
      for (Vertex v = 0; v < t.order(); ++v) seen.insert(canonical_form_tree(attach_path(t, v, 1)));
    }
    level = from_canonical(seen);
  }
  return level;
}

std::vector<Graph> all_unicyclic(int n, const EnumerationLimits& limits) {
  if (n > limits.unicyclic_ceiling) throw CeilingError(n, limits.unicyclic_ceiling);
  if (n < 3) throw std::invalid_argument("unicyclic order must be >= 3");
  const int ceiling = std::max(limits.unicyclic_ceiling, n);
  std::set<std::string> seen;
  for (const Graph& t : all_trees(n, {std::max(limits.tree_ceiling, n), limits.unicyclic_ceiling})) {
    auto edges = t.edges();
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (t.has_edge(u, v)) continue;
        edges.emplace_back(u, v);
        seen.insert(canonical_form_search(make_graph(n, edges), ceiling));
        edges.pop_back();
      }
    }
  }
  return from_canonical(seen);
}

std::vector<Graph> enumerate_class(GraphClass cls, int n, const EnumerationLimits& limits) {
  return cls == GraphClass::kTree ? all_trees(n, limits) : all_unicyclic(n, limits);
}

std::vector<Graph> filter_max_degree(const std::vector<Graph>& graphs, int delta) {
  std::vector<Graph> out;
  for (const Graph& g : graphs) {
    if (g.max_degree() == delta) out.push_back(g);
  }
  return out;
}

}  // namespace gsc
