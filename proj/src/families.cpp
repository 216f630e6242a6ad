#include "gsc/families.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "gsc/canonical.hpp"

namespace gsc {
namespace {

std::string range_text(int lo, int hi) { return "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]"; }

// Center 0, then each leg laid out as a consecutive run of vertex indices.
std::vector<Edge> legs_at_zero(int first_free, const std::vector<int>& legs, int* next_free) {
  std::vector<Edge> edges;
  int next = first_free;
  for (int len : legs) {
    edges.emplace_back(0, next);
    for (int i = 1; i < len; ++i) edges.emplace_back(next + i - 1, next + i);
    next += len;
  }
  *next_free = next;
  return edges;
}

std::vector<int> leg_lengths(const Graph& g, Vertex center, const std::vector<bool>& skip) {
  std::vector<int> legs;
  for (Vertex start : g.neighbors(center)) {
    if (skip[start]) continue;
    int len = 1;
    Vertex prev = center;
    Vertex cur = start;
    while (g.degree(cur) == 2) {
      Vertex next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
      prev = cur;
      cur = next;
      ++len;
    }
    legs.push_back(len);
  }
  std::sort(legs.begin(), legs.end());
  return legs;
}

std::vector<Vertex> high_degree_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) >= 3) out.push_back(v);
  }
  return out;
}

double pw(double base, double alpha) { return std::pow(base, alpha); }

}  // namespace

std::string to_string(Regime r) { return r == Regime::kHighDelta ? "high" : "low"; }

Regime tree_regime(int n, int delta) {
  if (delta < 2 || delta > n - 1) throw DomainError("tree max degree must lie in " + range_text(2, n - 1));
  return 2 * delta >= n ? Regime::kHighDelta : Regime::kLowDelta;
}

Regime unicyclic_regime(int n, int delta) {
  if (n < 3 || delta < 2 || delta > n - 1) {
    throw DomainError("unicyclic max degree must lie in " + range_text(2, n - 1) + " with n >= 3");
  }
  return 2 * delta >= n + 2 ? Regime::kHighDelta : Regime::kLowDelta;
}

Graph path_graph(int n) {
  if (n < 1) throw DomainError("path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i - 1, i);
  return make_graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw DomainError("cycle needs n >= 3, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return make_graph(n, edges);
}

Graph tree_T(int n, int delta) {
  if (n < 3) throw DomainError("T(n, delta) needs n >= 3");
  const int lo = (n + 1) / 2;
  if (delta < lo || delta > n - 1) {
    throw DomainError("T(" + std::to_string(n) + ", delta) needs delta in " + range_text(lo, n - 1) + ", got " +
                      std::to_string(delta));
  }
  std::vector<int> legs(static_cast<std::size_t>(2 * delta + 1 - n), 1);
  legs.insert(legs.end(), static_cast<std::size_t>(n - delta - 1), 2);
  int next = 0;
  auto edges = legs_at_zero(1, legs, &next);
  return make_graph(n, edges);
}

Graph unicyclic_U(int n, int delta) {
  if (n < 4) throw DomainError("U(n, delta) needs n >= 4");
  const int lo = (n + 3) / 2;
  if (delta < lo || delta > n - 1) {
    throw DomainError("U(" + std::to_string(n) + ", delta) needs delta in " + range_text(lo, n - 1) + ", got " +
                      std::to_string(delta));
  }
  std::vector<int> legs(static_cast<std::size_t>(2 * delta - n - 1), 1);
  legs.insert(legs.end(), static_cast<std::size_t>(n - delta - 1), 2);
  int next = 0;
  auto edges = legs_at_zero(3, legs, &next);
  edges.insert(edges.begin(), {{0, 1}, {1, 2}, {2, 0}});
  return make_graph(n, edges);
}

Graph spider_tree(std::vector<int> legs) {
  if (legs.size() < 3) throw DomainError("spider needs at least 3 legs, got " + std::to_string(legs.size()));
  for (int len : legs) {
    if (len < 2) throw DomainError("spider legs must have length >= 2, got " + std::to_string(len));
  }
  std::sort(legs.begin(), legs.end());
  int next = 0;
  auto edges = legs_at_zero(1, legs, &next);
  return make_graph(next, edges);
}

Graph cycle_with_paths(int cycle_len, std::vector<int> legs) {
  if (cycle_len < 3) throw DomainError("cycle length must be >= 3, got " + std::to_string(cycle_len));
  if (legs.empty()) throw DomainError("cycle_with_paths needs at least one leg; use cycle_graph");
  for (int len : legs) {
    if (len < 2) throw DomainError("attached paths must have length >= 2, got " + std::to_string(len));
  }
  std::sort(legs.begin(), legs.end());
  int next = 0;
  auto edges = legs_at_zero(cycle_len, legs, &next);
  for (int i = 0; i < cycle_len; ++i) edges.emplace_back(i, (i + 1) % cycle_len);
  return make_graph(next, edges);
}

double tree_bound(int n, int delta, double alpha) {
  const double d = delta;
  if (tree_regime(n, delta) == Regime::kHighDelta) {
    return (pw(d + 2, alpha) - pw(d + 1, alpha) + pw(3, alpha)) * (n - delta - 1) + d * pw(d + 1, alpha);
  }
  return (pw(d + 2, alpha) + pw(3, alpha) - pw(4, alpha)) * d + (n - delta - 1) * pw(4, alpha);
}

double unicyclic_bound(int n, int delta, double alpha) {
  const double d = delta;
  if (unicyclic_regime(n, delta) == Regime::kHighDelta) {
    return (n - delta - 1) * pw(3, alpha) + (n - delta + 1) * pw(d + 2, alpha) +
           (2 * delta - n - 1) * pw(d + 1, alpha) + pw(4, alpha);
  }
  return (delta - 2) * pw(3, alpha) + d * pw(d + 2, alpha) + (n - 2 * delta + 2) * pw(4, alpha);
}

double second_max_unicyclic_value(int n, double alpha) {
  if (n < 5) {
    throw DomainError("second maximum formula needs n >= 5; for n = 4 the second maximum is chi_alpha(U(4, 3))");
  }
  return (n - 4) * pw(4, alpha) + 3 * pw(5, alpha) + pw(3, alpha);
}

std::vector<std::vector<int>> partitions(int total, int parts, int min_part) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int, int, int)> rec = [&](int remaining, int slots, int lo) {
    if (slots == 0) {
      if (remaining == 0) out.push_back(current);
      return;
    }
    for (int p = lo; p * slots <= remaining; ++p) {
      current.push_back(p);
      rec(remaining - p, slots - 1, p);
      current.pop_back();
    }
  };
  if (parts >= 0) rec(total, parts, std::max(min_part, 1));
  return out;
}

std::string describe(const FamilySpec& spec) {
  const std::string n = std::to_string(spec.n);
  const std::string d = std::to_string(spec.delta);
  switch (spec.kind) {
    case FamilyKind::kPath:
      return "P_" + n;
    case FamilyKind::kCycle:
      return "C_" + n;
    case FamilyKind::kTStar:
      return "T_{" + n + "," + d + "}";
    case FamilyKind::kUStar:
      return "U_{" + n + "," + d + "}";
    case FamilyKind::kSpider:
      return "spider(n=" + n + ", " + d + " legs >= 2)";
    case FamilyKind::kCycleWithPaths:
      return "cycle" + (spec.cycle_len ? "(len " + std::to_string(*spec.cycle_len) + ")" : std::string()) +
             " with " + std::to_string(spec.delta - 2) + " paths >= 2 at one vertex (n=" + n + ")";
  }
  return "?";
}

std::vector<Graph> family_members(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::kPath:
      return {path_graph(spec.n)};
    case FamilyKind::kCycle:
      return {cycle_graph(spec.n)};
    case FamilyKind::kTStar:
      return {tree_T(spec.n, spec.delta)};
    case FamilyKind::kUStar:
      return {unicyclic_U(spec.n, spec.delta)};
    case FamilyKind::kSpider: {
      if (spec.delta < 3) throw DomainError("spider family needs delta >= 3");
      if (spec.legs) return {spider_tree(*spec.legs)};
      std::vector<Graph> out;
      for (auto& legs : partitions(spec.n - 1, spec.delta, 2)) out.push_back(spider_tree(legs));
      return out;
    }
    case FamilyKind::kCycleWithPaths: {
      if (spec.delta < 3) throw DomainError("cycle-with-paths family needs delta >= 3");
      if (spec.legs) return {cycle_with_paths(spec.cycle_len.value_or(spec.n - std::accumulate(spec.legs->begin(), spec.legs->end(), 0)), *spec.legs)};
      std::vector<Graph> out;
      const int legs = spec.delta - 2;
      for (int len = 3; len + 2 * legs <= spec.n; ++len) {
        if (spec.cycle_len && *spec.cycle_len != len) continue;
        for (auto& part : partitions(spec.n - len, legs, 2)) out.push_back(cycle_with_paths(len, part));
      }
      return out;
    }
  }
  return {};
}

bool is_member(const Graph& g, const FamilySpec& spec) {
  if (g.order() != spec.n) return false;
  switch (spec.kind) {
    case FamilyKind::kPath:
      return classify(g).tag == StructureTag::kTree && g.max_degree() <= 2;
    case FamilyKind::kCycle:
      return classify(g).tag == StructureTag::kUnicyclic && g.max_degree() == 2;
    case FamilyKind::kTStar:
    case FamilyKind::kUStar:
      try {
        return is_isomorphic(g, family_members(spec).front());
      } catch (const DomainError&) {
        return false;
      }
    case FamilyKind::kSpider: {
      if (classify(g).tag != StructureTag::kTree) return false;
      auto hubs = high_degree_vertices(g);
      if (hubs.size() != 1 || g.degree(hubs[0]) != spec.delta) return false;
      const Vertex center = hubs[0];
      for (Vertex w : g.neighbors(center)) {
        if (g.degree(w) != 2) return false;
      }
      if (!spec.legs) return true;
      auto want = *spec.legs;
      std::sort(want.begin(), want.end());
      return leg_lengths(g, center, std::vector<bool>(g.order(), false)) == want;
    }
    case FamilyKind::kCycleWithPaths: {
      auto sc = classify(g);
      if (sc.tag != StructureTag::kUnicyclic) return false;
      if (spec.cycle_len && static_cast<int>(sc.cycle.size()) != *spec.cycle_len) return false;
      auto hubs = high_degree_vertices(g);
      if (hubs.size() != 1 || g.degree(hubs[0]) != spec.delta) return false;
      const Vertex center = hubs[0];
      std::vector<bool> on_cycle(g.order(), false);
      for (Vertex v : sc.cycle) on_cycle[v] = true;
      if (!on_cycle[center]) return false;
      for (Vertex w : g.neighbors(center)) {
        if (!on_cycle[w] && g.degree(w) != 2) return false;
      }
      if (!spec.legs) return true;
      auto want = *spec.legs;
      std::sort(want.begin(), want.end());
      return leg_lengths(g, center, on_cycle) == want;
    }
  }
  return false;
}

}  // namespace gsc
