#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsc/graph.hpp"

namespace gsc {

/// Parameters outside a family's or formula's valid range.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class Regime { kHighDelta, kLowDelta };

std::string to_string(Regime r);

/// Tree split: high iff 2*delta >= n, low iff 2*delta <= n - 1.
Regime tree_regime(int n, int delta);
/// Unicyclic split: high iff 2*delta >= n + 2, low iff 2*delta <= n + 1.
Regime unicyclic_regime(int n, int delta);

Graph path_graph(int n);
Graph cycle_graph(int n);

/// Center 0 of degree delta carrying 2*delta + 1 - n pendants and
/// n - delta - 1 paths of length two. Needs n >= 3 and n/2 <= delta <= n-1.
Graph tree_T(int n, int delta);

/// Triangle {0, 1, 2}; vertex 0 carries 2*delta - n - 1 pendants and
/// n - delta - 1 paths of length two. Needs n >= 4 and
/// (n+2)/2 <= delta <= n-1.
Graph unicyclic_U(int n, int delta);

/// Center 0 with one path per leg; every leg >= 2 and at least three legs.
Graph spider_tree(std::vector<int> legs);

/// Cycle 0..cycle_len-1 with every leg (>= 2) hung off vertex 0.
Graph cycle_with_paths(int cycle_len, std::vector<int> legs);

/// Closed-form maximum of chi_alpha over trees with n vertices and maximum
/// degree delta, 2 <= delta <= n-1.
double tree_bound(int n, int delta, double alpha);

/// Closed-form maximum of chi_alpha over unicyclic graphs with n vertices and
/// maximum degree delta, 2 <= delta <= n-1.
double unicyclic_bound(int n, int delta, double alpha);

/// Second largest chi_alpha over unicyclic graphs on n >= 5 vertices:
/// (n-4) 4^a + 3 * 5^a + 3^a. For n = 4 use chi_alpha(unicyclic_U(4, 3)).
double second_max_unicyclic_value(int n, double alpha);

/// Partitions of `total` into exactly `parts` parts, each >= `min_part`,
/// listed in nondecreasing order.
std::vector<std::vector<int>> partitions(int total, int parts, int min_part);

enum class FamilyKind { kPath, kCycle, kTStar, kUStar, kSpider, kCycleWithPaths };

struct FamilySpec {
  FamilyKind kind = FamilyKind::kPath;
  int n = 0;
  int delta = 0;                  // ignored for kPath / kCycle
  std::optional<int> cycle_len;   // kCycleWithPaths only
  std::optional<std::vector<int>> legs;  // kSpider / kCycleWithPaths; any legs if empty

  static FamilySpec path(int n) { return {FamilyKind::kPath, n, 2, {}, {}}; }
  static FamilySpec cycle(int n) { return {FamilyKind::kCycle, n, 2, {}, {}}; }
  static FamilySpec t_star(int n, int delta) { return {FamilyKind::kTStar, n, delta, {}, {}}; }
  static FamilySpec u_star(int n, int delta) { return {FamilyKind::kUStar, n, delta, {}, {}}; }
  static FamilySpec spider(int n, int delta) { return {FamilyKind::kSpider, n, delta, {}, {}}; }
  static FamilySpec cycle_with_paths(int n, int delta, std::optional<int> cycle_len = {}) {
    return {FamilyKind::kCycleWithPaths, n, delta, cycle_len, {}};
  }
};

std::string describe(const FamilySpec& spec);

/// Every member of the family, one per isomorphism class. Throws DomainError
/// when the parameters leave the family undefined.
std::vector<Graph> family_members(const FamilySpec& spec);

/// Isomorphism-robust membership test.
bool is_member(const Graph& g, const FamilySpec& spec);

}  // namespace gsc
