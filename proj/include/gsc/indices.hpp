#pragma once

#include <vector>

#include "gsc/graph.hpp"

namespace gsc {

/// Multiset of endpoint-degree sums d(u) + d(v), one entry per edge, kept
/// sorted ascending.
struct EdgeWeightProfile {
  std::vector<int> entries;

  std::size_t size() const { return entries.size(); }
  friend bool operator==(const EdgeWeightProfile&, const EdgeWeightProfile&) = default;
};

EdgeWeightProfile edge_weight_profile(const Graph& g);

/// General sum-connectivity index: sum over edges of (d(u) + d(v))^alpha.
/// Summation runs over the sorted profile so results are reproducible.
/// Edgeless graphs give 0. Throws std::domain_error on non-finite alpha.
double chi_alpha(const Graph& g, double alpha);
double chi_alpha(const EdgeWeightProfile& profile, double alpha);

/// chi_alpha at alpha = -1/2.
double sum_connectivity(const Graph& g);

/// General Randic index: sum over edges of (d(u) * d(v))^alpha.
double randic_alpha(const Graph& g, double alpha);

}  // namespace gsc
