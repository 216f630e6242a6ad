#include "gsc/indices.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gsc {
namespace {

void require_finite(double alpha) {
  if (!std::isfinite(alpha)) throw std::domain_error("index exponent must be finite");
}

double sorted_power_sum(std::vector<int> bases, double alpha) {
  std::sort(bases.begin(), bases.end());
  double total = 0.0;
  for (int s : bases) total += std::pow(static_cast<double>(s), alpha);
  return total;
}

}  // namespace

EdgeWeightProfile edge_weight_profile(const Graph& g) {
  EdgeWeightProfile profile;
  profile.entries.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) profile.entries.push_back(g.degree(u) + g.degree(v));
  std::sort(profile.entries.begin(), profile.entries.end());
  return profile;
}

double chi_alpha(const EdgeWeightProfile& profile, double alpha) {
  require_finite(alpha);
  return sorted_power_sum(profile.entries, alpha);
}

double chi_alpha(const Graph& g, double alpha) { return chi_alpha(edge_weight_profile(g), alpha); }

double sum_connectivity(const Graph& g) { return chi_alpha(g, -0.5); }

double randic_alpha(const Graph& g, double alpha) {
  require_finite(alpha);
  std::vector<int> products;
  products.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) products.push_back(g.degree(u) * g.degree(v));
  return sorted_power_sum(std::move(products), alpha);
}

}  // namespace gsc
