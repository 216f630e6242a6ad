#include "gsc/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <set>
#include <thread>

#include "gsc/canonical.hpp"
#include "gsc/indices.hpp"
#include "gsc/numerics.hpp"

namespace gsc {
namespace {

using Clock = std::chrono::steady_clock;

bool close(double a, double b, double rel) { return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b)); }

std::vector<std::string> canonical_set(const std::vector<Graph>& graphs) {
  std::set<std::string> forms;
  for (const Graph& g : graphs) forms.insert(canonical_form(g));
  return {forms.begin(), forms.end()};
}

// Records the symmetric difference of two sorted sets as witnesses.
void add_set_witnesses(const std::vector<std::string>& got, const std::vector<std::string>& want,
                       std::vector<std::string>& witnesses) {
  std::set_symmetric_difference(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(witnesses));
}

VerificationReport refused(int theorem, int n, std::optional<int> delta, double alpha, GraphClass cls,
                           std::string why) {
  VerificationReport r;
  r.theorem = theorem;
  r.n = n;
  r.delta = delta;
  r.alpha = alpha;
  r.graph_class = cls;
  r.status = ReportStatus::kRefused;
  r.note = std::move(why);
  return r;
}

std::optional<std::string> alpha_claim_violation(int theorem, double alpha) {
  if (!std::isfinite(alpha) || alpha >= 0.0) return "alpha must be negative";
  if (theorem == 1) {
    if (alpha < numerics::alpha1_value()) {
      return "alpha below alpha1 = " + format_number(numerics::alpha1_value()) + "; tree bound not claimed there";
    }
  } else if (alpha < -1.0) {
    return "alpha below -1; unicyclic bound not claimed there";
  }
  return std::nullopt;
}

// Degree-two neighbors of the unique maximum-degree vertex, optionally
// ignoring cycle vertices. Returns -1 when the maximum degree is shared.
int count_k(const Graph& g, bool off_cycle_only) {
  const int delta = g.max_degree();
  Vertex center = -1;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == delta) {
      if (center >= 0) return -1;
      center = v;
    }
  }
  std::vector<bool> skip(g.order(), false);
  if (off_cycle_only) {
    for (Vertex v : classify(g).cycle) skip[v] = true;
  }
  int k = 0;
  for (Vertex w : g.neighbors(center)) {
    if (!skip[w] && g.degree(w) == 2) ++k;
  }
  return k;
}

// Shared body of the fixed maximum-degree certifications.
VerificationReport certify_fixed_degree(int theorem, int n, int delta, double alpha, const std::vector<Graph>& universe,
                                        GraphClass cls) {
  const auto start = Clock::now();
  if (auto why = alpha_claim_violation(theorem, alpha)) return refused(theorem, n, delta, alpha, cls, *why);
  if (delta < 2 || delta > n - 1) {
    return refused(theorem, n, delta, alpha, cls, "delta outside [2, n-1]");
  }

  VerificationReport r;
  r.theorem = theorem;
  r.n = n;
  r.delta = delta;
  r.alpha = alpha;
  r.graph_class = cls;

  const bool trees = cls == GraphClass::kTree;
  r.regime = trees ? tree_regime(n, delta) : unicyclic_regime(n, delta);
  r.bound = trees ? tree_bound(n, delta, alpha) : unicyclic_bound(n, delta, alpha);

  std::vector<Graph> candidates = filter_max_degree(universe, delta);
  r.graph_count = candidates.size();
  if (candidates.empty()) {
    r.status = ReportStatus::kEmpty;
    r.note = "no graph in the class has this maximum degree";
    return r;
  }

  std::vector<double> values;
  values.reserve(candidates.size());
  for (const Graph& g : candidates) values.push_back(chi_alpha(g, alpha));
  r.brute_max = *std::max_element(values.begin(), values.end());
  r.relative_gap = (r.bound - r.brute_max) / std::abs(r.bound);

  r.bound_ok = true;
  std::vector<Graph> extremal;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (values[i] > r.bound + kTieTolerance * std::abs(r.bound)) {
      r.bound_ok = false;
      r.witnesses.push_back(canonical_form(candidates[i]));
    }
    if (close(values[i], r.brute_max, kTieTolerance)) extremal.push_back(candidates[i]);
  }
  r.extremal_set = canonical_set(extremal);

  FamilySpec family;
  if (delta == 2) {
    family = trees ? FamilySpec::path(n) : FamilySpec::cycle(n);
  } else if (*r.regime == Regime::kHighDelta) {
    family = trees ? FamilySpec::t_star(n, delta) : FamilySpec::u_star(n, delta);
    r.k_expected = n - delta - 1;
  } else {
    family = trees ? FamilySpec::spider(n, delta) : FamilySpec::cycle_with_paths(n, delta);
    r.k_expected = trees ? delta : delta - 2;
  }
  r.expected_set = canonical_set(family_members(family));
  r.characterization_ok = r.extremal_set == r.expected_set;
  if (!r.characterization_ok) add_set_witnesses(r.extremal_set, r.expected_set, r.witnesses);

  if (r.k_expected) {
    for (const Graph& g : extremal) {
      const int k = count_k(g, !trees);
      r.k_values.push_back(k);
      if (k != *r.k_expected) r.k_ok = false;
    }
  }

  const bool matches = close(r.brute_max, r.bound, kTieTolerance);
  r.status = r.bound_ok && matches && r.characterization_ok && r.k_ok ? ReportStatus::kPass : ReportStatus::kFail;
  if (!r.bound_ok) {
    r.note = "bound exceeded";
  } else if (!matches) {
    r.note = "maximum does not reach the bound";
  } else if (!r.characterization_ok) {
    r.note = "extremal set differs from the predicted family";
  } else if (!r.k_ok) {
    r.note = "degree-two neighbor count differs on an extremal graph";
  }
  r.runtime_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return r;
}

}  // namespace

std::string to_string(ReportStatus s) {
  switch (s) {
    case ReportStatus::kPass:
      return "pass";
    case ReportStatus::kFail:
      return "fail";
    case ReportStatus::kRefused:
      return "refused";
    case ReportStatus::kEmpty:
      return "empty";
  }
  return "?";
}

const std::vector<Graph>& EnumerationCache::get(GraphClass cls, int n) {
  auto key = std::pair(cls, n);
  auto it = cache_.find(key);
  if (it == cache_.end()) it = cache_.emplace(key, enumerate_class(cls, n, limits_)).first;
  return it->second;
}

VerificationReport verify_theorem1(int n, int delta, double alpha, const std::vector<Graph>& trees) {
  return certify_fixed_degree(1, n, delta, alpha, trees, GraphClass::kTree);
}

VerificationReport verify_theorem1(int n, int delta, double alpha) {
  if (alpha_claim_violation(1, alpha)) return verify_theorem1(n, delta, alpha, {});
  return verify_theorem1(n, delta, alpha, all_trees(n));
}

VerificationReport verify_theorem2(int n, int delta, double alpha, const std::vector<Graph>& unicyclic) {
  return certify_fixed_degree(2, n, delta, alpha, unicyclic, GraphClass::kUnicyclic);
}

VerificationReport verify_theorem2(int n, int delta, double alpha) {
  if (alpha_claim_violation(2, alpha)) return verify_theorem2(n, delta, alpha, {});
  return verify_theorem2(n, delta, alpha, all_unicyclic(n));
}

VerificationReport verify_theorem3(int n, double alpha, const std::vector<Graph>& unicyclic) {
  const auto start = Clock::now();
  if (n < 4) throw DomainError("overall unicyclic ranking needs n >= 4");
  if (auto why = alpha_claim_violation(3, alpha)) {
    return refused(3, n, std::nullopt, alpha, GraphClass::kUnicyclic, *why);
  }

  VerificationReport r;
  r.theorem = 3;
  r.n = n;
  r.alpha = alpha;
  r.graph_class = GraphClass::kUnicyclic;
  r.graph_count = unicyclic.size();
  if (unicyclic.empty()) {
    r.status = ReportStatus::kEmpty;
    r.note = "no unicyclic graphs supplied";
    return r;
  }

  std::vector<double> values;
  for (const Graph& g : unicyclic) values.push_back(chi_alpha(g, alpha));
  r.brute_max = *std::max_element(values.begin(), values.end());
  r.bound = n * std::pow(4.0, alpha);
  r.relative_gap = (r.bound - r.brute_max) / std::abs(r.bound);
  r.bound_ok = true;

  std::vector<Graph> top;
  std::vector<Graph> rest;
  std::vector<double> rest_values;
  for (std::size_t i = 0; i < unicyclic.size(); ++i) {
    if (values[i] > r.bound + kTieTolerance * std::abs(r.bound)) {
      r.bound_ok = false;
      r.witnesses.push_back(canonical_form(unicyclic[i]));
    }
    if (close(values[i], r.brute_max, kTieTolerance)) {
      top.push_back(unicyclic[i]);
    } else {
      rest.push_back(unicyclic[i]);
      rest_values.push_back(values[i]);
    }
  }
  r.extremal_set = canonical_set(top);
  r.expected_set = canonical_set({cycle_graph(n)});

  std::vector<Graph> second_expected;
  if (n == 4) {
    second_expected.push_back(unicyclic_U(4, 3));
    r.second_bound = 2 * std::pow(4.0, alpha) + 2 * std::pow(5.0, alpha);
  } else {
    for (int len = 3; len <= n - 2; ++len) second_expected.push_back(cycle_with_paths(len, {n - len}));
    r.second_bound = second_max_unicyclic_value(n, alpha);
  }
  r.second_expected_set = canonical_set(second_expected);

  bool second_ok = false;
  if (!rest.empty()) {
    r.second_max = *std::max_element(rest_values.begin(), rest_values.end());
    std::vector<Graph> second;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (close(rest_values[i], *r.second_max, kTieTolerance)) second.push_back(rest[i]);
    }
    r.second_extremal_set = canonical_set(second);
    const bool gap_ok = r.brute_max - *r.second_max > kTieTolerance * std::abs(r.brute_max);
    second_ok = gap_ok && close(*r.second_max, *r.second_bound, kExactValueTolerance) &&
                r.second_extremal_set == r.second_expected_set;
    if (r.second_extremal_set != r.second_expected_set) {
      add_set_witnesses(r.second_extremal_set, r.second_expected_set, r.witnesses);
    }
  }

  const bool top_ok = close(r.brute_max, r.bound, kExactValueTolerance) && r.extremal_set == r.expected_set;
  if (r.extremal_set != r.expected_set) add_set_witnesses(r.extremal_set, r.expected_set, r.witnesses);
  r.characterization_ok = r.extremal_set == r.expected_set && r.second_extremal_set == r.second_expected_set;
  r.status = r.bound_ok && top_ok && second_ok ? ReportStatus::kPass : ReportStatus::kFail;
  if (!r.bound_ok) {
    r.note = "maximum exceeded";
  } else if (!top_ok) {
    r.note = "maximum or its extremal set differs from the cycle";
  } else if (!second_ok) {
    r.note = "second maximum differs from the predicted value or family";
  }
  r.runtime_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return r;
}

VerificationReport verify_theorem3(int n, double alpha) {
  if (n >= 4 && alpha_claim_violation(3, alpha)) return verify_theorem3(n, alpha, {});
  return verify_theorem3(n, alpha, all_unicyclic(n));
}

std::vector<double> default_alphas(int theorem) {
  if (theorem == 1) return {-1.7036, -1.7, -1.5, -1.0, -0.5, -0.1};
  return {-1.0, -0.75, -0.5, -0.25, -0.1};
}

std::vector<VerificationReport> verify_grid(const GridRequest& request) {
  if (request.theorem < 1 || request.theorem > 3) throw std::invalid_argument("theorem must be 1, 2 or 3");
  const GraphClass cls = request.theorem == 1 ? GraphClass::kTree : GraphClass::kUnicyclic;

  struct Cell {
    int n;
    std::optional<int> delta;
    double alpha;
  };
  std::vector<Cell> cells;
  for (int n = request.n_min; n <= request.n_max; ++n) {
    if (request.theorem == 3) {
      for (double a : request.alphas) cells.push_back({n, std::nullopt, a});
      continue;
    }
    std::vector<int> deltas;
    if (request.delta) {
      deltas.push_back(*request.delta);
    } else {
      for (int d = 2; d <= n - 1; ++d) deltas.push_back(d);
    }
    for (int d : deltas) {
      for (double a : request.alphas) cells.push_back({n, d, a});
    }
  }

  // Enumerate up front, only for orders that have at least one in-claim cell.
  EnumerationCache cache(request.limits);
  std::vector<std::string> setup_error(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const Cell& c = cells[i];
    const int min_n = request.theorem == 1 ? 3 : 4;
    if (c.n < min_n) {
      setup_error[i] = "n below " + std::to_string(min_n);
      continue;
    }
    if (alpha_claim_violation(request.theorem, c.alpha)) continue;
    try {
      cache.get(cls, c.n);
    } catch (const std::exception& e) {
      setup_error[i] = e.what();
    }
  }

  std::vector<VerificationReport> reports(cells.size());
  auto run_cell = [&](std::size_t i) {
    const Cell& c = cells[i];
    if (!setup_error[i].empty()) {
      reports[i] = refused(request.theorem, c.n, c.delta, c.alpha, cls, setup_error[i]);
      return;
    }
    static const std::vector<Graph> kNone;
    const bool in_claim = !alpha_claim_violation(request.theorem, c.alpha);
    const std::vector<Graph>& universe = in_claim ? cache.get(cls, c.n) : kNone;
    switch (request.theorem) {
      case 1:
        reports[i] = verify_theorem1(c.n, *c.delta, c.alpha, universe);
        break;
      case 2:
        reports[i] = verify_theorem2(c.n, *c.delta, c.alpha, universe);
        break;
      default:
        reports[i] = verify_theorem3(c.n, c.alpha, universe);
        break;
    }
  };

  const int workers = std::max(1, request.workers);
  if (workers == 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) run_cell(i);
    return reports;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < cells.size(); i = next++) run_cell(i);
    });
  }
  for (auto& t : pool) t.join();
  return reports;
}

GridSummary summarize(const std::vector<VerificationReport>& reports) {
  GridSummary s;
  for (const auto& r : reports) {
    switch (r.status) {
      case ReportStatus::kPass:
        ++s.passed;
        break;
      case ReportStatus::kFail:
        ++s.failed;
        break;
      default:
        ++s.refused;
        break;
    }
  }
  return s;
}

}  // namespace gsc
