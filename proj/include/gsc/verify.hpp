#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gsc/enumerate.hpp"
#include "gsc/families.hpp"
#include "gsc/graph.hpp"

namespace gsc {

/// Relative tolerance for treating two chi values as tied, and for
/// comparing a brute-force maximum against its closed form.
inline constexpr double kTieTolerance = 1e-9;
/// Relative tolerance for the overall unicyclic maximum against n 4^alpha.
inline constexpr double kExactValueTolerance = 1e-12;

enum class ReportStatus { kPass, kFail, kRefused, kEmpty };

std::string to_string(ReportStatus s);

/// Outcome of certifying one (theorem, n, delta, alpha) cell.
///
/// Theorems: 1 = trees with maximum degree delta, 2 = unicyclic graphs with
/// maximum degree delta, 3 = all unicyclic graphs (first and second maximum).
struct VerificationReport {
  int theorem = 1;
  int n = 0;
  std::optional<int> delta;  // empty means "all" (theorem 3)
  double alpha = 0.0;
  GraphClass graph_class = GraphClass::kTree;
  ReportStatus status = ReportStatus::kRefused;
  std::string note;  // refusal or failure reason
  std::optional<Regime> regime;

  double brute_max = 0.0;
  double bound = 0.0;
  double relative_gap = 0.0;
  std::vector<std::string> extremal_set;  // canonical forms attaining brute_max
  std::vector<std::string> expected_set;  // canonical forms of the predicted family
  bool bound_ok = false;
  bool characterization_ok = false;
  std::size_t graph_count = 0;

  // Degree-two neighbors of the maximum-degree vertex on each extremal
  // witness (off-cycle ones for unicyclic graphs); empty when delta == 2.
  std::vector<int> k_values;
  std::optional<int> k_expected;
  bool k_ok = true;

  // Theorem 3 only.
  std::optional<double> second_max;
  std::optional<double> second_bound;
  std::vector<std::string> second_extremal_set;
  std::vector<std::string> second_expected_set;

  std::vector<std::string> witnesses;  // graph6 of graphs behind a failure
  double runtime_ms = 0.0;

  bool passed() const { return status == ReportStatus::kPass; }
};

/// Enumerations shared by several cells, keyed by (class, n).
class EnumerationCache {
 public:
  explicit EnumerationCache(EnumerationLimits limits = {}) : limits_(limits) {}
  const std::vector<Graph>& get(GraphClass cls, int n);
  const EnumerationLimits& limits() const { return limits_; }

 private:
  EnumerationLimits limits_;
  std::map<std::pair<GraphClass, int>, std::vector<Graph>> cache_;
};

/// Trees: alpha must lie in [alpha1, 0), otherwise the report is a refusal.
VerificationReport verify_theorem1(int n, int delta, double alpha, const std::vector<Graph>& trees);
VerificationReport verify_theorem1(int n, int delta, double alpha);

/// Unicyclic graphs with given maximum degree: alpha in [-1, 0).
VerificationReport verify_theorem2(int n, int delta, double alpha, const std::vector<Graph>& unicyclic);
VerificationReport verify_theorem2(int n, int delta, double alpha);

/// All unicyclic graphs on n >= 4 vertices: alpha in [-1, 0).
VerificationReport verify_theorem3(int n, double alpha, const std::vector<Graph>& unicyclic);
VerificationReport verify_theorem3(int n, double alpha);

struct GridRequest {
  int theorem = 1;
  int n_min = 4;
  int n_max = 4;
  std::optional<int> delta;  // every delta in [2, n-1] when empty
  std::vector<double> alphas;
  int workers = 1;
  EnumerationLimits limits;
};

struct GridSummary {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t refused = 0;  // includes empty cells
};

/// Runs every cell of the grid in (n, delta, alpha) order. Cells are
/// independent and spread over `workers` threads; the output order does not
/// depend on the worker count.
std::vector<VerificationReport> verify_grid(const GridRequest& request);

GridSummary summarize(const std::vector<VerificationReport>& reports);

/// Default alpha samples for each theorem.
std::vector<double> default_alphas(int theorem);

// ---- persistence -----------------------------------------------------------

/// Shortest decimal text with at most 15 significant digits, '.' separator.
std::string format_number(double x);

/// One JSON object per line. runtime_ms is emitted only on request, so
/// default output is byte-identical across runs.
void write_jsonl(std::ostream& out, const std::vector<VerificationReport>& reports, bool include_runtime = false);

/// Columns: n, delta, alpha, class, brute_max, bound, gap, n_extremal,
/// characterization_ok. Refused rows leave the numeric columns empty.
void write_csv(std::ostream& out, const std::vector<VerificationReport>& reports);

void write_table(std::ostream& out, const std::vector<VerificationReport>& reports);

}  // namespace gsc
