#pragma once

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gsc::numerics {

/// Result of a bracketing root search.
struct RootResult {
  double value = 0.0;
  std::pair<double, double> bracket;
  double residual = 0.0;
  int iterations = 0;
};

/// (3^a - 4^a) / (4^a - 5^a) - 2. Its unique negative root is the lower end
/// of the exponent range on which merging two pendant paths into one raises
/// chi_alpha.
double alpha1_residual(double alpha);

/// Bisection for the root of alpha1_residual on [-2.5, -1]. Stops once the
/// bracket is no wider than `tolerance` and |residual| <= tolerance.
/// Throws std::invalid_argument for tolerance <= 0.
RootResult alpha1(double tolerance = 1e-10);

/// alpha1(1e-12).value, computed once.
double alpha1_value();

/// 2 * 4^x - 3^x - 6^x; zero at -1 and 0, positive in between.
double eta(double x);

/// x/2 + (3/4)^x.
double h_convex(double x);

/// (x-2) 3^a + x (x+2)^a + (n - 2x + 2) 4^a, defined for x >= 2.
double f_theorem3(double x, int n, double alpha);

/// (x+2)^a + a x (x+2)^(a-1).
double g_theorem3(double x, double alpha);

/// a^alpha + b^alpha - 2 ((a+b)/2)^alpha. Positive for a != b when alpha < 0.
double jensen_gap(double a, double b, double alpha);

/// Monotonicity claims used by the extremal arguments.
enum class MonotoneClaim {
  kShiftDiffIncreasing,     // (x+2)^a - (x+1)^a increasing, a < 0
  kRerouteDiffDecreasing,   // (x+2)^a - (x+3)^a decreasing on x >= 0, a < 0
  kRelocateDiffDecreasing,  // (x+3)^a - (x+delta)^a decreasing on x >= 0, delta >= 4, a < 0
  kGDecreasing,             // g_theorem3 decreasing on x >= 2, -1 <= a < 0
};

/// True iff the claimed strict monotonicity holds between every adjacent
/// pair of grid points. Throws std::domain_error when alpha (or delta) lies
/// outside the claim's range, or the grid is not strictly increasing.
bool monotone_check(MonotoneClaim claim, double alpha, std::span<const double> grid, int delta = 4);

/// Evenly spaced grid lo, lo+step, ..., up to hi (inclusive within 1e-12).
std::vector<double> linear_grid(double lo, double hi, double step);

}  // namespace gsc::numerics
