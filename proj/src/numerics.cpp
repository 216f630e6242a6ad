#include "gsc/numerics.hpp"

#include <cmath>
#include <string>

namespace gsc::numerics {

double alpha1_residual(double alpha) {
  const double p3 = std::pow(3.0, alpha);
  const double p4 = std::pow(4.0, alpha);
  const double p5 = std::pow(5.0, alpha);
  return (p3 - p4) / (p4 - p5) - 2.0;
}

RootResult alpha1(double tolerance) {
  if (!(tolerance > 0.0)) throw std::invalid_argument("alpha1 tolerance must be positive");
  double lo = -2.5;
  double hi = -1.0;
  double f_lo = alpha1_residual(lo);
  const double f_hi = alpha1_residual(hi);
  if (std::signbit(f_lo) == std::signbit(f_hi)) {
    throw std::runtime_error("alpha1: residual has no sign change on [-2.5, -1]");
  }
  RootResult out;
  double mid = 0.5 * (lo + hi);
  double f_mid = alpha1_residual(mid);
  // Stop when both criteria hold or the bracket cannot shrink any further.
  while ((hi - lo > tolerance || std::abs(f_mid) > tolerance) && out.iterations < 200) {
    if (std::signbit(f_mid) == std::signbit(f_lo)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
    ++out.iterations;
    const double next = 0.5 * (lo + hi);
    if (next == lo || next == hi) break;
    mid = next;
    f_mid = alpha1_residual(mid);
  }
  out.value = mid;
  out.bracket = {lo, hi};
  out.residual = f_mid;
  return out;
}

double alpha1_value() {
  static const double value = alpha1(1e-12).value;
  return value;
}

double eta(double x) { return 2.0 * std::pow(4.0, x) - std::pow(3.0, x) - std::pow(6.0, x); }

double h_convex(double x) { return x / 2.0 + std::pow(0.75, x); }

double f_theorem3(double x, int n, double alpha) {
  if (x < 2.0) throw std::domain_error("f_theorem3 is defined for x >= 2");
  return (x - 2.0) * std::pow(3.0, alpha) + x * std::pow(x + 2.0, alpha) + (n - 2.0 * x + 2.0) * std::pow(4.0, alpha);
}

double g_theorem3(double x, double alpha) {
  return std::pow(x + 2.0, alpha) + alpha * x * std::pow(x + 2.0, alpha - 1.0);
}

double jensen_gap(double a, double b, double alpha) {
  if (!(a > 0.0) || !(b > 0.0)) throw std::domain_error("jensen_gap needs positive arguments");
  if (a == b) return 0.0;
  return std::pow(a, alpha) + std::pow(b, alpha) - 2.0 * std::pow(0.5 * (a + b), alpha);
}

bool monotone_check(MonotoneClaim claim, double alpha, std::span<const double> grid, int delta) {
  if (!(alpha < 0.0)) throw std::domain_error("monotonicity claims need alpha < 0");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) throw std::domain_error("grid must be strictly increasing");
  }
  double min_x = 0.0;
  bool increasing = false;
  auto fn = [&](double x) -> double {
    switch (claim) {
      case MonotoneClaim::kShiftDiffIncreasing:
        return std::pow(x + 2.0, alpha) - std::pow(x + 1.0, alpha);
      case MonotoneClaim::kRerouteDiffDecreasing:
        return std::pow(x + 2.0, alpha) - std::pow(x + 3.0, alpha);
      case MonotoneClaim::kRelocateDiffDecreasing:
        return std::pow(x + 3.0, alpha) - std::pow(x + delta, alpha);
      case MonotoneClaim::kGDecreasing:
        return g_theorem3(x, alpha);
    }
    return 0.0;
  };
  switch (claim) {
    case MonotoneClaim::kShiftDiffIncreasing:
      increasing = true;
      break;
    case MonotoneClaim::kRerouteDiffDecreasing:
      break;
    case MonotoneClaim::kRelocateDiffDecreasing:
      if (delta < 4) throw std::domain_error("relocation claim needs delta >= 4, got " + std::to_string(delta));
      break;
    case MonotoneClaim::kGDecreasing:
      if (alpha < -1.0) throw std::domain_error("g decreasing claim needs alpha >= -1");
      min_x = 2.0;
      break;
  }
  if (!grid.empty() && grid.front() < min_x) throw std::domain_error("grid starts below the claim's domain");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double prev = fn(grid[i - 1]);
    const double cur = fn(grid[i]);
    if (increasing ? !(cur > prev) : !(cur < prev)) return false;
  }
  return true;
}

std::vector<double> linear_grid(double lo, double hi, double step) {
  std::vector<double> out;
  for (int i = 0;; ++i) {
    const double x = lo + i * step;
    if (x > hi + 1e-12) break;
    out.push_back(x);
  }
  return out;
}

}  // namespace gsc::numerics
