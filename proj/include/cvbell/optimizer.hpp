#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "cvbell/bell.hpp"

namespace cvbell {

inline constexpr double kDefaultDisplacementCeiling = 5.0;
inline constexpr double kDefaultScaledCeiling = 3.0;

struct Extremum {
  double arg = 0.0;
  double value = 0.0;
};

struct OptimizationResult {
  double argmax = 0.0;
  double value = 0.0;
  std::pair<double, double> bracket{0.0, 0.0};
  std::size_t evaluations = 0;
  // Sorted by argument.
  std::vector<Extremum> local_maxima;
  // Only filled by optimize_phases.
  std::vector<double> phases;
  double cancellation_error = 0.0;
};

struct ScanOptions {
  // Log-spaced samples on [hi * floor_ratio, hi], plus the point 0.
  int scan_points = 600;
  double floor_ratio = 1e-12;
  // Golden-section refinement stops once the bracket is narrower than
  // min(absolute_tolerance, relative_tolerance * |x|).
  double absolute_tolerance = 1e-10;
  double relative_tolerance = 1e-9;
};

// Global coarse scan followed by golden-section refinement of every local
// maximum the scan exposes. The objective must be defined at 0 and safe to
// call concurrently. Local maxima agreeing within 1e-9 resolve to the
// smaller argument.
OptimizationResult maximize_scanned(const std::function<BellValue(double)>& objective, double hi,
                                    const ScanOptions& options = {});

// Max over J in (0, j_hi] of the standard-settings value at squeezing r.
OptimizationResult maximize_over_displacement(int n, double r,
                                              double j_hi = kDefaultDisplacementCeiling,
                                              const ScanOptions& options = {});

// Max over A in (0, a_hi] of the large-squeezing limit; a_hi >= 2.
OptimizationResult maximize_asymptotic(int n, double a_hi = kDefaultScaledCeiling,
                                       const ScanOptions& options = {});

// Row-major over (r, J): result[i * j_grid.size() + k] is at (r_grid[i], j_grid[k]).
std::vector<BellValue> scan_surface(int n, std::span<const double> r_grid,
                                    std::span<const double> j_grid);

struct PhaseOptions {
  int starts = 8;
  double tolerance = 1e-8;
  unsigned seed = 20011;
  int max_sweeps = 500;
  int coordinate_samples = 48;
};

// Coordinate ascent over the primed-setting phases, alpha_i' = sqrt(J) e^{i phi_i},
// unprimed settings fixed at 0. n <= 10.
OptimizationResult optimize_phases(int n, double r, double j, const PhaseOptions& options = {});

}  // namespace cvbell
