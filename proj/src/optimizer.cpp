#include "cvbell/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "cvbell/errors.hpp"
#include "cvbell/parallel.hpp"

namespace cvbell {

namespace {

constexpr double kTieTolerance = 1e-9;
constexpr int kMaxPhaseParties = 10;
const double kInvPhi = (std::sqrt(5.0) - 1.0) / 2.0;

struct Golden {
  Extremum best;
  std::size_t evaluations = 0;
};

template <typename F>
Golden golden_section(F&& f, double lo, double hi, double abs_tol, double rel_tol) {
  Golden out;
  double c = hi - kInvPhi * (hi - lo);
  double d = lo + kInvPhi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  out.evaluations = 2;
  for (int iter = 0; iter < 400; ++iter) {
    const double target = std::min(abs_tol, rel_tol * std::abs(0.5 * (lo + hi)));
    if (hi - lo < target || hi - lo <= 4 * std::numeric_limits<double>::epsilon() * std::abs(hi)) {
      break;
    }
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - kInvPhi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + kInvPhi * (hi - lo);
      fd = f(d);
    }
    ++out.evaluations;
  }
  out.best = fc > fd ? Extremum{c, fc} : Extremum{d, fd};
  return out;
}

bool better(const Extremum& a, const Extremum& b) {
  if (a.value > b.value + kTieTolerance) return true;
  if (b.value > a.value + kTieTolerance) return false;
  return a.arg < b.arg;
}

void require_nonnegative(double x, const char* what) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw InvalidArgument(std::string(what) + " must be finite and >= 0");
  }
}

}  // namespace

OptimizationResult maximize_scanned(const std::function<BellValue(double)>& objective, double hi,
                                    const ScanOptions& options) {
  if (!(hi > 0.0) || !std::isfinite(hi)) throw InvalidArgument("maximize: upper bracket must be > 0");
  if (options.scan_points < 200) throw InvalidArgument("maximize: at least 200 scan points required");
  if (!(options.floor_ratio > 0.0 && options.floor_ratio < 1.0)) {
    throw InvalidArgument("maximize: floor_ratio must lie in (0, 1)");
  }

  const int points = options.scan_points;
  std::vector<double> xs(static_cast<std::size_t>(points) + 1);
  xs[0] = 0.0;
  const double log_floor = std::log(options.floor_ratio);
  for (int i = 1; i <= points; ++i) {
    const double t = static_cast<double>(points - i) / static_cast<double>(points - 1);
    xs[i] = i == points ? hi : hi * std::exp(log_floor * t);
  }
  std::vector<BellValue> samples(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) { samples[i] = objective(xs[i]); });

  OptimizationResult result;
  result.bracket = {0.0, hi};
  result.evaluations = xs.size();

  const auto noise = [&](std::size_t i) {
    return 1e-13 * std::max(1.0, std::abs(samples[i].value)) + 4.0 * samples[i].cancellation_error;
  };
  const std::size_t last = xs.size() - 1;
  std::size_t best_sample = 0;
  for (std::size_t i = 1; i <= last; ++i) {
    if (samples[i].value > samples[best_sample].value + kTieTolerance) best_sample = i;
  }

  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i <= last; ++i) {
    const double v = samples[i].value;
    const double left = i > 0 ? samples[i - 1].value : -std::numeric_limits<double>::infinity();
    const double right = i < last ? samples[i + 1].value : -std::numeric_limits<double>::infinity();
    const bool peak = v >= left && v >= right && v - std::min(left, right) > noise(i);
    if (peak || i == best_sample) candidates.push_back(i);
  }

  std::vector<Extremum> maxima;
  double error_at_best = samples[best_sample].cancellation_error;
  for (std::size_t i : candidates) {
    Extremum found{xs[i], samples[i].value};
    if (i > 0) {
      const double lo = xs[i - 1];
      const double up = i < last ? xs[i + 1] : xs[i];
      auto f = [&](double x) { return objective(x).value; };
      Golden g = golden_section(f, lo, up, options.absolute_tolerance, options.relative_tolerance);
      result.evaluations += g.evaluations;
      if (g.best.value > found.value) found = g.best;
    }
    maxima.push_back(found);
  }

  std::sort(maxima.begin(), maxima.end(), [](const Extremum& a, const Extremum& b) {
    return a.arg < b.arg;
  });
  std::vector<Extremum> merged;
  for (const auto& m : maxima) {
    if (!merged.empty() &&
        std::abs(m.arg - merged.back().arg) <= 1e-7 * std::max(std::abs(m.arg), 1e-300)) {
      if (better(m, merged.back())) merged.back() = m;
      continue;
    }
    merged.push_back(m);
  }

  Extremum global = merged.front();
  for (const auto& m : merged) {
    if (better(m, global)) global = m;
  }
  result.argmax = global.arg;
  result.value = global.value;
  result.local_maxima = std::move(merged);
  result.cancellation_error = std::max(error_at_best, objective(global.arg).cancellation_error);
  ++result.evaluations;
  return result;
}

OptimizationResult maximize_over_displacement(int n, double r, double j_hi,
                                              const ScanOptions& options) {
  require_nonnegative(r, "maximize_over_displacement: squeezing");
  const EqualSettingsBell bell(n);
  return maximize_scanned([&](double j) { return bell.at(r, j); }, j_hi, options);
}

OptimizationResult maximize_asymptotic(int n, double a_hi, const ScanOptions& options) {
  if (!(a_hi >= 2.0)) throw InvalidArgument("maximize_asymptotic: upper bracket must be >= 2");
  const EqualSettingsBell bell(n);
  return maximize_scanned([&](double a) { return bell.asymptotic(a); }, a_hi, options);
}

std::vector<BellValue> scan_surface(int n, std::span<const double> r_grid,
                                    std::span<const double> j_grid) {
  const EqualSettingsBell bell(n);
  std::vector<BellValue> out(r_grid.size() * j_grid.size());
  parallel_for(out.size(), [&](std::size_t idx) {
    out[idx] = bell.at(r_grid[idx / j_grid.size()], j_grid[idx % j_grid.size()]);
  });
  return out;
}

OptimizationResult optimize_phases(int n, double r, double j, const PhaseOptions& options) {
  if (n < 2 || n > kMaxPhaseParties) {
    throw InvalidArgument("optimize_phases: party count must lie in [2, 10]");
  }
  require_nonnegative(r, "optimize_phases: squeezing");
  require_nonnegative(j, "optimize_phases: displacement");
  if (options.starts < 1) throw InvalidArgument("optimize_phases: at least one start required");

  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  const auto terms = mk_expand(n);
  std::size_t evaluations = 0;
  auto value_at = [&](const std::vector<double>& phases) {
    ++evaluations;
    return bell_value_general(terms, n, r, SettingsTable::equal_magnitude(j, phases)).value;
  };

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> uniform(0.0, kTwoPi);

  OptimizationResult result;
  result.bracket = {0.0, kTwoPi};
  result.argmax = j;
  result.value = -std::numeric_limits<double>::infinity();

  for (int start = 0; start < options.starts; ++start) {
    std::vector<double> phases(static_cast<std::size_t>(n));
    for (auto& p : phases) p = uniform(rng);
    double current = value_at(phases);

    for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
      double largest_step = 0.0;
      for (int i = 0; i < n; ++i) {
        std::vector<double> trial = phases;
        auto along = [&](double phi) {
          trial[i] = phi;
          return value_at(trial);
        };
        const int samples = options.coordinate_samples;
        const double step = kTwoPi / samples;
        int best_k = 0;
        double best_v = -std::numeric_limits<double>::infinity();
        for (int k = 0; k < samples; ++k) {
          const double v = along(k * step);
          if (v > best_v) {
            best_v = v;
            best_k = k;
          }
        }
        const double centre = best_k * step;
        Golden g = golden_section(along, centre - step, centre + step, 1e-10, 1e-12);
        Extremum pick = g.best.value > best_v ? g.best : Extremum{centre, best_v};
        if (pick.value > current) {
          double wrapped = std::fmod(pick.arg, kTwoPi);
          if (wrapped < 0.0) wrapped += kTwoPi;
          const double moved = std::abs(std::remainder(wrapped - phases[i], kTwoPi));
          largest_step = std::max(largest_step, moved);
          phases[i] = wrapped;
          current = pick.value;
        }
      }
      if (largest_step < options.tolerance) break;
    }

    if (current > result.value) {
      result.value = current;
      result.phases = phases;
    }
  }
  result.evaluations = evaluations;
  result.local_maxima = {Extremum{j, result.value}};
  return result;
}

}  // namespace cvbell
