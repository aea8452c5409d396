#include "cvbell/fock.hpp"

#include <cmath>
#include <string>

#include "cvbell/errors.hpp"

namespace cvbell {

namespace {

using LongComplex = std::complex<long double>;

std::size_t checked_size(int modes, int cutoff, const FockOptions& options) {
  long double size = 1.0L;
  for (int m = 0; m < modes; ++m) size *= static_cast<long double>(cutoff + 1);
  if (size * sizeof(Complex) > static_cast<long double>(options.memory_budget)) {
    throw CapacityExceeded("Fock tensor with cutoff " + std::to_string(cutoff) + " and " +
                           std::to_string(modes) + " modes exceeds the memory budget");
  }
  return static_cast<std::size_t>(size);
}

// Squeezed-vacuum amplitudes c_{2m} for 2m <= photons.
std::vector<double> squeezed_amplitudes(double r, SqueezeAxis axis, int photons) {
  // S(xi)|0>, xi = r e^{i theta}: c_{2m} = (-e^{i theta} tanh r)^m sqrt((2m)!) / (2^m m! sqrt(cosh r)).
  // theta = 0 squeezes x, theta = pi squeezes p.
  const double ratio = (axis == SqueezeAxis::kPosition ? -1.0 : 1.0) * std::tanh(r);
  std::vector<double> c;
  double amp = 1.0 / std::sqrt(std::cosh(r));
  for (int m = 0; 2 * m <= photons; ++m) {
    c.push_back(amp);
    amp *= ratio * std::sqrt((2.0 * m + 1.0) * (2.0 * m + 2.0)) / (2.0 * (m + 1.0));
  }
  return c;
}

// Coefficients of (c A + s B)^p (s A - c B)^q |0> on |k, p + q - k>,
// including the sqrt(k! (p+q-k)! / (p! q!)) normalization.
std::vector<long double> splitter_row(int p, int q, long double c, long double s,
                                      const std::vector<long double>& log_fact) {
  const int total = p + q;
  std::vector<long double> poly(static_cast<std::size_t>(total) + 1, 0.0L);
  // Expand the polynomial in A (powers of A index the vector).
  std::vector<long double> first(static_cast<std::size_t>(p) + 1);
  for (int a = 0; a <= p; ++a) {
    first[a] = std::exp(log_fact[p] - log_fact[a] - log_fact[p - a]) * std::pow(c, a) *
               std::pow(s, p - a);
  }
  for (int b = 0; b <= q; ++b) {
    const long double coef = std::exp(log_fact[q] - log_fact[b] - log_fact[q - b]) *
                             std::pow(s, b) * std::pow(-c, q - b);
    for (int a = 0; a <= p; ++a) poly[a + b] += first[a] * coef;
  }
  for (int k = 0; k <= total; ++k) {
    poly[k] *= std::exp(0.5L * (log_fact[k] + log_fact[total - k] - log_fact[p] - log_fact[q]));
  }
  return poly;
}

void apply_single_mode(std::vector<Complex>& amps, int modes, int cutoff, int mode,
                       const Eigen::MatrixXcd& op) {
  const std::size_t dim = static_cast<std::size_t>(cutoff) + 1;
  std::size_t stride = 1;
  for (int m = mode + 1; m < modes; ++m) stride *= dim;
  const std::size_t block = stride * dim;
  Eigen::VectorXcd in(static_cast<Eigen::Index>(dim));
  for (std::size_t outer = 0; outer < amps.size(); outer += block) {
    for (std::size_t inner = 0; inner < stride; ++inner) {
      const std::size_t base = outer + inner;
      for (std::size_t n = 0; n < dim; ++n) in(static_cast<Eigen::Index>(n)) = amps[base + n * stride];
      const Eigen::VectorXcd out = op * in;
      for (std::size_t n = 0; n < dim; ++n) amps[base + n * stride] = out(static_cast<Eigen::Index>(n));
    }
  }
}

}  // namespace

TruncatedState::TruncatedState(int modes, int cutoff, std::vector<Complex> amplitudes)
    : modes_(modes), cutoff_(cutoff), amplitudes_(std::move(amplitudes)) {
  if (modes < 1) throw InvalidArgument("TruncatedState: mode count must be >= 1");
  if (cutoff < 0) throw InvalidArgument("TruncatedState: cutoff must be >= 0");
  std::size_t expected = 1;
  for (int m = 0; m < modes; ++m) expected *= static_cast<std::size_t>(cutoff) + 1;
  if (amplitudes_.size() != expected) throw InvalidArgument("TruncatedState: amplitude count mismatch");
}

double TruncatedState::norm_squared() const {
  double acc = 0.0;
  for (const auto& a : amplitudes_) acc += std::norm(a);
  return acc;
}

std::size_t TruncatedState::stride(int mode) const {
  std::size_t s = 1;
  for (int m = mode + 1; m < modes_; ++m) s *= static_cast<std::size_t>(cutoff_) + 1;
  return s;
}

TruncatedState fock_squeezed_vacuum(Squeezing r, SqueezeAxis axis, int cutoff,
                                    const FockOptions& options) {
  if (cutoff < 0 || cutoff % 2 != 0) throw InvalidArgument("fock_squeezed_vacuum: cutoff must be even and >= 0");
  const auto c = squeezed_amplitudes(r.value(), axis, cutoff);
  double norm = 0.0;
  for (double a : c) norm += a * a;
  if (norm < 1.0 - options.norm_tolerance) {
    int needed = cutoff;
    double tail_norm = norm;
    const auto longer = [&](int photons) { return squeezed_amplitudes(r.value(), axis, photons); };
    while (tail_norm < 1.0 - options.norm_tolerance && needed < 100000) {
      needed += 2;
      const auto more = longer(needed);
      tail_norm = 0.0;
      for (double a : more) tail_norm += a * a;
    }
    throw CapacityExceeded("fock_squeezed_vacuum: cutoff " + std::to_string(cutoff) +
                               " loses more than the tolerated norm; need cutoff >= " +
                               std::to_string(needed),
                           static_cast<std::size_t>(needed));
  }
  std::vector<Complex> amps(static_cast<std::size_t>(cutoff) + 1);
  for (std::size_t m = 0; m < c.size(); ++m) amps[2 * m] = c[m];
  return TruncatedState(1, cutoff, std::move(amps));
}

TruncatedState tensor_product(const std::vector<TruncatedState>& single_modes,
                              const FockOptions& options) {
  if (single_modes.empty()) throw InvalidArgument("tensor_product: no modes");
  const int cutoff = single_modes.front().cutoff();
  for (const auto& s : single_modes) {
    if (s.modes() != 1 || s.cutoff() != cutoff) {
      throw InvalidArgument("tensor_product: expects single-mode states with a common cutoff");
    }
  }
  const int modes = static_cast<int>(single_modes.size());
  checked_size(modes, cutoff, options);
  std::vector<Complex> amps{Complex{1.0, 0.0}};
  for (const auto& s : single_modes) {
    std::vector<Complex> next;
    next.reserve(amps.size() * s.amplitudes().size());
    for (const auto& a : amps) {
      for (const auto& b : s.amplitudes()) next.push_back(a * b);
    }
    amps = std::move(next);
  }
  return TruncatedState(modes, cutoff, std::move(amps));
}

TruncatedState fock_beamsplitter_apply(const TruncatedState& state, int i, int j, double theta,
                                       const FockOptions& options) {
  if (i < 0 || j < 0 || i >= state.modes() || j >= state.modes() || i == j) {
    throw InvalidArgument("fock_beamsplitter_apply: invalid mode pair");
  }
  const int cutoff = state.cutoff();
  const int dim = cutoff + 1;
  std::vector<long double> log_fact(2 * static_cast<std::size_t>(cutoff) + 2, 0.0L);
  for (std::size_t k = 1; k < log_fact.size(); ++k) log_fact[k] = log_fact[k - 1] + std::log(static_cast<long double>(k));
  const long double c = std::cos(static_cast<long double>(theta));
  const long double s = std::sin(static_cast<long double>(theta));
  std::vector<std::vector<long double>> rows(static_cast<std::size_t>(dim * dim));
  for (int p = 0; p < dim; ++p) {
    for (int q = 0; q < dim; ++q) rows[p * dim + q] = splitter_row(p, q, c, s, log_fact);
  }

  const std::size_t si = state.stride(i);
  const std::size_t sj = state.stride(j);
  const auto& in = state.amplitudes();
  std::vector<Complex> out(in.size());
  for (std::size_t base = 0; base < in.size(); ++base) {
    const std::size_t di = (base / si) % dim;
    const std::size_t dj = (base / sj) % dim;
    if (di != 0 || dj != 0) continue;
    for (int p = 0; p < dim; ++p) {
      for (int q = 0; q < dim; ++q) {
        const Complex amp = in[base + p * si + q * sj];
        if (amp == Complex{}) continue;
        const auto& row = rows[p * dim + q];
        const int total = p + q;
        for (int k = std::max(0, total - cutoff); k <= std::min(total, cutoff); ++k) {
          out[base + k * si + (total - k) * sj] += static_cast<double>(row[k]) * amp;
        }
      }
    }
  }
  TruncatedState result(state.modes(), cutoff, std::move(out));
  const double loss = state.norm_squared() - result.norm_squared();
  if (loss > options.norm_tolerance) {
    throw CapacityExceeded("fock_beamsplitter_apply: truncation leaks " + std::to_string(loss) +
                               " of the norm at cutoff " + std::to_string(cutoff),
                           2 * static_cast<std::size_t>(cutoff));
  }
  return result;
}

Eigen::MatrixXcd displacement_matrix(Complex beta, int cutoff) {
  if (cutoff < 0) throw InvalidArgument("displacement_matrix: cutoff must be >= 0");
  const int dim = cutoff + 1;
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(dim, dim);
  const double x = std::norm(beta);
  if (x == 0.0) return Eigen::MatrixXcd::Identity(dim, dim);
  const double log_abs = 0.5 * std::log(x);
  const double phase = std::arg(beta);
  for (int m = 0; m < dim; ++m) {
    for (int n = 0; n < dim; ++n) {
      const int lo = std::min(m, n);
      const int gap = std::abs(m - n);
      // sqrt(lo!/hi!) |beta|^gap e^{-|beta|^2/2} L_lo^{(gap)}(|beta|^2) times the phase of
      // beta^gap (m >= n) or (-beta*)^gap (m < n).
      const double log_mag = 0.5 * (std::lgamma(lo + 1.0) - std::lgamma(lo + gap + 1.0)) +
                             gap * log_abs - 0.5 * x;
      const double laguerre = std::assoc_laguerre(static_cast<unsigned>(lo),
                                                  static_cast<unsigned>(gap), x);
      const double sign = m < n && gap % 2 == 1 ? -1.0 : 1.0;
      const double angle = m >= n ? gap * phase : -gap * phase;
      d(m, n) = std::polar(sign * std::exp(log_mag) * laguerre, angle);
    }
  }
  return d;
}

CorrelationValue displaced_parity_expectation(const TruncatedState& state, const PhasePoint& point,
                                              const FockOptions& options) {
  if (point.modes() != state.modes()) {
    throw InvalidArgument("displaced_parity_expectation: point dimension does not match the state");
  }
  std::vector<Complex> amps = state.amplitudes();
  for (int m = 0; m < state.modes(); ++m) {
    apply_single_mode(amps, state.modes(), state.cutoff(), m,
                      displacement_matrix(-point[m], state.cutoff()));
  }
  const TruncatedState shifted(state.modes(), state.cutoff(), amps);
  const double loss = state.norm_squared() - shifted.norm_squared();
  if (loss > options.norm_tolerance) {
    throw CapacityExceeded("displaced_parity_expectation: displacement pushes " +
                               std::to_string(loss) + " of the norm past cutoff " +
                               std::to_string(state.cutoff()),
                           2 * static_cast<std::size_t>(state.cutoff()));
  }
  const int dim = state.cutoff() + 1;
  double even = 0.0;
  double odd = 0.0;
  for (std::size_t idx = 0; idx < amps.size(); ++idx) {
    int photons = 0;
    std::size_t rest = idx;
    for (int m = 0; m < state.modes(); ++m) {
      photons += static_cast<int>(rest % dim);
      rest /= dim;
    }
    (photons % 2 == 0 ? even : odd) += std::norm(amps[idx]);
  }
  return CorrelationValue(even - odd);
}

Eigen::MatrixXd quadrature_covariance(const TruncatedState& state) {
  const int cutoff = state.cutoff();
  const int dim = cutoff + 1;
  Eigen::MatrixXcd lower = Eigen::MatrixXcd::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) lower(n - 1, n) = std::sqrt(static_cast<double>(n));
  const Eigen::MatrixXcd raise = lower.adjoint();
  const Complex i_unit{0.0, 1.0};
  const Eigen::MatrixXcd x_op = 0.5 * (lower + raise);
  const Eigen::MatrixXcd p_op = (lower - raise) / (2.0 * i_unit);

  const int modes = state.modes();
  std::vector<std::vector<Complex>> applied;
  for (int m = 0; m < modes; ++m) {
    for (const auto* op : {&x_op, &p_op}) {
      std::vector<Complex> amps = state.amplitudes();
      apply_single_mode(amps, modes, cutoff, m, *op);
      applied.push_back(std::move(amps));
    }
  }
  Eigen::MatrixXd cov(2 * modes, 2 * modes);
  for (int a = 0; a < 2 * modes; ++a) {
    for (int b = 0; b < 2 * modes; ++b) {
      Complex acc{};
      for (std::size_t k = 0; k < applied[a].size(); ++k) acc += std::conj(applied[a][k]) * applied[b][k];
      cov(a, b) = acc.real();
    }
  }
  return cov;
}

TruncatedState build_fock_ghz(int modes, Squeezing r, int cutoff, const FockOptions& options) {
  if (modes < 2) throw InvalidArgument("build_fock_ghz: mode count must be >= 2");
  checked_size(modes, cutoff, options);
  std::vector<TruncatedState> inputs;
  inputs.push_back(fock_squeezed_vacuum(r, SqueezeAxis::kMomentum, cutoff, options));
  for (int k = 1; k < modes; ++k) {
    inputs.push_back(fock_squeezed_vacuum(r, SqueezeAxis::kPosition, cutoff, options));
  }
  TruncatedState state = tensor_product(inputs, options);
  const auto angles = ghz_mixing_angles(modes);
  for (int k = 0; k + 1 < modes; ++k) state = fock_beamsplitter_apply(state, k, k + 1, angles[k], options);
  return state;
}

TruncatedState build_fock_ghz_auto(int modes, Squeezing r, const FockOptions& options,
                                   const FockLimits& limits) {
  if (modes > limits.max_modes || r.value() > limits.max_squeezing) {
    throw CapacityExceeded("build_fock_ghz_auto: oracle limited to " +
                           std::to_string(limits.max_modes) + " modes and r <= " +
                           std::to_string(limits.max_squeezing));
  }
  int cutoff = limits.initial_cutoff + limits.initial_cutoff % 2;
  for (;;) {
    checked_size(modes, cutoff, options);
    try {
      return build_fock_ghz(modes, r, cutoff, options);
    } catch (const CapacityExceeded& e) {
      const auto hinted = static_cast<int>(e.required());
      cutoff = std::max(2 * cutoff, hinted + hinted % 2);
    }
  }
}

}  // namespace cvbell
