#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "cvbell/gaussian.hpp"
#include "cvbell/parity.hpp"
#include "cvbell/phase_point.hpp"

namespace cvbell {

struct FockOptions {
  // Largest tolerated norm deficit from truncation (squeezed-vacuum tail,
  // beam-splitter leakage, displacement leakage).
  double norm_tolerance = 1e-8;
  // Upper bound on (cutoff + 1)^N complex amplitudes, in bytes.
  std::size_t memory_budget = std::size_t{2} << 30;
};

// N-mode state in the photon-number basis, each mode truncated at `cutoff`
// photons. Amplitude of |n_0, ..., n_{N-1}> sits at index
// sum_m n_m (cutoff + 1)^{N - 1 - m}.
class TruncatedState {
 public:
  TruncatedState(int modes, int cutoff, std::vector<Complex> amplitudes);

  int modes() const noexcept { return modes_; }
  int cutoff() const noexcept { return cutoff_; }
  const std::vector<Complex>& amplitudes() const noexcept { return amplitudes_; }

  double norm_squared() const;
  std::size_t stride(int mode) const;

 private:
  int modes_;
  int cutoff_;
  std::vector<Complex> amplitudes_;
};

// Single-mode squeezed vacuum sum_m c_m |2m> truncated at `cutoff` (even).
// Throws CapacityExceeded carrying the smallest adequate cutoff when the
// truncated norm falls short of 1 - norm_tolerance.
TruncatedState fock_squeezed_vacuum(Squeezing r, SqueezeAxis axis, int cutoff,
                                    const FockOptions& options = {});

TruncatedState tensor_product(const std::vector<TruncatedState>& single_modes,
                              const FockOptions& options = {});

// Unitary U with U^dag a_i U = a_i cos(theta) + a_j sin(theta),
// U^dag a_j U = a_i sin(theta) - a_j cos(theta). Photons pushed past the
// cutoff are dropped; a norm loss above tolerance throws CapacityExceeded.
TruncatedState fock_beamsplitter_apply(const TruncatedState& state, int i, int j, double theta,
                                       const FockOptions& options = {});

// <m|D(beta)|n> for m, n <= cutoff from the associated-Laguerre closed form.
Eigen::MatrixXcd displacement_matrix(Complex beta, int cutoff);

// <psi| prod_i D(a_i) (-1)^{n_i} D^dag(a_i) |psi>.
CorrelationValue displaced_parity_expectation(const TruncatedState& state,
                                              const PhasePoint& point,
                                              const FockOptions& options = {});

// Symmetrized quadrature covariance (x = (a + a^dag)/2, p = (a - a^dag)/(2i)),
// interleaved ordering, zero mean assumed.
Eigen::MatrixXd quadrature_covariance(const TruncatedState& state);

// The GHZ network in the number basis: squeezed inputs, then the same
// beam-splitter cascade as build_ghz_state.
TruncatedState build_fock_ghz(int modes, Squeezing r, int cutoff, const FockOptions& options = {});

struct FockLimits {
  int max_modes = 3;
  double max_squeezing = 0.5;
  int initial_cutoff = 10;
};

// Starts at limits.initial_cutoff and doubles until every truncation check
// passes or the memory budget is exhausted.
TruncatedState build_fock_ghz_auto(int modes, Squeezing r, const FockOptions& options = {},
                                   const FockLimits& limits = {});

}  // namespace cvbell
