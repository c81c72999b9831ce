#ifndef FWM_FLUCTUATIONS_HPP
#define FWM_FLUCTUATIONS_HPP

#include <complex>

#include <Eigen/Dense>

#include "fwm/config.hpp"
#include "fwm/steady_state.hpp"

namespace fwm {

using Matrix42cd = Eigen::Matrix<std::complex<double>, 4, 2>;

/// First-order system for the optical coherences (s23, s41, s43, s21) driven
/// by the seed and conjugate field modes and by the atomic Langevin forces.
struct FluctuationSystem {
    Eigen::Matrix4cd m1;   // coherence evolution matrix, rad/s units
    Matrix42cd s1;         // source matrix; column 1 multiplies the seed mode,
                           // column 2 the conjugate adjoint. Holds the bare
                           // steady-state factors; the coupling prefactor
                           // (kappa) is applied by the propagation module.
    Eigen::Matrix4cd d1;   // <F F+> diffusion matrix, rad/s units
    Eigen::Matrix4cd d2;   // <F+ F> diffusion matrix
    Eigen::Matrix4cd d_total;  // d1 + d2 (symmetrized-ordering source correlator)
};

FluctuationSystem build_fluctuation_system(const PhysicalConfig& config, const SteadyState& ss);

// Returns d1 + d2 (same value cached as d_total at build time).
Eigen::Matrix4cd symmetrized_diffusion(const FluctuationSystem& fs);

} // namespace fwm

#endif
