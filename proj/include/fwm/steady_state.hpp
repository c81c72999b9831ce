#ifndef FWM_STEADY_STATE_HPP
#define FWM_STEADY_STATE_HPP

#include <complex>

#include <Eigen/Dense>

#include "fwm/config.hpp"

namespace fwm {

using Matrix7cd = Eigen::Matrix<std::complex<double>, 7, 7>;
using Vector7cd = Eigen::Matrix<std::complex<double>, 7, 1>;

/// Pump-driven mean values: populations and pump coherences.
struct SteadyState {
    double sigma11, sigma22, sigma33;
    double sigma44;  // 1 - sigma11 - sigma22 - sigma33 (trace closure)
    std::complex<double> sigma31, sigma13, sigma42, sigma24;
};

// Zeroth-order (pump-only) system matrix acting on the mean-value vector
// (s11, s22, s33, s31, s13, s42, s24). Entries carry the config's rad/s units.
Matrix7cd build_m0(const PhysicalConfig& config);

// Drive vector of the same system: (i G, i G, 0, 0, 0, -W, W) / 2.
Vector7cd build_s0(const PhysicalConfig& config);

// Direct linear solve of the pump-only steady state. Throws SingularSystem
// when omega_rabi == 0 or the solve is ill-conditioned (rcond < 1e-12).
SteadyState solve_steady_state(const PhysicalConfig& config);

// Independent oracle: RK4 time integration of the same equations of motion
// from sigma22(0) = 1 until t_final (seconds), step dt (seconds). Throws
// NonConvergence if the state still drifts over the last 10% of the interval.
SteadyState evolve_to_steady_state_oracle(const PhysicalConfig& config, double t_final, double dt);

// Reasonable default step: resolves the fastest frequency scale in the system.
double oracle_default_dt(const PhysicalConfig& config);

// Fictitious no-pump state with all atoms in |2>: used for gain calibration
// against two-level Beer-Lambert absorption (see scan-cli --pin-sigma22).
SteadyState pinned_sigma22_state();

} // namespace fwm

#endif
