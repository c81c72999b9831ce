#ifndef FWM_PROPAGATION_HPP
#define FWM_PROPAGATION_HPP

#include <complex>

#include <Eigen/Dense>

#include "fwm/config.hpp"
#include "fwm/fluctuations.hpp"

namespace fwm {

/// Input-output solution at one analysis frequency.
struct TransferSolution {
    double omega;               // analysis frequency, rad/s
    Eigen::Matrix2cd abcd;      // [[A,B],[C,D]](omega) = exp(K(omega))
    Eigen::Matrix2cd abcd_conj; // adjoint-chain transfer = conj(abcd at -omega)

    // Langevin input-equivalent noise powers entering the spectra as (1 + D).
    // With the symmetrized source correlator the normal- and antinormal-
    // ordered output coefficients coincide per frequency; the four fields
    // carry the +omega and -omega evaluations the spectra formulas pair with
    // |A(omega)|^2, |A(-omega)|^2, |B(omega)|^2, |B(-omega)|^2 respectively.
    double diff_aa_dag;   // seed channel, evaluated at +omega
    double diff_dag_aa;   // seed channel, evaluated at -omega
    double diff_bdag_b;   // conjugate channel, at +omega
    double diff_b_bdag;   // conjugate channel, at -omega
};

struct LangevinDiffusion {
    double aa_dag, dag_aa, bdag_b, b_bdag;
};

// Dimensionless 2x2 generator K(omega) of the field propagation across the
// medium (already scaled by the length, so the transfer matrix is exp(K)).
// Throws ResonantSingularity when (M1 + omega I) has rcond < 1e-12, i.e.
// omega sits on a dressed-state pole; the caller may nudge omega by 1e-6*Gamma.
Eigen::Matrix2cd propagation_generator(const PhysicalConfig& config,
                                       const FluctuationSystem& fs, double omega);

// Matrix exponential of a 2x2 complex matrix: closed-form eigendecomposition,
// series fallback when |lambda1 - lambda2| < 1e-8 * norm.
Eigen::Matrix2cd transfer_matrix(const Eigen::Matrix2cd& generator);

// The four noise scalars at +/-omega by Gauss-Legendre quadrature over the
// medium. Runs the given order and its double; throws QuadratureNotConverged
// if they disagree by more than 1e-8 relative. Asserts the results are real
// (|imag| <= 1e-10 absolute on the normalized value).
LangevinDiffusion langevin_diffusion(const PhysicalConfig& config,
                                     const FluctuationSystem& fs,
                                     double omega, int quad_order);

// Bundles generator -> exp at +/-omega plus the Langevin scalars.
// With include_langevin = false the scalars are zero (ideal-amplifier mode).
TransferSolution solve_transfer(const PhysicalConfig& config,
                                const FluctuationSystem& fs,
                                double omega, int quad_order,
                                bool include_langevin = true);

} // namespace fwm

#endif
