#ifndef FWM_OBSERVABLES_HPP
#define FWM_OBSERVABLES_HPP

#include <utility>

#include "fwm/propagation.hpp"

namespace fwm {

/// One grid point of a sweep: gains and SQL-normalized noise spectra.
struct SpectrumRecord {
    double delta_small = 0;  // rad/s
    double omega = 0;        // rad/s
    double gain_a = 0;       // |A(0)|^2, seed gain
    double gain_b = 0;       // |C(0)|^2, conjugate output / seed input
    double s_x_minus = 0;    // intensity-difference spectrum, SQL units
    double s_p_plus = 0;     // phase-sum spectrum, SQL units
    double inseparability = 0;  // (s_x_minus + s_p_plus) / 2
    double s_xa = 0, s_pa = 0;  // single-beam quadrature noises, seed
    double s_xb = 0, s_pb = 0;  // single-beam quadrature noises, conjugate
};

// (G_a, G_b) from the zero-frequency transfer solution.
std::pair<double, double> gains(const TransferSolution& ts0);

// SQL-normalized single-beam amplitude-quadrature spectra (s_xa, s_xb).
// The model carries no anomalous field correlators, so the phase-quadrature
// spectra equal these.
std::pair<double, double> single_beam_spectra(const TransferSolution& ts);

// SQL-normalized intensity-difference and phase-sum correlation spectra
// (s_x_minus, s_p_plus); ts0 supplies A(0), C(0) and the (G_a + G_b)
// normalization, ts the frequency-resolved coefficients and noise factors.
std::pair<double, double> correlation_spectra(const TransferSolution& ts,
                                              const TransferSolution& ts0);

// Duan-Simon witness: values below 1 certify seed-conjugate entanglement.
double inseparability(double s_x_minus, double s_p_plus);

// 10*log10(value); throws NonPositive for value <= 0.
double to_decibels(double value);

} // namespace fwm

#endif
