#include "fwm/observables.hpp"

#include <cmath>
#include <complex>

#include "fwm/errors.hpp"

namespace fwm {

namespace {
using cd = std::complex<double>;
double norm2(const cd& z) { return std::norm(z); }
} // namespace

std::pair<double, double> gains(const TransferSolution& ts0) {
    return {norm2(ts0.abcd(0, 0)), norm2(ts0.abcd(1, 0))};
}

std::pair<double, double> single_beam_spectra(const TransferSolution& ts) {
    const double f1 = 1.0 + ts.diff_aa_dag;   // pairs with |A(+w)|^2, |C(+w)|^2
    const double f2 = 1.0 + ts.diff_dag_aa;   // pairs with |A(-w)|^2, |C(-w)|^2
    const double f3 = 1.0 + ts.diff_bdag_b;   // pairs with |B(+w)|^2, |D(+w)|^2
    const double f4 = 1.0 + ts.diff_b_bdag;   // pairs with |B(-w)|^2, |D(-w)|^2
    // abcd_conj holds the entrywise conjugate of abcd at -omega, so its
    // moduli are the -omega coefficient magnitudes.
    const double s_xa = 0.5 * (norm2(ts.abcd(0, 0)) * f1 + norm2(ts.abcd_conj(0, 0)) * f2
                             + norm2(ts.abcd(0, 1)) * f3 + norm2(ts.abcd_conj(0, 1)) * f4);
    const double s_xb = 0.5 * (norm2(ts.abcd(1, 0)) * f1 + norm2(ts.abcd_conj(1, 0)) * f2
                             + norm2(ts.abcd(1, 1)) * f3 + norm2(ts.abcd_conj(1, 1)) * f4);
    return {s_xa, s_xb};
}

std::pair<double, double> correlation_spectra(const TransferSolution& ts,
                                              const TransferSolution& ts0) {
    const cd a0 = ts0.abcd(0, 0);
    const cd c0 = ts0.abcd(1, 0);
    const double gain_sum = norm2(a0) + norm2(c0);

    const cd aw = ts.abcd(0, 0), bw = ts.abcd(0, 1);
    const cd cw = ts.abcd(1, 0), dw = ts.abcd(1, 1);
    // Conjugated -omega coefficients, directly as stored.
    const cd am_c = ts.abcd_conj(0, 0), bm_c = ts.abcd_conj(0, 1);
    const cd cm_c = ts.abcd_conj(1, 0), dm_c = ts.abcd_conj(1, 1);

    const double f1 = 1.0 + ts.diff_aa_dag;
    const double f2 = 1.0 + ts.diff_dag_aa;
    const double f3 = 1.0 + ts.diff_bdag_b;
    const double f4 = 1.0 + ts.diff_b_bdag;

    const double norm = 1.0 / (2.0 * gain_sum);
    const double s_x_minus = norm * (norm2(std::conj(a0) * aw - std::conj(c0) * cw) * f1
                                   + norm2(a0 * am_c - c0 * cm_c) * f2
                                   + norm2(std::conj(a0) * bw - std::conj(c0) * dw) * f3
                                   + norm2(a0 * bm_c - c0 * dm_c) * f4);
    const double s_p_plus = norm * (norm2(a0 * cw - std::conj(c0) * std::conj(aw)) * f1
                                  + norm2(a0 * cm_c - std::conj(c0) * am_c) * f2
                                  + norm2(a0 * dw - std::conj(c0) * std::conj(bw)) * f3
                                  + norm2(a0 * dm_c - std::conj(c0) * bm_c) * f4);
    return {s_x_minus, s_p_plus};
}

double inseparability(double s_x_minus, double s_p_plus) {
    return 0.5 * (s_x_minus + s_p_plus);
}

double to_decibels(double value) {
    if (!(value > 0))
        throw NonPositive("to_decibels requires a positive value, got " + std::to_string(value));
    return 10.0 * std::log10(value);
}

} // namespace fwm
