#include "fwm/steady_state.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "fwm/errors.hpp"

namespace fwm {

namespace {

using cd = std::complex<double>;

// Mean-value evolution matrix for (s11, s22, s33, s31, s13, s42, s24) with
// all rates in the same units; gamma is the excited-state decay rate.
Matrix7cd m0_matrix(double gamma, double rabi, double det, double split) {
    const cd ihg(0.0, gamma / 2);   // i G / 2
    const cd ig(0.0, gamma);        // i G
    const double hw = rabi / 2;     // W / 2
    Matrix7cd m = Matrix7cd::Zero();
    m(0, 0) = ihg; m(0, 1) = ihg; m(0, 3) = -hw; m(0, 4) = hw;
    m(1, 0) = ihg; m(1, 1) = ihg; m(1, 5) = -hw; m(1, 6) = hw;
    m(2, 2) = ig;  m(2, 3) = hw;  m(2, 4) = -hw;
    m(3, 0) = -hw; m(3, 2) = hw;  m(3, 3) = cd(-det, gamma / 2);
    m(4, 0) = hw;  m(4, 2) = -hw; m(4, 4) = cd(det, gamma / 2);
    m(5, 0) = -hw; m(5, 1) = -rabi; m(5, 2) = -hw; m(5, 5) = cd(-det - split, gamma / 2);
    m(6, 0) = hw;  m(6, 1) = rabi;  m(6, 2) = hw;  m(6, 6) = cd(det + split, gamma / 2);
    return m;
}

Vector7cd s0_vector(double gamma, double rabi) {
    Vector7cd s = Vector7cd::Zero();
    s(0) = cd(0.0, gamma / 2);
    s(1) = cd(0.0, gamma / 2);
    s(5) = -rabi / 2;
    s(6) = rabi / 2;
    return s;
}

SteadyState pack(const Vector7cd& v) {
    // Populations must come out real and normalized; tolerate solver noise.
    for (int k = 0; k < 3; ++k) {
        if (std::abs(v(k).imag()) > 1e-10)
            throw SingularSystem("steady-state population has imaginary part "
                                 + std::to_string(v(k).imag()));
    }
    SteadyState ss;
    ss.sigma11 = v(0).real();
    ss.sigma22 = v(1).real();
    ss.sigma33 = v(2).real();
    ss.sigma44 = 1.0 - ss.sigma11 - ss.sigma22 - ss.sigma33;
    const double lo = -1e-10, hi = 1.0 + 1e-10;
    for (double p : {ss.sigma11, ss.sigma22, ss.sigma33, ss.sigma44}) {
        if (p < lo || p > hi)
            throw SingularSystem("steady-state population out of [0,1]: " + std::to_string(p));
    }
    // Hermiticity of the mean density operator; symmetrize solver roundoff.
    ss.sigma31 = 0.5 * (v(3) + std::conj(v(4)));
    ss.sigma13 = std::conj(ss.sigma31);
    ss.sigma42 = 0.5 * (v(5) + std::conj(v(6)));
    ss.sigma24 = std::conj(ss.sigma42);
    return ss;
}

} // namespace

Matrix7cd build_m0(const PhysicalConfig& config) {
    validate(config);
    return m0_matrix(config.gamma_big, config.omega_rabi, config.delta_big, config.omega_zero);
}

Vector7cd build_s0(const PhysicalConfig& config) {
    validate(config);
    return s0_vector(config.gamma_big, config.omega_rabi);
}

SteadyState solve_steady_state(const PhysicalConfig& config) {
    const InternalConfig ic = to_internal(config);
    if (ic.omega_rabi <= 0)
        throw SingularSystem("omega_rabi = 0: pump-only steady state is not unique");
    const Matrix7cd m = m0_matrix(1.0, ic.omega_rabi, ic.delta_big, ic.omega_zero);
    const Vector7cd s = s0_vector(1.0, ic.omega_rabi);
    Eigen::PartialPivLU<Matrix7cd> lu(m);
    if (lu.rcond() < 1e-12)
        throw SingularSystem("pump-only system ill-conditioned (rcond < 1e-12)");
    return pack(lu.solve(s));
}

double oracle_default_dt(const PhysicalConfig& config) {
    const double fast = std::max({config.omega_rabi,
                                  std::abs(config.delta_big) + config.omega_zero,
                                  std::abs(config.delta_big),
                                  config.gamma_big});
    return 0.5 / fast;
}

SteadyState evolve_to_steady_state_oracle(const PhysicalConfig& config,
                                          double t_final, double dt) {
    const InternalConfig ic = to_internal(config);
    if (!(t_final > 0) || !(dt > 0))
        throw ValidationError("t_final and dt must be > 0");

    // d Sigma / dt = i M0 Sigma - i S0, integrated in gamma_big units.
    const Matrix7cd f = cd(0, 1) * m0_matrix(1.0, ic.omega_rabi, ic.delta_big, ic.omega_zero);
    const Vector7cd b = cd(0, -1) * s0_vector(1.0, ic.omega_rabi);
    const double tf = t_final * ic.gamma_scale;
    const double h = dt * ic.gamma_scale;
    const long n_steps = static_cast<long>(std::ceil(tf / h));

    Vector7cd y = Vector7cd::Zero();
    y(1) = 1.0;  // all atoms in |2>
    Vector7cd y_at_90 = y;
    const long mark = static_cast<long>(0.9 * static_cast<double>(n_steps));
    for (long k = 0; k < n_steps; ++k) {
        const Vector7cd k1 = f * y + b;
        const Vector7cd k2 = f * (y + 0.5 * h * k1) + b;
        const Vector7cd k3 = f * (y + 0.5 * h * k2) + b;
        const Vector7cd k4 = f * (y + h * k3) + b;
        y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (k + 1 == mark) y_at_90 = y;
    }
    const double drift = (y - y_at_90).cwiseAbs().maxCoeff()
                         / std::max(1.0, y.cwiseAbs().maxCoeff());
    if (drift > 1e-6)
        throw NonConvergence("state still drifting at t_final (relative change "
                             + std::to_string(drift) + " over last 10%)");
    return pack(y);
}

SteadyState pinned_sigma22_state() {
    SteadyState ss;
    ss.sigma11 = ss.sigma33 = ss.sigma44 = 0.0;
    ss.sigma22 = 1.0;
    ss.sigma31 = ss.sigma13 = ss.sigma42 = ss.sigma24 = 0.0;
    return ss;
}

} // namespace fwm
