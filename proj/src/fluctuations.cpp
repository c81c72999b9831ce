#include "fwm/fluctuations.hpp"

#include "fwm/errors.hpp"

namespace fwm {

namespace {
using cd = std::complex<double>;
}

FluctuationSystem build_fluctuation_system(const PhysicalConfig& config, const SteadyState& ss) {
    validate(config);
    const double G = config.gamma_big, gs = config.gamma_small;
    const double W = config.omega_rabi, D = config.delta_big;
    const double de = config.delta_small, w0 = config.omega_zero;
    const double hw = W / 2;
    const cd i(0, 1);

    FluctuationSystem fs;

    // Coherence evolution, basis (s23, s41, s43, s21).
    fs.m1 = Eigen::Matrix4cd::Zero();
    fs.m1(0, 0) = cd(D - de, G / 2);
    fs.m1(0, 2) = -hw;
    fs.m1(0, 3) = hw;
    fs.m1(1, 1) = cd(-(D + de + w0), G / 2);
    fs.m1(1, 2) = hw;
    fs.m1(1, 3) = -hw;
    fs.m1(2, 0) = -hw;
    fs.m1(2, 1) = hw;
    fs.m1(2, 2) = cd(-(de + w0), G);
    fs.m1(3, 0) = hw;
    fs.m1(3, 1) = -hw;
    fs.m1(3, 3) = cd(-de, gs);

    // Sources: column 1 drives the seed mode, column 2 the conjugate adjoint.
    fs.s1 = Matrix42cd::Zero();
    fs.s1(0, 0) = ss.sigma33 - ss.sigma22;
    fs.s1(1, 1) = ss.sigma11 - ss.sigma44;
    fs.s1(2, 0) = -ss.sigma42;
    fs.s1(2, 1) = ss.sigma13;
    fs.s1(3, 0) = ss.sigma31;
    fs.s1(3, 1) = -ss.sigma24;

    const double tau = derive_constants(config).tau;
    const cd dw(D + w0, 0);

    fs.d1 = Eigen::Matrix4cd::Zero();
    fs.d1(0, 0) = G * (G * G + 4 * D * D + 2 * W * W + 8 * D * w0 + 4 * w0 * w0);
    fs.d1(0, 2) = i * G * W * (G + 2.0 * i * dw);
    fs.d1(1, 3) = -i * gs * W * (G - 2.0 * i * dw);
    fs.d1(2, 0) = -i * G * W * (G - 2.0 * i * dw);
    fs.d1(2, 2) = G * W * W;
    fs.d1(3, 1) = i * gs * W * (G + 2.0 * i * dw);
    fs.d1(3, 3) = G * W * W + 2 * gs * (G * G + 4 * D * D + W * W + 8 * D * w0 + 4 * w0 * w0);
    fs.d1 /= 2 * tau;

    fs.d2 = Eigen::Matrix4cd::Zero();
    fs.d2(0, 3) = -i * gs * (G - 2.0 * i * D) * W;
    fs.d2(1, 1) = G * (G * G + 4 * D * D + 2 * W * W);
    fs.d2(1, 2) = i * G * (G + 2.0 * i * D) * W;
    fs.d2(2, 1) = -i * G * (G - 2.0 * i * D) * W;
    fs.d2(2, 2) = G * W * W;
    fs.d2(3, 0) = i * gs * (G + 2.0 * i * D) * W;
    fs.d2(3, 3) = G * W * W + 2 * gs * (G * G + 4 * D * D + W * W);
    fs.d2 /= 2 * tau;

    fs.d_total = fs.d1 + fs.d2;
    return fs;
}

Eigen::Matrix4cd symmetrized_diffusion(const FluctuationSystem& fs) {
    return fs.d1 + fs.d2;
}

} // namespace fwm
