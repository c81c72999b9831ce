#include "fwm/propagation.hpp"

#include <cmath>
#include <complex>

#include "fwm/errors.hpp"
#include "fwm/quadrature.hpp"

namespace fwm {

namespace {

using cd = std::complex<double>;
using Matrix24cd = Eigen::Matrix<std::complex<double>, 2, 4>;

// Everything below works in gamma_big units: rates / Gamma, z in [0, 1].
struct ScaledSystem {
    Eigen::Matrix4cd m1;        // fs.m1 / Gamma
    Matrix42cd s1;              // dimensionless
    Eigen::Matrix4cd diffusion; // (d1 + d2) / Gamma
    double kappa;               // OD / 4
    double gamma;               // rad/s, for error messages and scaling omega
};

ScaledSystem scale_system(const PhysicalConfig& config, const FluctuationSystem& fs) {
    const DerivedConstants dc = derive_constants(config);
    ScaledSystem s;
    s.gamma = config.gamma_big;
    s.m1 = fs.m1 / config.gamma_big;
    s.s1 = fs.s1;
    s.diffusion = fs.d_total / config.gamma_big;
    s.kappa = dc.coupling / config.gamma_big;
    return s;
}

// LU of (M1 + omega I) with the pole guard.
Eigen::PartialPivLU<Eigen::Matrix4cd> resolvent_lu(const ScaledSystem& s, double omega_hat) {
    Eigen::Matrix4cd shifted = s.m1;
    shifted.diagonal().array() += omega_hat;
    Eigen::PartialPivLU<Eigen::Matrix4cd> lu(shifted);
    if (lu.rcond() < 1e-12)
        throw ResonantSingularity("(M1 + omega I) ill-conditioned at omega = "
                                  + std::to_string(omega_hat * s.gamma)
                                  + " rad/s (dressed-state pole)");
    return lu;
}

// Rows 1,2 of the resolvent with the field-equation signs (-row1, +row2).
Matrix24cd coupling_rows(const Eigen::PartialPivLU<Eigen::Matrix4cd>& lu) {
    const Eigen::Matrix4cd r = lu.solve(Eigen::Matrix4cd::Identity());
    Matrix24cd t;
    t.row(0) = -r.row(0);
    t.row(1) = r.row(1);
    return t;
}

Eigen::Matrix2cd generator_from_lu(const ScaledSystem& s,
                                   const Eigen::PartialPivLU<Eigen::Matrix4cd>& lu) {
    const Matrix42cd x = lu.solve(s.s1);
    Eigen::Matrix2cd tx;
    tx.row(0) = -x.row(0);
    tx.row(1) = x.row(1);
    return cd(0, -1) * s.kappa * tx;
}

// Integrand weight W = MF D MF^H with MF = sqrt(kappa) * T * (M1 + w)^-1.
// Hermitian 2x2; the quadrature then sandwiches it between exp(-K u) factors.
Eigen::Matrix2cd noise_kernel(const ScaledSystem& s,
                              const Eigen::PartialPivLU<Eigen::Matrix4cd>& lu) {
    const Matrix24cd mf = std::sqrt(s.kappa) * coupling_rows(lu);
    return mf * s.diffusion * mf.adjoint();
}

// pref = 2: one factor from the symmetrized force correlator bookkeeping,
// the length factor absorbed by z in [0, 1].
constexpr double kNoisePrefactor = 2.0;

// Diagonal of pref * Int_0^1 exp(-K u) W exp(-K^H u) du at one frequency.
std::pair<double, double> noise_integral(const Eigen::Matrix2cd& k_gen,
                                         const Eigen::Matrix2cd& kernel,
                                         int order) {
    const QuadratureRule& rule = gauss_legendre(order);
    cd p11(0, 0), p22(0, 0);
    for (int i = 0; i < order; ++i) {
        const Eigen::Matrix2cd e = transfer_matrix(-rule.nodes[i] * k_gen);
        const Eigen::Matrix2cd m = e * kernel * e.adjoint();
        p11 += rule.weights[i] * m(0, 0);
        p22 += rule.weights[i] * m(1, 1);
    }
    p11 *= kNoisePrefactor;
    p22 *= kNoisePrefactor;
    for (const cd& p : {p11, p22}) {
        if (std::abs(p.imag()) > 1e-10 * std::max(1.0, std::abs(p.real())))
            throw QuadratureNotConverged("noise scalar has non-negligible imaginary part "
                                         + std::to_string(p.imag()));
    }
    return {p11.real(), p22.real()};
}

std::pair<double, double> converged_noise(const Eigen::Matrix2cd& k_gen,
                                          const Eigen::Matrix2cd& kernel,
                                          int order) {
    const auto coarse = noise_integral(k_gen, kernel, order);
    const auto fine = noise_integral(k_gen, kernel, 2 * order);
    const auto rel = [](double a, double b) {
        return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
    };
    if (rel(coarse.first, fine.first) > 1e-8 || rel(coarse.second, fine.second) > 1e-8)
        throw QuadratureNotConverged("noise integral not converged at quadrature order "
                                     + std::to_string(order) + " vs " + std::to_string(2 * order));
    return fine;
}

} // namespace

Eigen::Matrix2cd propagation_generator(const PhysicalConfig& config,
                                       const FluctuationSystem& fs, double omega) {
    const ScaledSystem s = scale_system(config, fs);
    return generator_from_lu(s, resolvent_lu(s, omega / s.gamma));
}

Eigen::Matrix2cd transfer_matrix(const Eigen::Matrix2cd& g) {
    if (!g.allFinite()) throw ValidationError("transfer_matrix: non-finite generator");
    const cd mu = 0.5 * (g(0, 0) + g(1, 1));
    const cd half_diff = 0.5 * (g(0, 0) - g(1, 1));
    const cd s2 = half_diff * half_diff + g(0, 1) * g(1, 0);
    const cd s = std::sqrt(s2);
    const double scale = std::max(1.0, g.cwiseAbs().maxCoeff());
    const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
    if (std::abs(2.0 * s) < 1e-8 * scale) {
        // Near-degenerate eigenvalues: sinh(s)/s by series.
        const cd sinhc = 1.0 + s2 / 6.0 + s2 * s2 / 120.0;
        return std::exp(mu) * (std::cosh(s) * id + sinhc * (g - mu * id));
    }
    // Spectral form; evaluating exp at each eigenvalue separately stays
    // accurate when the eigenvalues differ by hundreds.
    const cd lp = mu + s, lm = mu - s;
    return (std::exp(lp) * (g - lm * id) - std::exp(lm) * (g - lp * id)) / (2.0 * s);
}

LangevinDiffusion langevin_diffusion(const PhysicalConfig& config,
                                     const FluctuationSystem& fs,
                                     double omega, int quad_order) {
    if (quad_order < 2) throw ValidationError("quad_order must be >= 2");
    const ScaledSystem s = scale_system(config, fs);
    const double w = omega / s.gamma;

    const auto lu_plus = resolvent_lu(s, w);
    const auto lu_minus = resolvent_lu(s, -w);
    const auto plus = converged_noise(generator_from_lu(s, lu_plus),
                                      noise_kernel(s, lu_plus), quad_order);
    const auto minus = converged_noise(generator_from_lu(s, lu_minus),
                                       noise_kernel(s, lu_minus), quad_order);
    LangevinDiffusion out;
    out.aa_dag = plus.first;    // seed channel at +omega
    out.dag_aa = minus.first;   // seed channel at -omega
    out.bdag_b = plus.second;   // conjugate channel at +omega
    out.b_bdag = minus.second;  // conjugate channel at -omega
    return out;
}

TransferSolution solve_transfer(const PhysicalConfig& config,
                                const FluctuationSystem& fs,
                                double omega, int quad_order,
                                bool include_langevin) {
    const ScaledSystem s = scale_system(config, fs);
    const double w = omega / s.gamma;
    const auto lu_plus = resolvent_lu(s, w);
    const auto lu_minus = resolvent_lu(s, -w);
    const Eigen::Matrix2cd k_plus = generator_from_lu(s, lu_plus);
    const Eigen::Matrix2cd k_minus = generator_from_lu(s, lu_minus);

    TransferSolution ts;
    ts.omega = omega;
    ts.abcd = transfer_matrix(k_plus);
    ts.abcd_conj = transfer_matrix(k_minus).conjugate();
    if (include_langevin) {
        const auto plus = converged_noise(k_plus, noise_kernel(s, lu_plus), quad_order);
        const auto minus = converged_noise(k_minus, noise_kernel(s, lu_minus), quad_order);
        ts.diff_aa_dag = plus.first;
        ts.diff_dag_aa = minus.first;
        ts.diff_bdag_b = plus.second;
        ts.diff_b_bdag = minus.second;
    } else {
        ts.diff_aa_dag = ts.diff_dag_aa = ts.diff_bdag_b = ts.diff_b_bdag = 0.0;
    }
    return ts;
}

} // namespace fwm
