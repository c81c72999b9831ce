#ifndef FWM_CONFIG_HPP
#define FWM_CONFIG_HPP

#include <string>

namespace fwm {

/// All atomic and laser parameters, in angular frequencies (rad/s) and meters.
///
/// The medium is a pump-driven double-Lambda four-level system: ground states
/// |1>,|2>, excited states |3>,|4>. The strong pump couples 1-3 and 2-4 with
/// equal Rabi frequency; the weak seed mode couples 2-3 and the conjugate mode
/// couples 1-4.
struct PhysicalConfig {
    double gamma_big;      // excited-state population decay rate
    double gamma_small;    // ground-state coherence decay rate
    double omega_rabi;     // pump Rabi frequency
    double delta_big;      // one-photon pump detuning from 1-3
    double delta_small;    // two-photon (Raman) detuning
    double omega_zero;     // level offset w21 - w43
    double optical_depth;  // N * sigma0 * L, dimensionless
    double length;         // medium length in meters (unit bookkeeping only)

    PhysicalConfig();  // defaults: Rb D1 cold-atom set, OD = 150
};

// Throws ValidationError naming the offending field.
void validate(const PhysicalConfig& config);

/// Derived quantities used downstream.
struct DerivedConstants {
    double coupling;  // kappa = OD * Gamma / 4, rad/s; dimensionless exponent
                      // of the propagation generator once lengths are in [0,1]
    double tau;       // 2G^2 + 4W^2 + 4w0^2 + 8D^2 + 8D*w0, (rad/s)^2;
                      // normalization inside the diffusion matrices
};

DerivedConstants derive_constants(const PhysicalConfig& config);

/// Config in internal units: rates divided by gamma_big, lengths by length.
/// Keeps the scale factors so the conversion is invertible.
struct InternalConfig {
    double gamma_small;
    double omega_rabi;
    double delta_big;
    double delta_small;
    double omega_zero;
    double optical_depth;
    double gamma_scale;   // rad/s per internal rate unit
    double length_scale;  // meters per internal length unit
};

InternalConfig to_internal(const PhysicalConfig& config);
PhysicalConfig from_internal(const InternalConfig& internal);

// Structured-text config file, one "key = value" per line, '#' comments.
// Keys: gamma_big_hz, gamma_small_hz, omega_rabi_hz, delta_big_hz,
// delta_small_hz, omega_zero_hz, optical_depth, length_m. The *_hz values are
// ordinary frequencies; the loader multiplies them by 2*pi. Missing keys keep
// the values already in `base`; unknown keys are an error.
PhysicalConfig load_config_file(const std::string& path, const PhysicalConfig& base = PhysicalConfig());
PhysicalConfig parse_config_text(const std::string& text, const PhysicalConfig& base = PhysicalConfig());

} // namespace fwm

#endif
