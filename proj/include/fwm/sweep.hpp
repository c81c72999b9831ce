#ifndef FWM_SWEEP_HPP
#define FWM_SWEEP_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "fwm/config.hpp"
#include "fwm/observables.hpp"

namespace fwm {

enum class SweepAxis { delta_small, omega, gamma_small, omega_rabi, delta_big };
enum class SweepScale { linear, log };

SweepAxis parse_axis(const std::string& name);
const char* axis_name(SweepAxis axis);

struct SweepSpec {
    SweepAxis axis = SweepAxis::delta_small;
    double start = 0;  // rad/s, inclusive
    double stop = 0;   // rad/s, inclusive
    int points = 2;
    SweepScale scale = SweepScale::linear;
};

// Throws ValidationError (start >= stop, points < 2, log with start <= 0).
void validate(const SweepSpec& spec);
std::vector<double> sweep_grid(const SweepSpec& spec);

struct RunManifest {
    PhysicalConfig config;
    std::vector<SweepSpec> sweeps;  // up to 2: outer first, inner second
    bool langevin_enabled = true;
    bool pin_sigma22 = false;   // bypass the pump-driven solve, sigma22 = 1
    int quad_order = 64;        // one of 16, 32, 64, 128, 256
    double omega_fixed = 0;     // analysis frequency when omega is not swept
    std::string output_path;
};

void validate(const RunManifest& manifest);

struct SweepResult {
    std::vector<SpectrumRecord> records;  // outer-major order
    std::vector<std::string> errors;      // per record; empty string = ok
};

// Evaluates every grid point (worker pool; SIM_THREADS caps the worker
// count). Per-point failures land in the error column instead of aborting.
SweepResult run_sweep(const RunManifest& manifest);

// One point through the full pipeline (steady state -> fluctuations ->
// transfer -> observables). Used by run_sweep and optimize_delta.
SpectrumRecord evaluate_point(const PhysicalConfig& config, double omega,
                              bool langevin, int quad_order, bool pin_sigma22 = false);

// Columns: delta_small_hz, omega_hz, gain_a, gain_b, s_x_minus_db,
// s_p_plus_db, inseparability, s_xa, s_pa, s_xb, s_pb, error.
void write_csv(std::ostream& out, const SweepResult& result);
void write_csv_file(const std::string& path, const SweepResult& result);

// Minimizes the inseparability at fixed analysis frequency over the
// two-photon detuning: coarse scan within +/- omega_rabi of the gain maximum,
// then golden-section to 2*pi*0.1 MHz. Throws NonConvergence ("NoMinimum")
// when the inseparability never drops below 1 in the bracket.
struct DeltaOptimum {
    double delta;          // rad/s
    double inseparability;
};
DeltaOptimum optimize_delta(const PhysicalConfig& config, double omega_fixed,
                            bool langevin = true, int quad_order = 64);

// Built-in parameter sets: fig2, fig3a, fig3b, fig4, fig5, fig6.
RunManifest preset_manifest(const std::string& name);
std::vector<std::string> preset_names();

} // namespace fwm

#endif
