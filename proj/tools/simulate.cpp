// Command-line front end: presets, parameter sweeps, CSV output, and the
// two-photon-detuning optimizer.

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fwm/errors.hpp"
#include "fwm/sweep.hpp"

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// "axis:start:stop:points:scale" with start/stop in ordinary Hz.
fwm::SweepSpec parse_sweep_token(const std::string& token) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : token) {
        if (ch == ':') { parts.push_back(cur); cur.clear(); }
        else cur += ch;
    }
    parts.push_back(cur);
    if (parts.size() != 5)
        throw fwm::ValidationError("sweep must be axis:start:stop:points:scale, got '" + token + "'");
    fwm::SweepSpec spec;
    spec.axis = fwm::parse_axis(parts[0]);
    try {
        spec.start = kTwoPi * std::stod(parts[1]);
        spec.stop = kTwoPi * std::stod(parts[2]);
        spec.points = std::stoi(parts[3]);
    } catch (const std::exception&) {
        throw fwm::ValidationError("bad sweep numbers in '" + token + "'");
    }
    if (parts[4] == "linear") spec.scale = fwm::SweepScale::linear;
    else if (parts[4] == "log") spec.scale = fwm::SweepScale::log;
    else throw fwm::ValidationError("sweep scale must be linear or log");
    fwm::validate(spec);
    return spec;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Four-wave-mixing simulator for a pump-driven double-Lambda medium"};

    std::string config_path, preset, out_path;
    std::vector<std::string> sweep_tokens;
    bool no_langevin = false, pin_sigma22 = false, do_optimize = false;
    int quad_order = 0;
    double omega_fixed_hz = -1.0;

    app.add_option("--config", config_path, "key = value parameter file (frequencies in Hz)");
    app.add_option("--preset", preset, "one of: fig2, fig3a, fig3b, fig4, fig5, fig6");
    app.add_option("--sweep", sweep_tokens,
                   "axis:start:stop:points:scale (Hz; up to 2, outer first; replaces preset sweeps)")
        ->expected(0, 2);
    app.add_flag("--no-langevin", no_langevin, "drop the atomic Langevin noise terms");
    app.add_flag("--pin-sigma22", pin_sigma22,
                 "no-pump calibration mode: all population pinned in |2>");
    app.add_option("--quad-order", quad_order, "Gauss-Legendre order (16/32/64/128/256)");
    app.add_option("--omega-fixed", omega_fixed_hz,
                   "analysis frequency in Hz when omega is not swept");
    app.add_flag("--optimize-delta", do_optimize,
                 "report the two-photon detuning minimizing the inseparability at --omega-fixed");
    app.add_option("--out", out_path, "output CSV path");

    CLI11_PARSE(app, argc, argv);

    try {
        fwm::RunManifest manifest;
        if (!preset.empty()) manifest = fwm::preset_manifest(preset);
        if (!config_path.empty())
            manifest.config = fwm::load_config_file(config_path, manifest.config);
        if (!sweep_tokens.empty()) {
            manifest.sweeps.clear();
            for (const auto& token : sweep_tokens)
                manifest.sweeps.push_back(parse_sweep_token(token));
        }
        if (no_langevin) manifest.langevin_enabled = false;
        if (pin_sigma22) manifest.pin_sigma22 = true;
        if (quad_order > 0) manifest.quad_order = quad_order;
        if (omega_fixed_hz >= 0) manifest.omega_fixed = kTwoPi * omega_fixed_hz;
        if (!out_path.empty()) manifest.output_path = out_path;
        if (manifest.output_path.empty()) manifest.output_path = "sweep.csv";

        if (do_optimize) {
            const double omega = (omega_fixed_hz >= 0) ? kTwoPi * omega_fixed_hz : kTwoPi * 1e6;
            try {
                const fwm::DeltaOptimum opt = fwm::optimize_delta(
                    manifest.config, omega, manifest.langevin_enabled, manifest.quad_order);
                std::printf("delta_opt_hz = %.6g\ninseparability = %.6g\n",
                            opt.delta / kTwoPi, opt.inseparability);
            } catch (const fwm::NoMinimum& e) {
                std::printf("no minimum: %s\n", e.what());
            }
            return 0;
        }

        fwm::validate(manifest);
        const fwm::SweepResult result = fwm::run_sweep(manifest);
        fwm::write_csv_file(manifest.output_path, result);

        std::size_t failed = 0;
        for (const auto& e : result.errors)
            if (!e.empty()) ++failed;
        std::printf("wrote %zu records to %s", result.records.size(),
                    manifest.output_path.c_str());
        if (failed > 0) std::printf(" (%zu flagged rows)", failed);
        std::printf("\n");
        return 0;
    } catch (const fwm::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
