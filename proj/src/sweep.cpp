#include "fwm/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <ostream>
#include <thread>

#include "fwm/errors.hpp"
#include "fwm/steady_state.hpp"

namespace fwm {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
} // namespace

SweepAxis parse_axis(const std::string& name) {
    if (name == "delta_small") return SweepAxis::delta_small;
    if (name == "omega") return SweepAxis::omega;
    if (name == "gamma_small") return SweepAxis::gamma_small;
    if (name == "omega_rabi") return SweepAxis::omega_rabi;
    if (name == "delta_big") return SweepAxis::delta_big;
    throw ValidationError("unknown sweep axis '" + name + "'");
}

const char* axis_name(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::delta_small: return "delta_small";
        case SweepAxis::omega: return "omega";
        case SweepAxis::gamma_small: return "gamma_small";
        case SweepAxis::omega_rabi: return "omega_rabi";
        case SweepAxis::delta_big: return "delta_big";
    }
    return "?";
}

void validate(const SweepSpec& spec) {
    if (!(spec.start < spec.stop))
        throw ValidationError("sweep start must be < stop");
    if (spec.points < 2)
        throw ValidationError("sweep needs at least 2 points");
    if (spec.scale == SweepScale::log && !(spec.start > 0))
        throw ValidationError("log sweep requires start > 0");
}

std::vector<double> sweep_grid(const SweepSpec& spec) {
    validate(spec);
    std::vector<double> grid(spec.points);
    const int n = spec.points;
    for (int i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / (n - 1);
        if (spec.scale == SweepScale::linear)
            grid[i] = spec.start * (1.0 - t) + spec.stop * t;
        else
            grid[i] = std::exp(std::log(spec.start) * (1.0 - t) + std::log(spec.stop) * t);
    }
    grid.front() = spec.start;
    grid.back() = spec.stop;
    return grid;
}

void validate(const RunManifest& manifest) {
    validate(manifest.config);
    if (manifest.sweeps.size() > 2)
        throw ValidationError("at most 2 sweep axes");
    for (const auto& s : manifest.sweeps) validate(s);
    switch (manifest.quad_order) {
        case 16: case 32: case 64: case 128: case 256: break;
        default: throw ValidationError("quad_order must be one of 16, 32, 64, 128, 256");
    }
    if (!std::isfinite(manifest.omega_fixed))
        throw ValidationError("omega_fixed must be finite");
}

namespace {

// Applies an axis value to a point: either a config field or the analysis
// frequency.
void apply_axis(SweepAxis axis, double value, PhysicalConfig& config, double& omega) {
    switch (axis) {
        case SweepAxis::delta_small: config.delta_small = value; break;
        case SweepAxis::omega: omega = value; break;
        case SweepAxis::gamma_small: config.gamma_small = value; break;
        case SweepAxis::omega_rabi: config.omega_rabi = value; break;
        case SweepAxis::delta_big: config.delta_big = value; break;
    }
}

unsigned worker_count(std::size_t total) {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("SIM_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1) n = std::min(n, static_cast<unsigned>(cap));
    }
    return static_cast<unsigned>(std::min<std::size_t>(n, total));
}

SpectrumRecord nan_record(double delta, double omega) {
    SpectrumRecord r;
    r.delta_small = delta;
    r.omega = omega;
    r.gain_a = r.gain_b = kNaN;
    r.s_x_minus = r.s_p_plus = r.inseparability = kNaN;
    r.s_xa = r.s_pa = r.s_xb = r.s_pb = kNaN;
    return r;
}

bool record_finite(const SpectrumRecord& r) {
    return std::isfinite(r.gain_a) && std::isfinite(r.gain_b)
        && std::isfinite(r.s_x_minus) && std::isfinite(r.s_p_plus)
        && std::isfinite(r.inseparability) && std::isfinite(r.s_xa)
        && std::isfinite(r.s_pa) && std::isfinite(r.s_xb) && std::isfinite(r.s_pb);
}

// Evaluation with the sanctioned retries: quadrature refinement near gain
// poles, a one-off omega nudge at an exact dressed-state pole.
SpectrumRecord evaluate_with_retries(const PhysicalConfig& config, double omega,
                                     bool langevin, int quad_order, bool pinned) {
    int order = quad_order;
    bool nudged = false;
    double w = omega;
    for (;;) {
        try {
            SpectrumRecord r = evaluate_point(config, w, langevin, order, pinned);
            r.omega = omega;  // report the requested grid coordinate
            return r;
        } catch (const QuadratureNotConverged&) {
            if (order >= 1024) throw;
            order *= 2;
        } catch (const ResonantSingularity&) {
            if (nudged) throw;
            nudged = true;
            w += 1e-6 * config.gamma_big;
        }
    }
}

} // namespace

SpectrumRecord evaluate_point(const PhysicalConfig& config, double omega,
                              bool langevin, int quad_order, bool pin_sigma22) {
    const SteadyState ss = pin_sigma22 ? pinned_sigma22_state() : solve_steady_state(config);
    const FluctuationSystem fs = build_fluctuation_system(config, ss);

    const TransferSolution ts = solve_transfer(config, fs, omega, quad_order, langevin);
    const TransferSolution ts0 =
        (omega == 0.0) ? ts : solve_transfer(config, fs, 0.0, quad_order, false);

    SpectrumRecord r;
    r.delta_small = config.delta_small;
    r.omega = omega;
    std::tie(r.gain_a, r.gain_b) = gains(ts0);
    std::tie(r.s_xa, r.s_xb) = single_beam_spectra(ts);
    r.s_pa = r.s_xa;  // no anomalous correlators: phase-insensitive added noise
    r.s_pb = r.s_xb;
    std::tie(r.s_x_minus, r.s_p_plus) = correlation_spectra(ts, ts0);
    r.inseparability = inseparability(r.s_x_minus, r.s_p_plus);
    return r;
}

SweepResult run_sweep(const RunManifest& manifest) {
    validate(manifest);

    std::vector<double> outer{0.0}, inner{0.0};
    bool has_outer = false, has_inner = false;
    if (!manifest.sweeps.empty()) {
        outer = sweep_grid(manifest.sweeps[0]);
        has_outer = true;
    }
    if (manifest.sweeps.size() > 1) {
        inner = sweep_grid(manifest.sweeps[1]);
        has_inner = true;
    }
    const std::size_t total = outer.size() * inner.size();

    SweepResult result;
    result.records.resize(total);
    result.errors.assign(total, "");

    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= total) return;
            PhysicalConfig config = manifest.config;
            double omega = manifest.omega_fixed;
            if (has_outer)
                apply_axis(manifest.sweeps[0].axis, outer[i / inner.size()], config, omega);
            if (has_inner)
                apply_axis(manifest.sweeps[1].axis, inner[i % inner.size()], config, omega);
            try {
                result.records[i] = evaluate_with_retries(
                    config, omega, manifest.langevin_enabled, manifest.quad_order,
                    manifest.pin_sigma22);
                if (!record_finite(result.records[i]))
                    result.errors[i] = "non_finite";
            } catch (const Error& e) {
                result.records[i] = nan_record(config.delta_small, omega);
                result.errors[i] = e.code();
            }
        }
    };

    const unsigned workers = worker_count(total);
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    return result;
}

namespace {

void append_number(std::string& line, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    line += buf;
}

// dB of a spectrum value; non-positive or non-finite values print as nan.
void append_db(std::string& line, double v) {
    if (v > 0 && std::isfinite(v))
        append_number(line, 10.0 * std::log10(v));
    else
        line += "nan";
}

} // namespace

void write_csv(std::ostream& out, const SweepResult& result) {
    out << "delta_small_hz,omega_hz,gain_a,gain_b,s_x_minus_db,s_p_plus_db,"
           "inseparability,s_xa,s_pa,s_xb,s_pb,error\n";
    for (std::size_t i = 0; i < result.records.size(); ++i) {
        const SpectrumRecord& r = result.records[i];
        std::string line;
        line.reserve(256);
        append_number(line, r.delta_small / kTwoPi); line += ',';
        append_number(line, r.omega / kTwoPi); line += ',';
        append_number(line, r.gain_a); line += ',';
        append_number(line, r.gain_b); line += ',';
        append_db(line, r.s_x_minus); line += ',';
        append_db(line, r.s_p_plus); line += ',';
        append_number(line, r.inseparability); line += ',';
        append_number(line, r.s_xa); line += ',';
        append_number(line, r.s_pa); line += ',';
        append_number(line, r.s_xb); line += ',';
        append_number(line, r.s_pb); line += ',';
        line += result.errors[i];
        line += '\n';
        out << line;
    }
}

void write_csv_file(const std::string& path, const SweepResult& result) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot open output file: " + path);
    write_csv(out, result);
}

DeltaOptimum optimize_delta(const PhysicalConfig& config, double omega_fixed,
                            bool langevin, int quad_order) {
    validate(config);
    if (!(omega_fixed > 0))
        throw ValidationError("optimize_delta requires omega_fixed > 0");

    auto insep_at = [&](double delta) {
        PhysicalConfig c = config;
        c.delta_small = delta;
        try {
            return evaluate_point(c, omega_fixed, langevin, quad_order).inseparability;
        } catch (const Error&) {
            return std::numeric_limits<double>::infinity();
        }
    };
    auto gain_at = [&](double delta) {
        PhysicalConfig c = config;
        c.delta_small = delta;
        try {
            return evaluate_point(c, 0.0, false, quad_order).gain_a;
        } catch (const Error&) {
            return -std::numeric_limits<double>::infinity();
        }
    };

    // Seed near the gain maximum, then bracket +/- omega_rabi around it.
    const int coarse_n = 801;
    const double rabi = config.omega_rabi;
    double gain_best = -std::numeric_limits<double>::infinity();
    double delta_gmax = 0.0;
    for (int i = 0; i < coarse_n; ++i) {
        const double d = -rabi + 2.0 * rabi * i / (coarse_n - 1);
        const double g = gain_at(d);
        if (g > gain_best) { gain_best = g; delta_gmax = d; }
    }

    const double lo = delta_gmax - rabi, hi = delta_gmax + rabi;
    double best = std::numeric_limits<double>::infinity();
    int best_i = 0;
    for (int i = 0; i < coarse_n; ++i) {
        const double d = lo + (hi - lo) * i / (coarse_n - 1);
        const double v = insep_at(d);
        if (v < best) { best = v; best_i = i; }
    }
    if (!(best < 1.0))
        throw NoMinimum("inseparability >= 1 everywhere in ["
                        + std::to_string(lo) + ", " + std::to_string(hi) + "] rad/s");

    // Golden section inside +/- 2 coarse steps of the scan minimum.
    const double step = (hi - lo) / (coarse_n - 1);
    double a = lo + step * std::max(0, best_i - 2);
    double b = lo + step * std::min(coarse_n - 1, best_i + 2);
    const double tol = kTwoPi * 0.1e6;
    const double invphi = 0.6180339887498949;
    double x1 = b - invphi * (b - a), x2 = a + invphi * (b - a);
    double f1 = insep_at(x1), f2 = insep_at(x2);
    while (b - a > tol) {
        if (f1 <= f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = insep_at(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = insep_at(x2);
        }
    }
    DeltaOptimum opt;
    opt.delta = 0.5 * (a + b);
    opt.inseparability = insep_at(opt.delta);
    return opt;
}

std::vector<std::string> preset_names() {
    return {"fig2", "fig3a", "fig3b", "fig4", "fig5", "fig6"};
}

RunManifest preset_manifest(const std::string& name) {
    RunManifest m;
    PhysicalConfig& c = m.config;  // defaults: Gamma/2pi = 5.7 MHz,
                                   // gamma/2pi = 10 kHz, w0/2pi = 3 GHz, OD = 150
    const auto hz = [](double f) { return kTwoPi * f; };

    if (name == "fig2") {
        c.omega_rabi = hz(0.3e9);
        c.delta_big = hz(1e9);
        m.sweeps = {{SweepAxis::delta_small, hz(-0.2e9), hz(1.5e9), 2000, SweepScale::linear}};
        m.omega_fixed = 0.0;
    } else if (name == "fig3a") {
        c.omega_rabi = hz(0.3e9);
        c.delta_big = hz(0.3e9);
        c.delta_small = hz(-48e6);
        m.sweeps = {{SweepAxis::omega, hz(0.01e6), hz(100e6), 200, SweepScale::log}};
    } else if (name == "fig3b" || name == "fig4") {
        c.omega_rabi = hz(2e9);
        c.delta_big = hz(2e9);
        c.delta_small = hz(-217e6);
        m.sweeps = {{SweepAxis::omega, hz(0.01e6), hz(100e6), 200, SweepScale::log}};
    } else if (name == "fig5") {
        c.omega_rabi = hz(2e9);
        c.delta_big = hz(2e9);
        c.delta_small = hz(-217e6);
        m.omega_fixed = hz(1e6);
        m.sweeps = {{SweepAxis::gamma_small, hz(10.0), hz(100e6), 81, SweepScale::log}};
    } else if (name == "fig6") {
        // Hot-vapor parameter set through the cold-atom model:
        // OD = N * sigma0 * L = 4e12 cm^-3 * 1e-9 cm^2 * 1.25 cm.
        c.omega_rabi = hz(330e6);
        c.delta_big = hz(700e6);
        c.gamma_small = hz(500e3);
        c.optical_depth = 5000.0;
        c.length = 0.0125;
        m.sweeps = {{SweepAxis::delta_small, hz(-0.5e9), hz(1.2e9), 2000, SweepScale::linear}};
        m.omega_fixed = 0.0;
    } else {
        throw ValidationError("unknown preset '" + name + "'");
    }
    m.output_path = name + ".csv";
    return m;
}

} // namespace fwm
