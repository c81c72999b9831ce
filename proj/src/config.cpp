#include "fwm/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "fwm/errors.hpp"

namespace fwm {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

void require_finite(double value, const char* field) {
    if (!std::isfinite(value))
        throw ValidationError(std::string(field) + " must be finite");
}
} // namespace

PhysicalConfig::PhysicalConfig()
    : gamma_big(kTwoPi * 5.7e6),
      gamma_small(kTwoPi * 10e3),
      omega_rabi(0.0),
      delta_big(0.0),
      delta_small(0.0),
      omega_zero(kTwoPi * 3e9),
      optical_depth(150.0),
      length(0.01) {}

void validate(const PhysicalConfig& c) {
    require_finite(c.gamma_big, "gamma_big");
    require_finite(c.gamma_small, "gamma_small");
    require_finite(c.omega_rabi, "omega_rabi");
    require_finite(c.delta_big, "delta_big");
    require_finite(c.delta_small, "delta_small");
    require_finite(c.omega_zero, "omega_zero");
    require_finite(c.optical_depth, "optical_depth");
    require_finite(c.length, "length");
    if (c.gamma_big <= 0) throw ValidationError("gamma_big must be > 0");
    if (c.gamma_small < 0) throw ValidationError("gamma_small must be >= 0");
    if (c.omega_rabi < 0) throw ValidationError("omega_rabi must be >= 0");
    if (c.optical_depth < 0) throw ValidationError("optical_depth must be >= 0");
    if (c.length <= 0) throw ValidationError("length must be > 0");
}

DerivedConstants derive_constants(const PhysicalConfig& c) {
    validate(c);
    DerivedConstants out;
    out.coupling = c.optical_depth * c.gamma_big / 4.0;
    const double g = c.gamma_big, w = c.omega_rabi, d = c.delta_big, w0 = c.omega_zero;
    out.tau = 2 * g * g + 4 * w * w + 4 * w0 * w0 + 8 * d * d + 8 * d * w0;
    return out;
}

InternalConfig to_internal(const PhysicalConfig& c) {
    validate(c);
    InternalConfig i;
    i.gamma_small = c.gamma_small / c.gamma_big;
    i.omega_rabi = c.omega_rabi / c.gamma_big;
    i.delta_big = c.delta_big / c.gamma_big;
    i.delta_small = c.delta_small / c.gamma_big;
    i.omega_zero = c.omega_zero / c.gamma_big;
    i.optical_depth = c.optical_depth;
    i.gamma_scale = c.gamma_big;
    i.length_scale = c.length;
    return i;
}

PhysicalConfig from_internal(const InternalConfig& i) {
    PhysicalConfig c;
    c.gamma_big = i.gamma_scale;
    c.gamma_small = i.gamma_small * i.gamma_scale;
    c.omega_rabi = i.omega_rabi * i.gamma_scale;
    c.delta_big = i.delta_big * i.gamma_scale;
    c.delta_small = i.delta_small * i.gamma_scale;
    c.omega_zero = i.omega_zero * i.gamma_scale;
    c.optical_depth = i.optical_depth;
    c.length = i.length_scale;
    return c;
}

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

} // namespace

PhysicalConfig parse_config_text(const std::string& text, const PhysicalConfig& base) {
    PhysicalConfig c = base;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ValidationError("config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        double x;
        try {
            size_t used = 0;
            x = std::stod(val, &used);
            if (used != val.size()) throw std::invalid_argument(val);
        } catch (const std::exception&) {
            throw ValidationError("config line " + std::to_string(lineno) + ": bad number '" + val + "'");
        }
        if (key == "gamma_big_hz") c.gamma_big = kTwoPi * x;
        else if (key == "gamma_small_hz") c.gamma_small = kTwoPi * x;
        else if (key == "omega_rabi_hz") c.omega_rabi = kTwoPi * x;
        else if (key == "delta_big_hz") c.delta_big = kTwoPi * x;
        else if (key == "delta_small_hz") c.delta_small = kTwoPi * x;
        else if (key == "omega_zero_hz") c.omega_zero = kTwoPi * x;
        else if (key == "optical_depth") c.optical_depth = x;
        else if (key == "length_m") c.length = x;
        else throw ValidationError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    validate(c);
    return c;
}

PhysicalConfig load_config_file(const std::string& path, const PhysicalConfig& base) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), base);
}

} // namespace fwm
