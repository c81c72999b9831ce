#ifndef FWM_TEST_UTIL_HPP
#define FWM_TEST_UTIL_HPP

#include "fwm/config.hpp"
#include "fwm/sweep.hpp"

namespace fwm::test {

constexpr double kTwoPi = 6.283185307179586476925286766559;

inline double hz(double f) { return kTwoPi * f; }

// Parameter sets of the built-in presets, without the sweep machinery.
inline PhysicalConfig fig_config(const std::string& name) {
    return preset_manifest(name).config;
}

} // namespace fwm::test

#endif
