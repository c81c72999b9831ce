#include "fwm/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "fwm/errors.hpp"

namespace fwm {

namespace {

// Legendre P_n and P_n' at x via the three-term recurrence.
std::pair<double, double> legendre(int n, double x) {
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    const double dp = n * (x * p1 - p0) / (x * x - 1.0);
    return {p1, dp};
}

QuadratureRule compute_rule(int order) {
    QuadratureRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    for (int k = 0; k < order; ++k) {
        // Chebyshev-asymptotic initial guess, then Newton.
        double x = std::cos(M_PI * (k + 0.75) / (order + 0.5));
        double p, dp;
        for (int it = 0; it < 100; ++it) {
            std::tie(p, dp) = legendre(order, x);
            const double step = p / dp;
            x -= step;
            if (std::abs(step) < 1e-15) break;
        }
        std::tie(p, dp) = legendre(order, x);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        // Shift [-1,1] -> [0,1]; nodes come out descending, store ascending.
        rule.nodes[order - 1 - k] = 0.5 * (x + 1.0);
        rule.weights[order - 1 - k] = 0.5 * w;
    }
    return rule;
}

} // namespace

const QuadratureRule& gauss_legendre(int order) {
    if (order < 1) throw ValidationError("quadrature order must be >= 1");
    static std::map<int, QuadratureRule> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, compute_rule(order)).first;
    return it->second;
}

} // namespace fwm
