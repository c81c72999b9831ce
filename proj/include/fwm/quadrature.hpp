#ifndef FWM_QUADRATURE_HPP
#define FWM_QUADRATURE_HPP

#include <vector>

namespace fwm {

struct QuadratureRule {
    std::vector<double> nodes;    // on [0, 1]
    std::vector<double> weights;  // sum to 1
};

// Gauss-Legendre rule shifted to [0, 1]. Cached per order; thread-safe.
const QuadratureRule& gauss_legendre(int order);

} // namespace fwm

#endif
