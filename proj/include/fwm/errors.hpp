#ifndef FWM_ERRORS_HPP
#define FWM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fwm {

// Base class so callers can catch everything from this library at once.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    // Short stable tag, used e.g. in sweep CSV error columns.
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// A config field is non-finite or outside its allowed range.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error("validation", what) {}
};

// The pump-only linear system has no unique solution (Omega = 0 or
// near-degenerate detunings).
class SingularSystem : public Error {
public:
    explicit SingularSystem(const std::string& what) : Error("singular_system", what) {}
};

// Time integration still drifting at t_final.
class NonConvergence : public Error {
public:
    explicit NonConvergence(const std::string& what) : Error("non_convergence", what) {}
};

// (M1 + omega I) is ill-conditioned: omega sits on a dressed-state pole.
class ResonantSingularity : public Error {
public:
    explicit ResonantSingularity(const std::string& what) : Error("resonant_singularity", what) {}
};

// Doubling the Gauss-Legendre order still changes the result.
class QuadratureNotConverged : public Error {
public:
    explicit QuadratureNotConverged(const std::string& what) : Error("quadrature_not_converged", what) {}
};

// Argument must be strictly positive (dB conversion).
class NonPositive : public Error {
public:
    explicit NonPositive(const std::string& what) : Error("non_positive", what) {}
};

// The inseparability never drops below 1 inside the optimization bracket.
class NoMinimum : public Error {
public:
    explicit NoMinimum(const std::string& what) : Error("no_minimum", what) {}
};

} // namespace fwm

#endif
