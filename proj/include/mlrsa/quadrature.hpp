#pragma once

#include <functional>
#include <stdexcept>

namespace mlrsa {

/// Thrown when adaptive refinement hits its subdivision budget before the
/// error estimate drops under the tolerance.  Carries the best estimate so
/// callers can still inspect how far off the request was.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& msg, double best, double err)
        : std::runtime_error(msg), best_estimate(best), error_estimate(err) {}

    double best_estimate;
    double error_estimate;
};

/// Adaptive Gauss-Kronrod 15(7) integration of f over [a, b].
///
/// Returns I with estimated |I - integral| <= tol * max(1, |I|).  The
/// subdivision order is deterministic for fixed inputs.  Requires a <= b
/// (throws std::invalid_argument otherwise); an empty interval yields 0.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-9);

}  // namespace mlrsa
