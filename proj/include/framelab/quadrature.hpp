#pragma once

#include <functional>

namespace framelab {

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0; // achieved absolute error estimate
    int intervals = 0;  // final interval count
    bool converged = false;
};

// Adaptive Gauss(7)/Kronrod(15) bisection to an absolute tolerance. Never
// throws; callers decide what a failed `converged` means. Deterministic:
// refinement always splits the worst interval, ties by lower endpoint.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a,
                                    double b, double abs_tol = 1e-11,
                                    int max_intervals = 4000);

// Same, but throws NumericError (carrying the achieved error) on failure.
double integrate_or_throw(const std::function<double(double)>& f, double a, double b,
                          double abs_tol = 1e-11, int max_intervals = 4000);

} // namespace framelab
