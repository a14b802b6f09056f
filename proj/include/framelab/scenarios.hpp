#pragma once

#include "framelab/frames.hpp"

#include <string>

namespace framelab {

// The concrete charts, metrics and frame families used throughout: an
// inertial cylindrical/Cartesian laboratory, the rigid rotating platform, a
// pair of opposite boosts, and the hyperbolic-angle rotating family.

double default_r_min(); // axis exclusion; FRAMELAB_RMIN overrides

Chart cylindrical_chart(double r_min = default_r_min());   // (t, r, phi, z)
Chart cartesian_chart();                                   // (t, x, y, z)

// g = dt(x)dt - dr(x)dr - r^2 dphi(x)dphi - dz(x)dz
MetricField minkowski_cylindrical(double r_min = default_r_min());
MetricField minkowski_cartesian();

// Default validation grid for a frame on the given chart: t = 0, eleven
// samples per spatial axis inside [r_lo, r_hi] x [0, 2pi) x [-1, 1].
GridSpec default_cylindrical_grid(double r_lo, double r_hi, std::size_t n = 11);
GridSpec default_cartesian_grid(double half_width = 1.0, std::size_t n = 11);

// I = d/dt on either chart.
FrameField inertial_frame(const MetricField& g);

// Rigid rotation with angular velocity omega:
// P = (1 - w^2 r^2)^{-1/2} d/dt + w (1 - w^2 r^2)^{-1/2} d/dphi on r < 1/w.
// The d/dphi coefficient is the one forced by g(P,P) = 1.
FrameField rotating_frame(const MetricField& g_cyl, double omega);

// Co-rotating coordinates: that = t, rhat = r, phihat = phi - w t, zhat = z.
// source = hatted chart, target = cylindrical chart.
ChartMap rotating_chart(double omega, double r_min = default_r_min());

// Metric of Minkowski space in the co-rotating chart (pullback of Eqs above):
// g = (1 - w^2 r^2) dt(x)dt - w r^2 (dt(x)dphi + dphi(x)dt) - dr(x)dr - r^2 dphi(x)dphi - dz(x)dz.
MetricField rotating_metric(double omega, double r_min = default_r_min());

// Inertial frame moving with speed v along x: gamma (d/dt + v d/dx).
// Pass -v for the opposite boost. Requires |v| < 1.
FrameField boosted_frame(const MetricField& g_cart, double v);

// Lorentz boost chart along x with velocity v: source = primed chart,
// target = Cartesian lab chart.
ChartMap boost_chart(double v);

// Radial hyperbolic-angle profile W(r) for the Trocheries-Takeno family,
// given as an expression in r (coordinate index 1).
struct RotationRateProfile {
    ScalarField rate; // W(r)
    std::string description;
};

RotationRateProfile constant_profile(double value);
// W(r) = arcsinh(w r / sqrt(1 - w^2 r^2)) / r; substituting it below makes
// the family coincide with rigid rotation of angular velocity -w.
RotationRateProfile matched_profile(double omega);
// Pointwise value of the matched profile.
double matched_rate(double omega, double r);

// Pbar = cosh(W r) d/dt - (sinh(W r)/r) d/dphi on an annulus r in (r_min, r_max);
// unit timelike for any profile since cosh^2 - sinh^2 = 1.
FrameField trocheries_frame(const MetricField& g_cyl, const RotationRateProfile& profile,
                            double r_max);

// tbar = t cosh(W r) - r phi sinh(W r), phibar = phi cosh(W r) - (t/r) sinh(W r),
// rbar = r, zbar = z. source = barred chart, target = cylindrical chart. The
// map is a hyperbolic rotation in (t, r phi) at fixed r, and r passes through
// unchanged, so its closed-form inverse works for any radial profile. The
// working domain is an annulus: the 1/r factor excludes the axis.
ChartMap trocheries_chart(const RotationRateProfile& profile,
                          double r_min = default_r_min(), double r_max = 1.0);

struct RimSpeedReport {
    double hyperbolic_sine = 0; // sinh(W(Rbar) Rbar): printed rim condition, = 1 when met
    double rim_speed = 0;       // tanh(W(Rbar) Rbar): the speed the frame actually has
    bool condition_met = false; // |sinh - 1| < tol
};

// Evaluates the rim condition sinh(W r) -> 1 at r = r_rim and reports the
// speed it implies; decides nothing about which quantity was intended.
RimSpeedReport rim_speed_constraint(const RotationRateProfile& profile, double r_rim,
                                    double tol = 1e-12);

struct FrameComparison {
    double max_deviation = 0;
    Point at{};
    int component = 0;
    // true: Pbar(matched W from +w) equals the rigid frame with -w (the two
    // families carry opposite rotation senses as written).
    bool matched_with_flipped_sense = false;
};

// Componentwise deviation of the Trocheries frame from the rigid rotating
// frame over a radial grid, with the rotation sense aligned.
FrameComparison compare_trocheries_to_rigid(double omega,
                                            const RotationRateProfile& profile,
                                            const GridSpec& grid);

} // namespace framelab
