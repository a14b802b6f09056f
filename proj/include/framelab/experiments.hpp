#pragma once

#include "framelab/frames.hpp"
#include "framelab/quadrature.hpp"
#include "framelab/scenarios.hpp"

#include <vector>

namespace framelab {

// A spatial curve s in [0,1] -> chart point, with the time coordinate held
// fixed and the tangent available exactly (components are expressions in s).
class LoopPath {
public:
    LoopPath() = default;
    LoopPath(Chart chart, std::array<ScalarField, 4> position, bool closed);

    const Chart& chart() const { return chart_; }
    const std::array<ScalarField, 4>& position() const { return pos_; }
    bool closed() const { return closed_; }

    Point at(double s) const;
    void require_closed() const; // throws ValidationError when not a loop

    // r = R, phi = phi0 + 2 pi s (or reversed), t and z fixed.
    static LoopPath circle(const Chart& chart, double radius, double phi0 = 0.0,
                           double t0 = 0.0, double z0 = 0.0);
    // polar-form ellipse about the axis: r(phi) = a b / sqrt((b cos phi)^2 + (a sin phi)^2).
    static LoopPath ellipse(const Chart& chart, double a, double b, double t0 = 0.0,
                            double z0 = 0.0);
    // open arc at fixed radius: phi = phi0 + s * dphi.
    static LoopPath arc(const Chart& chart, double radius, double phi0, double dphi,
                        double t0 = 0.0, double z0 = 0.0);

private:
    Chart chart_;
    std::array<ScalarField, 4> pos_{};
    bool closed_ = false;
};

// Simultaneity shift of the standard convention: (g_{0i}/g_{00}) dx^i at x.
// Requires g_00 > 0 there.
double einstein_offset(const MetricField& g, const Point& x,
                       const std::array<double, 3>& dx_spatial);

// Holonomy of the synchronization convention around a closed spatial loop:
//   -contour_integral (g_{0i}/g_{00}) dx^i
// by adaptive quadrature; equals 2 pi w R^2 / (1 - w^2 R^2) on the periphery
// circle of the co-rotating chart.
double loop_sync_defect(const MetricField& g, const LoopPath& loop,
                        double abs_tol = 1e-11);

struct ClockChainResult {
    int clock_count = 0;
    std::vector<double> link_offsets; // amount each next clock is set ahead
    double defect = 0;                // sum of link offsets
    double closed_form = 0;           // 2 pi w R^2 / (1 - w^2 R^2), signed
    double relative_error = 0;
};

// n clocks equally spaced on the periphery circle at radius R of the
// co-rotating chart, each synchronized against the previous; direction = +-1.
ClockChainResult clock_chain(double omega, double radius, int n, int direction = 1,
                             double r_min = default_r_min());

struct SagnacResult {
    double T_co = 0;        // coordinate round-trip time, signal chasing the rotation
    double T_counter = 0;   // opposite sense
    double tau_co = 0;      // proper times of a periphery clock
    double tau_counter = 0;
    double L = 0;           // rest length of the periphery
    double c_co = 0;        // global light speeds L / tau
    double c_counter = 0;
    double delta_tau = 0;   // tau_co - tau_counter
};

// Closed forms: T_co = 2 pi R / (1 - w R), T_counter = 2 pi R / (1 + w R),
// L = 2 pi R (1 - w^2 R^2)^{-1/2}, tau = (1 - w^2 R^2)^{1/2} T, c = L / tau.
SagnacResult sagnac_analytic(double omega, double radius);

// Coordinate time for a light signal around `loop` in chart metric `g`:
// solves the null condition quadratically for dt/ds along the tangent (future
// root for the traversal sense; direction = +-1 traverses the parametrization
// forward/backward) and integrates adaptively.
double null_transit_time(const MetricField& g, const LoopPath& loop, int direction,
                         double abs_tol = 1e-11);

// Rest length along the loop: integral of sqrt(-h_{mu nu} dx^mu dx^nu) with h
// the frame's projection tensor.
double periphery_length(const FrameField& frame, const LoopPath& loop,
                        double abs_tol = 1e-11);

enum class SyncConvention { Einstein, NaiveCoordinate };

struct OneWaySpeedResult {
    double speed_co = 0;
    double speed_counter = 0;
    double distance = 0;   // rest distance between the two clocks
    double transit_co = 0; // coordinate transit times
    double transit_counter = 0;
};

// Light exchanged between neighboring periphery clocks separated by dphi in
// the co-rotating chart, clock readings compared under the chosen
// synchronization. Einstein gives 1 in both directions; naive coordinate
// synchronization reproduces the global values 1/(1 +- w R).
OneWaySpeedResult one_way_local_speed(double omega, double radius, double dphi,
                                      SyncConvention convention,
                                      double orientation_phi0 = 0.0,
                                      double max_dphi = 1e-2,
                                      double r_min = default_r_min());

// Two events simultaneous in the +v frame chart and separated by dx' along
// the boost axis: their coordinate-time separation in the -v frame chart,
// computed by an explicit composition of the two boosts (= 2 v dx'/(1 - v^2)).
double boost_simultaneity_offset(double v, double dx_prime);

struct ChiuHsuSherryReport {
    OneWaySpeedResult orientation_0;
    OneWaySpeedResult orientation_pi;
    bool speeds_unity = false;  // all four measured speeds equal 1 within tol
    double speed_tolerance = 0;
    double pair_separation = 0; // rest distance fed to the boost comparison
    double judged_offset = 0;   // desynchronization as judged from the opposite boost
};

// Einstein-synchronized one-way measurements at platform orientations 0 and
// pi, plus the opposite-boost judgment of the same clock pair: the measured
// local speed stays 1 while the frame-dependent judgment is nonzero.
ChiuHsuSherryReport chiu_hsu_sherry_check(double omega, double radius, double dphi,
                                          double speed_tol = 1e-9);

} // namespace framelab
