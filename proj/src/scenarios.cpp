#include "framelab/scenarios.hpp"

#include "framelab/errors.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace framelab {

namespace {
constexpr double kInf = 1.0e308;

const ScalarField& coord(int axis) {
    static const ScalarField c0 = ScalarField::coordinate(0);
    static const ScalarField c1 = ScalarField::coordinate(1);
    static const ScalarField c2 = ScalarField::coordinate(2);
    static const ScalarField c3 = ScalarField::coordinate(3);
    switch (axis) {
    case 0:
        return c0;
    case 1:
        return c1;
    case 2:
        return c2;
    default:
        return c3;
    }
}
} // namespace

double default_r_min() {
    if (const char* env = std::getenv("FRAMELAB_RMIN")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v > 0.0 && std::isfinite(v))
            return v;
    }
    return 1e-6;
}

Chart cylindrical_chart(double r_min) {
    return Chart("cylindrical",
                 {CoordinateSpec{"t", -kInf, kInf},
                  CoordinateSpec{"r", r_min, kInf},
                  CoordinateSpec{"phi", -kInf, kInf, true, 2.0 * M_PI},
                  CoordinateSpec{"z", -kInf, kInf}});
}

Chart cartesian_chart() {
    return Chart("cartesian",
                 {CoordinateSpec{"t", -kInf, kInf}, CoordinateSpec{"x", -kInf, kInf},
                  CoordinateSpec{"y", -kInf, kInf}, CoordinateSpec{"z", -kInf, kInf}});
}

MetricField minkowski_cylindrical(double r_min) {
    const ScalarField r = coord(1);
    return MetricField::Builder(cylindrical_chart(r_min))
        .set(0, 0, ScalarField(1.0))
        .set(1, 1, ScalarField(-1.0))
        .set(2, 2, -(r * r))
        .set(3, 3, ScalarField(-1.0))
        .build();
}

MetricField minkowski_cartesian() {
    return MetricField::Builder(cartesian_chart())
        .set(0, 0, ScalarField(1.0))
        .set(1, 1, ScalarField(-1.0))
        .set(2, 2, ScalarField(-1.0))
        .set(3, 3, ScalarField(-1.0))
        .build();
}

GridSpec default_cylindrical_grid(double r_lo, double r_hi, std::size_t n) {
    GridSpec g;
    g.axes[0] = {0.0, 0.0, 1};
    g.axes[1] = {r_lo, r_hi, n};
    g.axes[2] = {0.0, 2.0 * M_PI * (1.0 - 1.0 / static_cast<double>(n)), n};
    g.axes[3] = {-1.0, 1.0, n};
    return g;
}

GridSpec default_cartesian_grid(double half_width, std::size_t n) {
    GridSpec g;
    g.axes[0] = {0.0, 0.0, 1};
    for (std::size_t i = 1; i < 4; ++i)
        g.axes[i] = {-half_width, half_width, n};
    return g;
}

FrameField inertial_frame(const MetricField& g) {
    VectorField v(g.chart(),
                  {ScalarField(1.0), ScalarField(), ScalarField(), ScalarField()});
    const GridSpec grid = same_chart(g.chart(), cylindrical_chart())
                              ? default_cylindrical_grid(0.1, 2.0)
                              : default_cartesian_grid();
    return make_frame(g, v, grid, "I");
}

FrameField rotating_frame(const MetricField& g_cyl, double omega) {
    if (omega < 0.0)
        throw ValidationError("rotating_frame: omega must be >= 0 (flip the chart orientation instead)");
    const ScalarField r = coord(1);
    const ScalarField lorentz = 1.0 / sqrt(1.0 - (omega * omega) * (r * r));
    VectorField v(g_cyl.chart(), {lorentz, ScalarField(), omega * lorentz, ScalarField()});

    const double r_hi = (omega > 0.0) ? 1.0 / omega : kInf;
    Chart domain = g_cyl.chart();
    if (omega > 0.0)
        domain = domain.with_bounds(1, domain.coord(1).lower, r_hi);
    const double grid_hi = (omega > 0.0) ? 0.95 / omega : 2.0;
    std::ostringstream name;
    name << "P(omega=" << omega << ")";
    return make_frame(g_cyl, v, default_cylindrical_grid(0.05 * grid_hi, grid_hi),
                      name.str(), domain);
}

ChartMap rotating_chart(double omega, double r_min) {
    Chart hat("rotating",
              {CoordinateSpec{"that", -kInf, kInf},
               CoordinateSpec{"rhat", r_min, omega > 0.0 ? 1.0 / omega : kInf},
               CoordinateSpec{"phihat", -kInf, kInf, true, 2.0 * M_PI},
               CoordinateSpec{"zhat", -kInf, kInf}});
    const ScalarField t = coord(0), r = coord(1), phi = coord(2), z = coord(3);
    std::array<ScalarField, 4> fwd{t, r, phi + omega * t, z};   // hat -> lab
    std::array<ScalarField, 4> inv{t, r, phi - omega * t, z};   // lab -> hat
    return ChartMap(hat, cylindrical_chart(r_min), std::move(fwd), std::move(inv));
}

MetricField rotating_metric(double omega, double r_min) {
    return pullback_metric(rotating_chart(omega, r_min), minkowski_cylindrical(r_min));
}

FrameField boosted_frame(const MetricField& g_cart, double v) {
    if (!(std::abs(v) < 1.0))
        throw ValidationError("boosted_frame: |v| must be < 1");
    const double gamma = 1.0 / std::sqrt(1.0 - v * v);
    VectorField q(g_cart.chart(), {ScalarField(gamma), ScalarField(gamma * v),
                                   ScalarField(), ScalarField()});
    std::ostringstream name;
    name << (v >= 0.0 ? "I'" : "I''") << "(v=" << std::abs(v) << ")";
    return make_frame(g_cart, q, default_cartesian_grid(), name.str());
}

ChartMap boost_chart(double v) {
    if (!(std::abs(v) < 1.0))
        throw ValidationError("boost_chart: |v| must be < 1");
    Chart primed("boosted",
                 {CoordinateSpec{"t'", -kInf, kInf}, CoordinateSpec{"x'", -kInf, kInf},
                  CoordinateSpec{"y'", -kInf, kInf}, CoordinateSpec{"z'", -kInf, kInf}});
    const double gamma = 1.0 / std::sqrt(1.0 - v * v);
    const ScalarField t = coord(0), x = coord(1), y = coord(2), z = coord(3);
    // forward: primed -> lab; inverse: lab -> primed
    std::array<ScalarField, 4> fwd{gamma * (t + v * x), gamma * (x + v * t), y, z};
    std::array<ScalarField, 4> inv{gamma * (t - v * x), gamma * (x - v * t), y, z};
    return ChartMap(primed, cartesian_chart(), std::move(fwd), std::move(inv));
}

RotationRateProfile constant_profile(double value) {
    std::ostringstream d;
    d << "constant:" << value;
    return RotationRateProfile{ScalarField(value), d.str()};
}

RotationRateProfile matched_profile(double omega) {
    const ScalarField r = coord(1);
    const ScalarField arg = omega * r / sqrt(1.0 - (omega * omega) * (r * r));
    std::ostringstream d;
    d << "matched:" << omega;
    return RotationRateProfile{asinh(arg) / r, d.str()};
}

double matched_rate(double omega, double r) {
    return std::asinh(omega * r / std::sqrt(1.0 - omega * omega * r * r)) / r;
}

FrameField trocheries_frame(const MetricField& g_cyl, const RotationRateProfile& profile,
                            double r_max) {
    const ScalarField r = coord(1);
    const ScalarField angle = profile.rate * r;
    VectorField v(g_cyl.chart(),
                  {cosh(angle), ScalarField(), -sinh(angle) / r, ScalarField()});
    Chart domain = g_cyl.chart().with_bounds(1, g_cyl.chart().coord(1).lower, r_max);
    return make_frame(g_cyl, v, default_cylindrical_grid(0.05 * r_max, 0.95 * r_max),
                      "Pbar(" + profile.description + ")", domain);
}

ChartMap trocheries_chart(const RotationRateProfile& profile, double r_min, double r_max) {
    Chart barred("trocheries",
                 {CoordinateSpec{"tbar", -kInf, kInf}, CoordinateSpec{"rbar", r_min, r_max},
                  CoordinateSpec{"phibar", -kInf, kInf, true, 2.0 * M_PI},
                  CoordinateSpec{"zbar", -kInf, kInf}});
    const ScalarField t = coord(0), r = coord(1), phi = coord(2), z = coord(3);
    const ScalarField angle = profile.rate * r;
    const ScalarField ch = cosh(angle), sh = sinh(angle);
    // hyperbolic rotation in (t, r phi) at fixed r; r passes through, so the
    // same block with the opposite angle inverts it for any profile
    std::array<ScalarField, 4> fwd{t * ch + (r * phi) * sh, r, phi * ch + (t / r) * sh, z};
    std::array<ScalarField, 4> inv{t * ch - (r * phi) * sh, r, phi * ch - (t / r) * sh, z};
    return ChartMap(barred, cylindrical_chart(r_min), std::move(fwd), std::move(inv));
}

RimSpeedReport rim_speed_constraint(const RotationRateProfile& profile, double r_rim,
                                    double tol) {
    RimSpeedReport rep;
    const Point x{0.0, r_rim, 0.0, 0.0};
    const double angle = profile.rate(x) * r_rim;
    rep.hyperbolic_sine = std::sinh(angle);
    rep.rim_speed = std::tanh(angle);
    rep.condition_met = std::abs(rep.hyperbolic_sine - 1.0) < tol;
    return rep;
}

FrameComparison compare_trocheries_to_rigid(double omega,
                                            const RotationRateProfile& profile,
                                            const GridSpec& grid) {
    // Pbar carries the opposite rotation sense, so compare against the rigid
    // frame with -omega, i.e. flip the sign of the phi component.
    const ScalarField r = coord(1);
    const ScalarField angle = profile.rate * r;
    const ScalarField lorentz = 1.0 / sqrt(1.0 - (omega * omega) * (r * r));

    std::array<ScalarField, 4> dev;
    dev[0] = cosh(angle) - lorentz;
    dev[1] = ScalarField();
    dev[2] = -sinh(angle) / r - (-omega * lorentz);
    dev[3] = ScalarField();

    std::vector<ScalarField> fields(dev.begin(), dev.end());
    const ScanResult s = max_abs_scan(fields, grid);
    FrameComparison out;
    out.max_deviation = s.max_abs;
    out.at = s.at;
    out.component = static_cast<int>(s.field_index);
    out.matched_with_flipped_sense = true;
    return out;
}

} // namespace framelab
