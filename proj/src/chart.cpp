#include "framelab/chart.hpp"

#include "framelab/errors.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace framelab {

Chart::Chart(std::string name, std::array<CoordinateSpec, 4> coords)
    : name_(std::move(name)), coords_(std::move(coords)) {
    for (const auto& c : coords_) {
        if (!(c.lower < c.upper))
            throw ValidationError("chart '" + name_ + "': coordinate '" + c.name +
                                  "' needs lower < upper");
        if (c.periodic && !(c.period > 0.0 && std::isfinite(c.period)))
            throw ValidationError("chart '" + name_ + "': periodic coordinate '" + c.name +
                                  "' needs a finite period");
    }
}

const CoordinateSpec& Chart::coord(int axis) const {
    if (axis < 0 || axis > 3)
        throw std::invalid_argument("Chart::coord: axis out of range");
    return coords_[static_cast<std::size_t>(axis)];
}

int Chart::index_of(const std::string& coord_name) const {
    for (int i = 0; i < 4; ++i)
        if (coords_[static_cast<std::size_t>(i)].name == coord_name)
            return i;
    return -1;
}

bool Chart::contains(const Point& x) const {
    for (std::size_t i = 0; i < 4; ++i) {
        const auto& c = coords_[i];
        if (c.periodic)
            continue; // any representative angle is in-domain
        if (!(x[i] > c.lower && x[i] < c.upper))
            return false;
    }
    return true;
}

void Chart::require_interior(const Point& x) const {
    if (contains(x))
        return;
    std::ostringstream os;
    os << "point (" << x[0] << ", " << x[1] << ", " << x[2] << ", " << x[3]
       << ") outside chart '" << name_ << "' domain";
    throw DomainError(os.str());
}

Chart Chart::with_bounds(int axis, double lower, double upper) const {
    Chart c = *this;
    auto& spec = c.coords_[static_cast<std::size_t>(axis)];
    spec.lower = lower;
    spec.upper = upper;
    if (!(lower < upper))
        throw ValidationError("Chart::with_bounds: lower must be < upper");
    return c;
}

void require_same_chart(const Chart& a, const Chart& b, const char* context) {
    if (!same_chart(a, b))
        throw ChartMismatchError(std::string(context) + ": charts '" + a.name() +
                                 "' and '" + b.name() + "' differ");
}

std::size_t GridSpec::size() const {
    std::size_t n = 1;
    for (const auto& ax : axes)
        n *= (ax.count == 0 ? 1 : ax.count);
    return n;
}

Point GridSpec::point(std::size_t flat) const {
    Point x{};
    for (std::size_t i = 0; i < 4; ++i) {
        const auto& ax = axes[i];
        const std::size_t n = (ax.count == 0 ? 1 : ax.count);
        const std::size_t k = flat % n;
        flat /= n;
        x[i] = (n == 1) ? ax.lo
                        : ax.lo + (ax.hi - ax.lo) * static_cast<double>(k) /
                                      static_cast<double>(n - 1);
    }
    return x;
}

std::string GridSpec::describe() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < 4; ++i) {
        const auto& ax = axes[i];
        if (i)
            os << " x ";
        if (ax.count <= 1)
            os << "{" << ax.lo << "}";
        else
            os << "[" << ax.lo << ", " << ax.hi << "]:" << ax.count;
    }
    return os.str();
}

GridSpec GridSpec::spatial_box(std::array<double, 3> lo, std::array<double, 3> hi,
                               std::size_t n) {
    GridSpec g;
    g.axes[0] = {0.0, 0.0, 1};
    for (std::size_t i = 0; i < 3; ++i)
        g.axes[i + 1] = {lo[i], hi[i], n};
    return g;
}

} // namespace framelab
