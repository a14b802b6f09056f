#pragma once

#include "framelab/expr.hpp"

#include <array>
#include <cstddef>
#include <string>

namespace framelab {

struct CoordinateSpec {
    std::string name;
    double lower = -1.0e308; // open interval (lower, upper); +-inf allowed
    double upper = 1.0e308;
    bool periodic = false;
    double period = 0.0; // finite for periodic coordinates
};

// A four-dimensional coordinate chart. Index 0 is the timelike coordinate by
// convention; the remaining three are spatial.
class Chart {
public:
    Chart() = default;
    Chart(std::string name, std::array<CoordinateSpec, 4> coords);

    const std::string& name() const { return name_; }
    const CoordinateSpec& coord(int axis) const;
    int index_of(const std::string& coord_name) const; // -1 when absent

    bool contains(const Point& x) const;
    void require_interior(const Point& x) const; // throws DomainError

    // Same chart, tighter bounds on one axis (used for frame domain guards).
    Chart with_bounds(int axis, double lower, double upper) const;

    // Charts are identified by name for operand-compatibility checks.
    friend bool same_chart(const Chart& a, const Chart& b) { return a.name_ == b.name_; }

private:
    std::string name_;
    std::array<CoordinateSpec, 4> coords_{};
};

void require_same_chart(const Chart& a, const Chart& b, const char* context);

// Rectilinear sample grid; axes with count 1 are frozen at lo.
struct GridAxis {
    double lo = 0.0;
    double hi = 0.0;
    std::size_t count = 1;
};

struct GridSpec {
    std::array<GridAxis, 4> axes{};

    std::size_t size() const;
    Point point(std::size_t flat) const;
    std::string describe() const;

    // t frozen at 0, the three spatial axes sampled n times across
    // [lo_i, hi_i]. Convenience for classification grids.
    static GridSpec spatial_box(std::array<double, 3> lo, std::array<double, 3> hi,
                                std::size_t n);
};

} // namespace framelab
