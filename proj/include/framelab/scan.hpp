#pragma once

#include "framelab/chart.hpp"
#include "framelab/expr.hpp"

#include <cstddef>
#include <vector>

namespace framelab {

// Grid reductions are the data-parallel inner loops of this library:
// classification sweeps, frame-family comparisons, residual scans. Each has a
// plain serial implementation (the reference, kept for testing) and an
// OpenMP-parallel one producing bit-identical results: per-point work is
// independent, and the max reduction breaks ties toward the lowest
// (point, field) index regardless of thread count.

struct ScanResult {
    double max_abs = 0.0;
    std::size_t point_index = 0; // flat grid index attaining the max
    std::size_t field_index = 0;
    Point at{};                  // the attaining point
};

ScanResult max_abs_scan_serial(const std::vector<ScalarField>& fields,
                               const GridSpec& grid);
ScanResult max_abs_scan_parallel(const std::vector<ScalarField>& fields,
                                 const GridSpec& grid);

// Parallel when built with OpenMP, serial otherwise.
ScanResult max_abs_scan(const std::vector<ScalarField>& fields, const GridSpec& grid);

// Evaluates one field over the grid (used by sweeps that need every value).
std::vector<double> evaluate_on_grid_serial(const ScalarField& f, const GridSpec& grid);
std::vector<double> evaluate_on_grid_parallel(const ScalarField& f, const GridSpec& grid);
std::vector<double> evaluate_on_grid(const ScalarField& f, const GridSpec& grid);

bool parallel_scan_enabled();

} // namespace framelab
