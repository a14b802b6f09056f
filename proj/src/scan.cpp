#include "framelab/scan.hpp"

#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace framelab {

namespace {

struct Best {
    double mag = -1.0;
    std::size_t point = 0;
    std::size_t field = 0;

    void consider(double m, std::size_t p, std::size_t f) {
        if (m > mag) {
            mag = m;
            point = p;
            field = f;
        }
        // ties keep the earlier (point, field): scan order already guarantees it
    }

    void merge(const Best& o) {
        if (o.mag > mag) {
            *this = o;
            return;
        }
        if (o.mag == mag && (o.point < point || (o.point == point && o.field < field)))
            *this = o;
    }
};

Best scan_range(const std::vector<ScalarField>& fields, const GridSpec& grid,
                std::size_t begin, std::size_t end) {
    Best best;
    EvalCache cache;
    for (std::size_t p = begin; p < end; ++p) {
        const Point x = grid.point(p);
        cache.clear(); // fields share subexpressions at the same point
        for (std::size_t f = 0; f < fields.size(); ++f)
            best.consider(std::abs(fields[f].eval(x, cache)), p, f);
    }
    return best;
}

ScanResult to_result(const Best& b, const GridSpec& grid) {
    ScanResult r;
    r.max_abs = (b.mag < 0.0) ? 0.0 : b.mag;
    r.point_index = b.point;
    r.field_index = b.field;
    r.at = grid.point(b.point);
    return r;
}

} // namespace

ScanResult max_abs_scan_serial(const std::vector<ScalarField>& fields,
                               const GridSpec& grid) {
    return to_result(scan_range(fields, grid, 0, grid.size()), grid);
}

ScanResult max_abs_scan_parallel(const std::vector<ScalarField>& fields,
                                 const GridSpec& grid) {
#ifdef _OPENMP
    const std::size_t n = grid.size();
    const int threads = omp_get_max_threads();
    const std::size_t chunks = static_cast<std::size_t>(threads > 0 ? threads : 1);
    std::vector<Best> partial(chunks);
#pragma omp parallel for schedule(static)
    for (std::size_t c = 0; c < chunks; ++c) {
        const std::size_t lo = n * c / chunks;
        const std::size_t hi = n * (c + 1) / chunks;
        partial[c] = scan_range(fields, grid, lo, hi);
    }
    // combine in chunk order: lowest index wins ties, independent of threads
    Best best;
    for (const Best& b : partial)
        best.merge(b);
    return to_result(best, grid);
#else
    return max_abs_scan_serial(fields, grid);
#endif
}

ScanResult max_abs_scan(const std::vector<ScalarField>& fields, const GridSpec& grid) {
#ifdef _OPENMP
    return max_abs_scan_parallel(fields, grid);
#else
    return max_abs_scan_serial(fields, grid);
#endif
}

std::vector<double> evaluate_on_grid_serial(const ScalarField& f, const GridSpec& grid) {
    const std::size_t n = grid.size();
    std::vector<double> out(n);
    EvalCache cache;
    for (std::size_t p = 0; p < n; ++p) {
        cache.clear();
        out[p] = f.eval(grid.point(p), cache);
    }
    return out;
}

std::vector<double> evaluate_on_grid_parallel(const ScalarField& f, const GridSpec& grid) {
    const std::size_t n = grid.size();
    std::vector<double> out(n);
#ifdef _OPENMP
#pragma omp parallel
    {
        EvalCache cache;
#pragma omp for schedule(static)
        for (std::size_t p = 0; p < n; ++p) {
            cache.clear();
            out[p] = f.eval(grid.point(p), cache);
        }
    }
#else
    return evaluate_on_grid_serial(f, grid);
#endif
    return out;
}

std::vector<double> evaluate_on_grid(const ScalarField& f, const GridSpec& grid) {
#ifdef _OPENMP
    return evaluate_on_grid_parallel(f, grid);
#else
    return evaluate_on_grid_serial(f, grid);
#endif
}

bool parallel_scan_enabled() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

} // namespace framelab
