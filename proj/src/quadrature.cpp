#include "framelab/quadrature.hpp"

#include "framelab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

namespace framelab {

namespace {

// Kronrod-15 abscissae/weights on [-1,1] plus the embedded Gauss-7 weights.
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                           0.417959183673469};

struct Piece {
    double a, b;
    double value;
    double err;
    bool operator<(const Piece& o) const {
        // priority: larger error first; ties by lower endpoint for determinism
        if (err != o.err)
            return err < o.err;
        return a > o.a;
    }
};

Piece gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double resk = 0.0, resg = 0.0;
    for (int j = 0; j < 7; ++j) {
        const double x = h * kXgk[j];
        const double fsum = f(c - x) + f(c + x);
        resk += kWgk[j] * fsum;
        if (j % 2 == 1)
            resg += kWg[j / 2] * fsum;
    }
    const double fc = f(c);
    resk += kWgk[7] * fc;
    resg += kWg[3] * fc;
    Piece p;
    p.a = a;
    p.b = b;
    p.value = resk * h;
    p.err = std::abs((resk - resg) * h);
    return p;
}

} // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a,
                                    double b, double abs_tol, int max_intervals) {
    QuadratureResult out;
    if (a == b) {
        out.converged = true;
        return out;
    }
    std::priority_queue<Piece> heap;
    heap.push(gk15(f, a, b));
    double total_err = heap.top().err;
    int count = 1;
    while (total_err > abs_tol && count < max_intervals) {
        Piece worst = heap.top();
        heap.pop();
        total_err -= worst.err;
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b)
            break; // interval exhausted at machine precision
        Piece left = gk15(f, worst.a, mid);
        Piece right = gk15(f, mid, worst.b);
        heap.push(left);
        heap.push(right);
        total_err += left.err + right.err;
        ++count;
    }
    double sum = 0.0, err = 0.0;
    std::vector<Piece> pieces;
    pieces.reserve(static_cast<std::size_t>(count));
    while (!heap.empty()) {
        pieces.push_back(heap.top());
        heap.pop();
    }
    // accumulate in endpoint order so repeated runs sum identically
    std::sort(pieces.begin(), pieces.end(),
              [](const Piece& l, const Piece& r) { return l.a < r.a; });
    for (const Piece& p : pieces) {
        sum += p.value;
        err += p.err;
    }
    out.value = sum;
    out.error = err;
    out.intervals = count;
    out.converged = err <= abs_tol;
    return out;
}

double integrate_or_throw(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int max_intervals) {
    const QuadratureResult r = integrate_adaptive(f, a, b, abs_tol, max_intervals);
    if (!r.converged) {
        std::ostringstream os;
        os << "quadrature did not reach abs tol " << abs_tol << " (achieved " << r.error
           << " with " << r.intervals << " intervals)";
        throw NumericError(os.str(), r.error);
    }
    return r.value;
}

} // namespace framelab
