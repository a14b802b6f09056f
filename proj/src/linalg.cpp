#include "framelab/linalg.hpp"

#include "framelab/errors.hpp"

#include <algorithm>
#include <cmath>

namespace framelab {

namespace {

double det3(const Mat4& m, int r0, int r1, int r2, int c0, int c1, int c2) {
    return m[r0][c0] * (m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]) -
           m[r0][c1] * (m[r1][c0] * m[r2][c2] - m[r1][c2] * m[r2][c0]) +
           m[r0][c2] * (m[r1][c0] * m[r2][c1] - m[r1][c1] * m[r2][c0]);
}

} // namespace

double det(const Mat4& m) {
    return m[0][0] * det3(m, 1, 2, 3, 1, 2, 3) - m[0][1] * det3(m, 1, 2, 3, 0, 2, 3) +
           m[0][2] * det3(m, 1, 2, 3, 0, 1, 3) - m[0][3] * det3(m, 1, 2, 3, 0, 1, 2);
}

Mat4 inverse(const Mat4& m) {
    const double d = det(m);
    if (d == 0.0 || !std::isfinite(d))
        throw NumericError("matrix inverse: singular or non-finite determinant", 0.0);
    static const int idx[4][3] = {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
    Mat4 inv{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const double cof = det3(m, idx[i][0], idx[i][1], idx[i][2], idx[j][0],
                                    idx[j][1], idx[j][2]);
            const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
            inv[j][i] = sign * cof / d; // adjugate transpose
        }
    }
    return inv;
}

Vec4 symmetric_eigenvalues(const Mat4& m) {
    Mat4 a = m;
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < 4; ++p)
            for (int q = p + 1; q < 4; ++q)
                off += a[p][q] * a[p][q];
        if (off < 1e-30)
            break;
        for (int p = 0; p < 4; ++p) {
            for (int q = p + 1; q < 4; ++q) {
                if (a[p][q] == 0.0)
                    continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < 4; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < 4; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    Vec4 ev{a[0][0], a[1][1], a[2][2], a[3][3]};
    std::sort(ev.begin(), ev.end());
    return ev;
}

double max_abs(const Mat4& m) {
    double r = 0.0;
    for (const auto& row : m)
        for (double v : row)
            r = std::max(r, std::abs(v));
    return r;
}

double max_abs(const Vec4& v) {
    double r = 0.0;
    for (double x : v)
        r = std::max(r, std::abs(x));
    return r;
}

} // namespace framelab
