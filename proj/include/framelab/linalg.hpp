#pragma once

#include <array>

namespace framelab {

using Vec4 = std::array<double, 4>;
using Mat4 = std::array<std::array<double, 4>, 4>;

double det(const Mat4& m);
Mat4 inverse(const Mat4& m); // throws NumericError when singular

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
Vec4 symmetric_eigenvalues(const Mat4& m);

double max_abs(const Mat4& m);
double max_abs(const Vec4& v);

} // namespace framelab
