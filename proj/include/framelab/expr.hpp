#pragma once

#include <array>
#include <memory>
#include <unordered_map>
#include <vector>

namespace framelab {

using Point = std::array<double, 4>;

namespace detail {
struct Expr;
}

// Reusable per-thread evaluation scratch. Clearing between points lets several
// fields evaluated at the same point share their common subexpressions.
class EvalCache {
public:
    void clear() { memo_.clear(); }

private:
    friend double eval_expr(const detail::Expr*, const Point&, EvalCache&);
    std::unordered_map<const detail::Expr*, double> memo_;
};

// A smooth real-valued function of four coordinates, built from a closed
// vocabulary of elementary operations (+, -, *, /, pow, sqrt, sin, cos, sinh,
// cosh, asinh, exp, log, composition). Derivatives of any order are produced
// by rule application on the expression graph, so they are exact up to
// floating-point rounding; no finite differencing happens on this path.
//
// Immutable after construction; evaluation is pure and safe to call from many
// threads at once.
class ScalarField {
public:
    ScalarField(); // zero field
    ScalarField(double constant);

    static ScalarField constant(double c);
    static ScalarField coordinate(int axis);

    double operator()(const Point& x) const;
    double eval(const Point& x, EvalCache& cache) const;

    // Exact partial derivative with respect to coordinate `axis`.
    ScalarField derivative(int axis) const;

    // True for the structural zero (after constant folding).
    bool is_zero() const;
    bool is_constant(double* value = nullptr) const;

    explicit ScalarField(std::shared_ptr<const detail::Expr> node);
    const std::shared_ptr<const detail::Expr>& node() const { return node_; }

private:
    std::shared_ptr<const detail::Expr> node_;
};

ScalarField operator+(const ScalarField& a, const ScalarField& b);
ScalarField operator-(const ScalarField& a, const ScalarField& b);
ScalarField operator*(const ScalarField& a, const ScalarField& b);
ScalarField operator/(const ScalarField& a, const ScalarField& b);
ScalarField operator-(const ScalarField& a);

inline ScalarField operator+(const ScalarField& a, double b) { return a + ScalarField(b); }
inline ScalarField operator+(double a, const ScalarField& b) { return ScalarField(a) + b; }
inline ScalarField operator-(const ScalarField& a, double b) { return a - ScalarField(b); }
inline ScalarField operator-(double a, const ScalarField& b) { return ScalarField(a) - b; }
inline ScalarField operator*(const ScalarField& a, double b) { return a * ScalarField(b); }
inline ScalarField operator*(double a, const ScalarField& b) { return ScalarField(a) * b; }
inline ScalarField operator/(const ScalarField& a, double b) { return a / ScalarField(b); }
inline ScalarField operator/(double a, const ScalarField& b) { return ScalarField(a) / b; }

ScalarField pow(const ScalarField& base, double exponent);
ScalarField sqrt(const ScalarField& a);
ScalarField sin(const ScalarField& a);
ScalarField cos(const ScalarField& a);
ScalarField sinh(const ScalarField& a);
ScalarField cosh(const ScalarField& a);
ScalarField asinh(const ScalarField& a);
ScalarField exp(const ScalarField& a);
ScalarField log(const ScalarField& a);

// f(m0(x), m1(x), m2(x), m3(x)) -- used for chart maps and path pullbacks.
// The chain rule keeps compositions closed under differentiation.
ScalarField compose(const ScalarField& f, const std::array<ScalarField, 4>& map);

} // namespace framelab
