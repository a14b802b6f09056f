#pragma once

#include "framelab/chart.hpp"
#include "framelab/expr.hpp"
#include "framelab/linalg.hpp"

#include <array>
#include <vector>

namespace framelab {

// ---------------------------------------------------------------------------
// Increasing multi-index bookkeeping for antisymmetric forms on 4 coordinates.
// Degree p stores binom(4,p) components, ordered lexicographically.
// ---------------------------------------------------------------------------
namespace multi_index {

constexpr std::array<std::size_t, 5> kCount{1, 4, 6, 4, 1};

// The i-th increasing multi-index of degree p (entries beyond p unused).
std::array<int, 4> unrank(int degree, std::size_t i);
// Position of a strictly increasing multi-index; the indices must be sorted.
std::size_t rank(int degree, const std::array<int, 4>& idx);
// Sign of the permutation sorting `idx` (0 on repeated entries). `sorted`
// receives the ascending rearrangement.
int sort_sign(int degree, std::array<int, 4>& idx);
// Sign of the 4-permutation (a..,b..) formed by concatenating two disjoint
// increasing index sets; 0 if they overlap.
int interleave_sign(int pa, const std::array<int, 4>& a, int pb,
                    const std::array<int, 4>& b);

} // namespace multi_index

// Contravariant vector field V^mu d/dx^mu.
class VectorField {
public:
    VectorField() = default;
    VectorField(Chart chart, std::array<ScalarField, 4> components);

    const Chart& chart() const { return chart_; }
    const ScalarField& component(int mu) const;
    Vec4 eval(const Point& x) const;
    Vec4 eval(const Point& x, EvalCache& cache) const;

private:
    Chart chart_;
    std::array<ScalarField, 4> comp_{};
};

// Antisymmetric covariant tensor of degree p, strictly-increasing storage.
class PForm {
public:
    PForm() = default;
    PForm(Chart chart, int degree); // zero form of the given degree
    PForm(Chart chart, int degree, std::vector<ScalarField> components);

    const Chart& chart() const { return chart_; }
    int degree() const { return degree_; }
    std::size_t component_count() const { return multi_index::kCount[static_cast<std::size_t>(degree_)]; }

    const ScalarField& component(std::size_t i) const { return comp_[i]; }
    ScalarField& component(std::size_t i) { return comp_[i]; }
    // Component for an arbitrary (possibly unsorted) index tuple, with sign.
    ScalarField component_signed(std::array<int, 4> idx) const;

    std::vector<double> eval(const Point& x) const;
    double max_abs_at(const Point& x, EvalCache& cache) const;

private:
    Chart chart_;
    int degree_ = 0;
    std::vector<ScalarField> comp_;
};

// 16 covariant components with no symmetry assumed (also reused for mixed
// tensors such as the covariant derivative of a vector; the producing
// operation documents the index meaning).
class Rank2Tensor {
public:
    Rank2Tensor() = default;
    explicit Rank2Tensor(Chart chart);
    Rank2Tensor(Chart chart, std::array<std::array<ScalarField, 4>, 4> components);

    const Chart& chart() const { return chart_; }
    const ScalarField& component(int mu, int nu) const;
    ScalarField& component(int mu, int nu);
    Mat4 eval(const Point& x) const;
    Mat4 eval(const Point& x, EvalCache& cache) const;

private:
    Chart chart_;
    std::array<std::array<ScalarField, 4>, 4> comp_{};
};

// Symmetric metric tensor, signature (+,-,-,-), components stored once per
// unordered index pair. The inverse (adjugate over determinant) and
// sqrt(-det g) are prepared as expressions at construction, so everything
// downstream stays exactly differentiable.
class MetricField {
public:
    class Builder {
    public:
        explicit Builder(Chart chart);
        Builder& set(int mu, int nu, ScalarField component);
        MetricField build() &&;

    private:
        Chart chart_;
        std::array<ScalarField, 10> pairs_{};
    };

    MetricField() = default;

    const Chart& chart() const { return chart_; }
    const ScalarField& component(int mu, int nu) const;
    const ScalarField& inverse_component(int mu, int nu) const;
    const ScalarField& determinant() const { return det_; }
    const ScalarField& sqrt_abs_det() const { return sqrt_abs_det_; }

    Mat4 eval(const Point& x) const;
    Mat4 eval(const Point& x, EvalCache& cache) const;
    Mat4 eval_inverse(const Point& x) const;

    // <V, W>_g at a point.
    double inner(const VectorField& v, const VectorField& w, const Point& x) const;

    // Signature (+,-,-,-) and invertibility at one point.
    bool has_lorentzian_signature(const Point& x, double tol = 1e-12) const;

private:
    friend class Builder;
    static std::size_t pair_slot(int mu, int nu);

    Chart chart_;
    std::array<ScalarField, 10> pairs_{};
    std::array<ScalarField, 10> inv_pairs_{};
    ScalarField det_;
    ScalarField sqrt_abs_det_;
};

// Smooth invertible map between chart domains. `forward` expresses the target
// chart's coordinates as functions of the source chart's; `inverse` goes the
// other way. Jacobians come from exact differentiation of the components.
class ChartMap {
public:
    ChartMap() = default;
    ChartMap(Chart source, Chart target, std::array<ScalarField, 4> forward,
             std::array<ScalarField, 4> inverse);

    const Chart& source() const { return source_; }
    const Chart& target() const { return target_; }
    const std::array<ScalarField, 4>& forward() const { return forward_; }
    const std::array<ScalarField, 4>& inverse() const { return inverse_; }

    Point map_point(const Point& x) const;
    Point unmap_point(const Point& y) const;

private:
    Chart source_, target_;
    std::array<ScalarField, 4> forward_{};
    std::array<ScalarField, 4> inverse_{};
};

} // namespace framelab
