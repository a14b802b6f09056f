#include "framelab/tensor.hpp"

#include "framelab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace framelab {

namespace multi_index {

namespace {
// Lexicographic tables per degree.
constexpr int kIdx1[4][1] = {{0}, {1}, {2}, {3}};
constexpr int kIdx2[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
constexpr int kIdx3[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
constexpr int kIdx4[1][4] = {{0, 1, 2, 3}};
} // namespace

std::array<int, 4> unrank(int degree, std::size_t i) {
    std::array<int, 4> out{-1, -1, -1, -1};
    switch (degree) {
    case 0:
        break;
    case 1:
        out[0] = kIdx1[i][0];
        break;
    case 2:
        out[0] = kIdx2[i][0];
        out[1] = kIdx2[i][1];
        break;
    case 3:
        out[0] = kIdx3[i][0];
        out[1] = kIdx3[i][1];
        out[2] = kIdx3[i][2];
        break;
    case 4:
        for (int k = 0; k < 4; ++k)
            out[static_cast<std::size_t>(k)] = kIdx4[0][k];
        break;
    default:
        throw std::invalid_argument("multi_index::unrank: bad degree");
    }
    return out;
}

std::size_t rank(int degree, const std::array<int, 4>& idx) {
    const std::size_t n = kCount[static_cast<std::size_t>(degree)];
    for (std::size_t i = 0; i < n; ++i) {
        auto cand = unrank(degree, i);
        bool match = true;
        for (int k = 0; k < degree; ++k)
            if (cand[static_cast<std::size_t>(k)] != idx[static_cast<std::size_t>(k)])
                match = false;
        if (match)
            return i;
    }
    throw std::invalid_argument("multi_index::rank: not an increasing multi-index");
}

int sort_sign(int degree, std::array<int, 4>& idx) {
    int sign = 1;
    for (int i = 0; i < degree; ++i) {
        for (int j = 0; j < degree - 1 - i; ++j) {
            auto ju = static_cast<std::size_t>(j);
            if (idx[ju] == idx[ju + 1])
                return 0;
            if (idx[ju] > idx[ju + 1]) {
                std::swap(idx[ju], idx[ju + 1]);
                sign = -sign;
            }
        }
    }
    return sign;
}

int interleave_sign(int pa, const std::array<int, 4>& a, int pb,
                    const std::array<int, 4>& b) {
    std::array<int, 4> merged{-1, -1, -1, -1};
    for (int k = 0; k < pa; ++k)
        merged[static_cast<std::size_t>(k)] = a[static_cast<std::size_t>(k)];
    for (int k = 0; k < pb; ++k)
        merged[static_cast<std::size_t>(pa + k)] = b[static_cast<std::size_t>(k)];
    return sort_sign(pa + pb, merged);
}

} // namespace multi_index

// ----------------------------------------------------------------- VectorField

VectorField::VectorField(Chart chart, std::array<ScalarField, 4> components)
    : chart_(std::move(chart)), comp_(std::move(components)) {}

const ScalarField& VectorField::component(int mu) const {
    return comp_[static_cast<std::size_t>(mu)];
}

Vec4 VectorField::eval(const Point& x) const {
    EvalCache cache;
    return eval(x, cache);
}

Vec4 VectorField::eval(const Point& x, EvalCache& cache) const {
    Vec4 v{};
    for (std::size_t i = 0; i < 4; ++i)
        v[i] = comp_[i].eval(x, cache);
    return v;
}

// ----------------------------------------------------------------------- PForm

PForm::PForm(Chart chart, int degree) : chart_(std::move(chart)), degree_(degree) {
    if (degree < 0 || degree > 4)
        throw std::invalid_argument("PForm: degree must be 0..4");
    comp_.assign(multi_index::kCount[static_cast<std::size_t>(degree)], ScalarField());
}

PForm::PForm(Chart chart, int degree, std::vector<ScalarField> components)
    : chart_(std::move(chart)), degree_(degree), comp_(std::move(components)) {
    if (degree < 0 || degree > 4)
        throw std::invalid_argument("PForm: degree must be 0..4");
    if (comp_.size() != multi_index::kCount[static_cast<std::size_t>(degree)])
        throw std::invalid_argument("PForm: wrong component count for degree");
}

ScalarField PForm::component_signed(std::array<int, 4> idx) const {
    const int sign = multi_index::sort_sign(degree_, idx);
    if (sign == 0)
        return ScalarField();
    const ScalarField& c = comp_[multi_index::rank(degree_, idx)];
    return sign > 0 ? c : -c;
}

std::vector<double> PForm::eval(const Point& x) const {
    EvalCache cache;
    std::vector<double> out(comp_.size());
    for (std::size_t i = 0; i < comp_.size(); ++i)
        out[i] = comp_[i].eval(x, cache);
    return out;
}

double PForm::max_abs_at(const Point& x, EvalCache& cache) const {
    double m = 0.0;
    for (const auto& c : comp_)
        m = std::max(m, std::abs(c.eval(x, cache)));
    return m;
}

// ----------------------------------------------------------------- Rank2Tensor

Rank2Tensor::Rank2Tensor(Chart chart) : chart_(std::move(chart)) {}

Rank2Tensor::Rank2Tensor(Chart chart, std::array<std::array<ScalarField, 4>, 4> components)
    : chart_(std::move(chart)), comp_(std::move(components)) {}

const ScalarField& Rank2Tensor::component(int mu, int nu) const {
    return comp_[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)];
}

ScalarField& Rank2Tensor::component(int mu, int nu) {
    return comp_[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)];
}

Mat4 Rank2Tensor::eval(const Point& x) const {
    EvalCache cache;
    return eval(x, cache);
}

Mat4 Rank2Tensor::eval(const Point& x, EvalCache& cache) const {
    Mat4 m{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            m[i][j] = comp_[i][j].eval(x, cache);
    return m;
}

// ----------------------------------------------------------------- MetricField

std::size_t MetricField::pair_slot(int mu, int nu) {
    if (mu < 0 || mu > 3 || nu < 0 || nu > 3)
        throw std::invalid_argument("MetricField: index out of range");
    if (mu > nu)
        std::swap(mu, nu);
    // (0,0)(0,1)(0,2)(0,3)(1,1)(1,2)(1,3)(2,2)(2,3)(3,3)
    static const int base[4] = {0, 4, 7, 9};
    return static_cast<std::size_t>(base[mu] + (nu - mu));
}

MetricField::Builder::Builder(Chart chart) : chart_(std::move(chart)) {}

MetricField::Builder& MetricField::Builder::set(int mu, int nu, ScalarField component) {
    pairs_[MetricField::pair_slot(mu, nu)] = std::move(component);
    return *this;
}

MetricField MetricField::Builder::build() && {
    MetricField g;
    g.chart_ = std::move(chart_);
    g.pairs_ = std::move(pairs_);

    auto comp = [&g](int mu, int nu) -> const ScalarField& {
        return g.pairs_[MetricField::pair_slot(mu, nu)];
    };

    // Determinant by Laplace expansion along the first row; 3x3 minors by the
    // rule of Sarrus. All of it stays inside the expression vocabulary.
    auto minor3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
        return comp(r0, c0) * (comp(r1, c1) * comp(r2, c2) - comp(r1, c2) * comp(r2, c1)) -
               comp(r0, c1) * (comp(r1, c0) * comp(r2, c2) - comp(r1, c2) * comp(r2, c0)) +
               comp(r0, c2) * (comp(r1, c0) * comp(r2, c1) - comp(r1, c1) * comp(r2, c0));
    };
    g.det_ = comp(0, 0) * minor3(1, 2, 3, 1, 2, 3) - comp(0, 1) * minor3(1, 2, 3, 0, 2, 3) +
             comp(0, 2) * minor3(1, 2, 3, 0, 1, 3) - comp(0, 3) * minor3(1, 2, 3, 0, 1, 2);
    // Lorentzian signature: det g < 0, so |det g| = -det g.
    g.sqrt_abs_det_ = sqrt(-g.det_);

    // Inverse through the adjugate; symmetric, so upper triangle suffices.
    static const int rows[4][3] = {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = mu; nu < 4; ++nu) {
            ScalarField cof = minor3(rows[mu][0], rows[mu][1], rows[mu][2], rows[nu][0],
                                     rows[nu][1], rows[nu][2]);
            if ((mu + nu) % 2 != 0)
                cof = -cof;
            g.inv_pairs_[MetricField::pair_slot(mu, nu)] = cof / g.det_;
        }
    }
    return g;
}

const ScalarField& MetricField::component(int mu, int nu) const {
    return pairs_[pair_slot(mu, nu)];
}

const ScalarField& MetricField::inverse_component(int mu, int nu) const {
    return inv_pairs_[pair_slot(mu, nu)];
}

Mat4 MetricField::eval(const Point& x) const {
    EvalCache cache;
    return eval(x, cache);
}

Mat4 MetricField::eval(const Point& x, EvalCache& cache) const {
    Mat4 m{};
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            const double v = component(i, j).eval(x, cache);
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
        }
    return m;
}

Mat4 MetricField::eval_inverse(const Point& x) const {
    EvalCache cache;
    Mat4 m{};
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            const double v = inverse_component(i, j).eval(x, cache);
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
        }
    return m;
}

double MetricField::inner(const VectorField& v, const VectorField& w, const Point& x) const {
    require_same_chart(chart_, v.chart(), "MetricField::inner");
    require_same_chart(chart_, w.chart(), "MetricField::inner");
    EvalCache cache;
    const Mat4 g = eval(x, cache);
    const Vec4 vv = v.eval(x, cache);
    const Vec4 ww = w.eval(x, cache);
    double s = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            s += g[i][j] * vv[i] * ww[j];
    return s;
}

bool MetricField::has_lorentzian_signature(const Point& x, double tol) const {
    const Mat4 g = eval(x);
    if (std::abs(det(g)) <= tol)
        return false;
    const Vec4 ev = symmetric_eigenvalues(g);
    return ev[0] < -tol && ev[1] < -tol && ev[2] < -tol && ev[3] > tol;
}

// -------------------------------------------------------------------- ChartMap

ChartMap::ChartMap(Chart source, Chart target, std::array<ScalarField, 4> forward,
                   std::array<ScalarField, 4> inverse)
    : source_(std::move(source)), target_(std::move(target)), forward_(std::move(forward)),
      inverse_(std::move(inverse)) {}

Point ChartMap::map_point(const Point& x) const {
    EvalCache cache;
    Point y{};
    for (std::size_t k = 0; k < 4; ++k)
        y[k] = forward_[k].eval(x, cache);
    return y;
}

Point ChartMap::unmap_point(const Point& y) const {
    EvalCache cache;
    Point x{};
    for (std::size_t k = 0; k < 4; ++k)
        x[k] = inverse_[k].eval(y, cache);
    return x;
}

} // namespace framelab
