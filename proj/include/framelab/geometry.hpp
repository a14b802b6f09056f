#pragma once

#include "framelab/tensor.hpp"

#include <array>

namespace framelab {

// alpha_mu = g_{mu nu} V^nu
PForm lower_index(const MetricField& g, const VectorField& v);

// V^mu = g^{mu nu} alpha_nu
VectorField raise_index(const MetricField& g, const PForm& alpha);

// (d omega)_{i0<..<ip} = sum_k (-1)^k d_{i_k} omega_{i0.._k..ip}; degree must be <= 3.
PForm exterior_derivative(const PForm& omega);

// Graded antisymmetric product; degrees must sum to <= 4.
PForm wedge(const PForm& a, const PForm& b);

// Lorentzian Hodge dual with volume form sqrt|det g| dx^0^dx^1^dx^2^dx^3,
// the ordered coordinate 4-form taken positively oriented.
PForm hodge_star(const MetricField& g, const PForm& omega);

// Levi-Civita connection coefficients as expressions:
// Gamma^l_{mn} = (1/2) g^{lr} (d_m g_{rn} + d_n g_{rm} - d_r g_{mn}).
// Built without exploiting the (m,n) symmetry so the symmetry stays testable.
struct ChristoffelField {
    Chart chart;
    std::array<std::array<std::array<ScalarField, 4>, 4>, 4> comp; // [l][m][n]

    const ScalarField& operator()(int l, int m, int n) const {
        return comp[static_cast<std::size_t>(l)][static_cast<std::size_t>(m)]
                   [static_cast<std::size_t>(n)];
    }
};

ChristoffelField christoffel_field(const MetricField& g);

// Pointwise Gamma^l_{mn} at x (interior point, invertible metric).
std::array<Mat4, 4> christoffel(const MetricField& g, const Point& x);

// (D alpha)_{mu nu} = alpha_{mu;nu} = d_nu alpha_mu - Gamma^l_{mu nu} alpha_l.
// First index: form slot; second index: derivative slot.
Rank2Tensor covariant_derivative_oneform(const MetricField& g, const PForm& alpha);

// V^mu_{;nu} = d_nu V^mu + Gamma^mu_{l nu} V^l. Mixed components: row mu is
// the contravariant slot, column nu the derivative slot.
Rank2Tensor covariant_derivative_vector(const MetricField& g, const VectorField& v);

// Metric pulled back along `map` onto map.source():
// (T*g)_{mu nu}(x) = J^a_mu J^b_nu g_{ab}(T(x)), J = d(forward)/dx.
MetricField pullback_metric(const ChartMap& map, const MetricField& g);

// Vector field pushed from map.target() onto map.source() using the inverse
// map's Jacobian: V'^mu(x) = [d(inverse)^mu/dy^nu * V^nu] composed with forward.
VectorField pushforward(const ChartMap& map, const VectorField& v);

} // namespace framelab
