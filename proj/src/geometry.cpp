#include "framelab/geometry.hpp"

#include "framelab/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace framelab {

namespace mi = multi_index;

PForm lower_index(const MetricField& g, const VectorField& v) {
    require_same_chart(g.chart(), v.chart(), "lower_index");
    std::vector<ScalarField> comp(4);
    for (int mu = 0; mu < 4; ++mu) {
        ScalarField s;
        for (int nu = 0; nu < 4; ++nu)
            s = s + g.component(mu, nu) * v.component(nu);
        comp[static_cast<std::size_t>(mu)] = s;
    }
    return PForm(g.chart(), 1, std::move(comp));
}

VectorField raise_index(const MetricField& g, const PForm& alpha) {
    require_same_chart(g.chart(), alpha.chart(), "raise_index");
    if (alpha.degree() != 1)
        throw std::invalid_argument("raise_index: expected a 1-form");
    std::array<ScalarField, 4> comp;
    for (int mu = 0; mu < 4; ++mu) {
        ScalarField s;
        for (int nu = 0; nu < 4; ++nu)
            s = s + g.inverse_component(mu, nu) * alpha.component(static_cast<std::size_t>(nu));
        comp[static_cast<std::size_t>(mu)] = s;
    }
    return VectorField(g.chart(), std::move(comp));
}

PForm exterior_derivative(const PForm& omega) {
    const int p = omega.degree();
    if (p >= 4)
        throw std::invalid_argument("exterior_derivative: degree-4 form has no exterior derivative on a 4-manifold");
    const int q = p + 1;
    std::vector<ScalarField> out(mi::kCount[static_cast<std::size_t>(q)]);
    for (std::size_t j = 0; j < out.size(); ++j) {
        const auto J = mi::unrank(q, j);
        ScalarField s;
        for (int k = 0; k < q; ++k) {
            std::array<int, 4> sub{-1, -1, -1, -1};
            int w = 0;
            for (int m = 0; m < q; ++m)
                if (m != k)
                    sub[static_cast<std::size_t>(w++)] = J[static_cast<std::size_t>(m)];
            const ScalarField& c = omega.component(mi::rank(p, sub));
            if (c.is_zero())
                continue;
            ScalarField term = c.derivative(J[static_cast<std::size_t>(k)]);
            s = (k % 2 == 0) ? s + term : s - term;
        }
        out[j] = s;
    }
    return PForm(omega.chart(), q, std::move(out));
}

PForm wedge(const PForm& a, const PForm& b) {
    require_same_chart(a.chart(), b.chart(), "wedge");
    const int p = a.degree(), q = b.degree();
    if (p + q > 4)
        throw std::invalid_argument("wedge: degree overflow (p + q > 4)");
    PForm out(a.chart(), p + q);
    for (std::size_t i = 0; i < a.component_count(); ++i) {
        const auto I = mi::unrank(p, i);
        if (a.component(i).is_zero())
            continue;
        for (std::size_t j = 0; j < b.component_count(); ++j) {
            if (b.component(j).is_zero())
                continue;
            const auto J = mi::unrank(q, j);
            const int sign = mi::interleave_sign(p, I, q, J);
            if (sign == 0)
                continue;
            std::array<int, 4> merged{-1, -1, -1, -1};
            for (int k = 0; k < p; ++k)
                merged[static_cast<std::size_t>(k)] = I[static_cast<std::size_t>(k)];
            for (int k = 0; k < q; ++k)
                merged[static_cast<std::size_t>(p + k)] = J[static_cast<std::size_t>(k)];
            mi::sort_sign(p + q, merged);
            auto& slot = out.component(mi::rank(p + q, merged));
            const ScalarField term = a.component(i) * b.component(j);
            slot = (sign > 0) ? slot + term : slot - term;
        }
    }
    return out;
}

namespace {

// p x p determinant of inverse-metric entries g^{I_a K_b}, as an expression.
ScalarField inv_minor(const MetricField& g, int p, const std::array<int, 4>& I,
                      const std::array<int, 4>& K) {
    if (p == 0)
        return ScalarField(1.0);
    // permutation expansion; p <= 4 keeps this tiny
    ScalarField sum;
    std::array<int, 4> perm{};
    for (int k = 0; k < p; ++k)
        perm[static_cast<std::size_t>(k)] = k;
    do {
        std::array<int, 4> tmp = perm;
        const int sign = mi::sort_sign(p, tmp);
        ScalarField prod(1.0);
        for (int a = 0; a < p; ++a)
            prod = prod * g.inverse_component(
                              I[static_cast<std::size_t>(a)],
                              K[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)])]);
        sum = (sign > 0) ? sum + prod : sum - prod;
    } while (std::next_permutation(perm.begin(), perm.begin() + p));
    return sum;
}

} // namespace

PForm hodge_star(const MetricField& g, const PForm& omega) {
    require_same_chart(g.chart(), omega.chart(), "hodge_star");
    const int p = omega.degree();
    const int q = 4 - p;
    PForm out(g.chart(), q);
    for (std::size_t j = 0; j < out.component_count(); ++j) {
        const auto J = mi::unrank(q, j);
        // complement of J in {0,1,2,3}
        std::array<bool, 4> used{false, false, false, false};
        for (int k = 0; k < q; ++k)
            used[static_cast<std::size_t>(J[static_cast<std::size_t>(k)])] = true;
        std::array<int, 4> I{-1, -1, -1, -1};
        int w = 0;
        for (int c = 0; c < 4; ++c)
            if (!used[static_cast<std::size_t>(c)])
                I[static_cast<std::size_t>(w++)] = c;
        const int sign = mi::interleave_sign(p, I, q, J);
        // omega with all indices raised, at the complementary multi-index
        ScalarField raised;
        for (std::size_t k = 0; k < omega.component_count(); ++k) {
            if (omega.component(k).is_zero())
                continue;
            const auto K = mi::unrank(p, k);
            raised = raised + inv_minor(g, p, I, K) * omega.component(k);
        }
        ScalarField val = g.sqrt_abs_det() * raised;
        out.component(j) = (sign >= 0) ? val : -val;
    }
    return out;
}

ChristoffelField christoffel_field(const MetricField& g) {
    ChristoffelField G;
    G.chart = g.chart();
    // precompute d_k g_{mn}
    std::array<std::array<std::array<ScalarField, 4>, 4>, 4> dg; // [k][m][n]
    for (int k = 0; k < 4; ++k)
        for (int m = 0; m < 4; ++m)
            for (int n = m; n < 4; ++n) {
                ScalarField d = g.component(m, n).derivative(k);
                dg[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)]
                  [static_cast<std::size_t>(n)] = d;
                dg[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)]
                  [static_cast<std::size_t>(m)] = d;
            }
    auto D = [&dg](int k, int m, int n) -> const ScalarField& {
        return dg[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)]
                 [static_cast<std::size_t>(n)];
    };
    for (int l = 0; l < 4; ++l)
        for (int m = 0; m < 4; ++m)
            for (int n = 0; n < 4; ++n) {
                ScalarField s;
                for (int r = 0; r < 4; ++r) {
                    ScalarField bracket = D(m, r, n) + D(n, r, m) - D(r, m, n);
                    if (bracket.is_zero())
                        continue;
                    s = s + g.inverse_component(l, r) * bracket;
                }
                G.comp[static_cast<std::size_t>(l)][static_cast<std::size_t>(m)]
                      [static_cast<std::size_t>(n)] = 0.5 * s;
            }
    return G;
}

std::array<Mat4, 4> christoffel(const MetricField& g, const Point& x) {
    g.chart().require_interior(x);
    const ChristoffelField G = christoffel_field(g);
    EvalCache cache;
    std::array<Mat4, 4> out{};
    for (int l = 0; l < 4; ++l)
        for (int m = 0; m < 4; ++m)
            for (int n = 0; n < 4; ++n)
                out[static_cast<std::size_t>(l)][static_cast<std::size_t>(m)]
                   [static_cast<std::size_t>(n)] = G(l, m, n).eval(x, cache);
    return out;
}

Rank2Tensor covariant_derivative_oneform(const MetricField& g, const PForm& alpha) {
    require_same_chart(g.chart(), alpha.chart(), "covariant_derivative_oneform");
    if (alpha.degree() != 1)
        throw std::invalid_argument("covariant_derivative_oneform: expected a 1-form");
    const ChristoffelField G = christoffel_field(g);
    Rank2Tensor out(g.chart());
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            ScalarField s = alpha.component(static_cast<std::size_t>(mu)).derivative(nu);
            for (int l = 0; l < 4; ++l) {
                const ScalarField& al = alpha.component(static_cast<std::size_t>(l));
                if (al.is_zero() || G(l, mu, nu).is_zero())
                    continue;
                s = s - G(l, mu, nu) * al;
            }
            out.component(mu, nu) = s;
        }
    return out;
}

Rank2Tensor covariant_derivative_vector(const MetricField& g, const VectorField& v) {
    require_same_chart(g.chart(), v.chart(), "covariant_derivative_vector");
    const ChristoffelField G = christoffel_field(g);
    Rank2Tensor out(g.chart());
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            ScalarField s = v.component(mu).derivative(nu);
            for (int l = 0; l < 4; ++l) {
                if (v.component(l).is_zero() || G(mu, l, nu).is_zero())
                    continue;
                s = s + G(mu, l, nu) * v.component(l);
            }
            out.component(mu, nu) = s;
        }
    return out;
}

MetricField pullback_metric(const ChartMap& map, const MetricField& g) {
    require_same_chart(map.target(), g.chart(), "pullback_metric");
    // Jacobian of the forward components, exact.
    std::array<std::array<ScalarField, 4>, 4> jac; // [a][mu] = d forward^a / dx^mu
    for (int a = 0; a < 4; ++a)
        for (int mu = 0; mu < 4; ++mu)
            jac[static_cast<std::size_t>(a)][static_cast<std::size_t>(mu)] =
                map.forward()[static_cast<std::size_t>(a)].derivative(mu);

    MetricField::Builder b(map.source());
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu; nu < 4; ++nu) {
            ScalarField s;
            for (int a = 0; a < 4; ++a)
                for (int c = 0; c < 4; ++c) {
                    const ScalarField& Ja = jac[static_cast<std::size_t>(a)][static_cast<std::size_t>(mu)];
                    const ScalarField& Jc = jac[static_cast<std::size_t>(c)][static_cast<std::size_t>(nu)];
                    if (Ja.is_zero() || Jc.is_zero() || g.component(a, c).is_zero())
                        continue;
                    s = s + Ja * Jc * compose(g.component(a, c), map.forward());
                }
            b.set(mu, nu, s);
        }
    return std::move(b).build();
}

VectorField pushforward(const ChartMap& map, const VectorField& v) {
    require_same_chart(map.target(), v.chart(), "pushforward");
    std::array<ScalarField, 4> comp;
    for (int mu = 0; mu < 4; ++mu) {
        // W^mu(y) = d inverse^mu/dy^nu (y) V^nu(y), then compose with forward.
        ScalarField w;
        for (int nu = 0; nu < 4; ++nu) {
            ScalarField J = map.inverse()[static_cast<std::size_t>(mu)].derivative(nu);
            if (J.is_zero() || v.component(nu).is_zero())
                continue;
            w = w + J * v.component(nu);
        }
        comp[static_cast<std::size_t>(mu)] = compose(w, map.forward());
    }
    return VectorField(map.source(), std::move(comp));
}

} // namespace framelab
