#include "framelab/frames.hpp"

#include "framelab/errors.hpp"

#include <cmath>
#include <sstream>

namespace framelab {

Rank2Tensor projection_tensor(const MetricField& g, const VectorField& q) {
    require_same_chart(g.chart(), q.chart(), "projection_tensor");
    const PForm alpha = lower_index(g, q);
    Rank2Tensor h(g.chart());
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n)
            h.component(m, n) = g.component(m, n) - alpha.component(static_cast<std::size_t>(m)) *
                                                        alpha.component(static_cast<std::size_t>(n));
    return h;
}

FrameField make_frame(const MetricField& g, const VectorField& v, const GridSpec& grid,
                      std::string name, std::optional<Chart> domain) {
    require_same_chart(g.chart(), v.chart(), "make_frame");
    const Chart dom = domain.value_or(g.chart());

    // norm and future-pointing checks on the validation grid
    constexpr double kNormTol = 1e-10;
    EvalCache cache;
    const std::size_t n = grid.size();
    if (n == 0)
        throw ValidationError("make_frame: empty validation grid");
    for (std::size_t p = 0; p < n; ++p) {
        const Point x = grid.point(p);
        dom.require_interior(x);
        cache.clear();
        const Mat4 gm = g.eval(x, cache);
        const Vec4 qv = v.eval(x, cache);
        double norm = 0.0;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                norm += gm[i][j] * qv[i] * qv[j];
        if (!(std::abs(norm - 1.0) <= kNormTol)) {
            std::ostringstream os;
            os << "make_frame('" << name << "'): g(V,V) = " << norm << " at (" << x[0]
               << ", " << x[1] << ", " << x[2] << ", " << x[3] << "), not unit timelike";
            throw ValidationError(os.str());
        }
        if (!(qv[0] > 0.0)) {
            std::ostringstream os;
            os << "make_frame('" << name << "'): V^0 = " << qv[0] << " at r-index point "
               << p << ", not future pointing";
            throw ValidationError(os.str());
        }
    }

    FrameField f;
    f.name_ = std::move(name);
    f.metric_ = g;
    f.vector_ = v;
    f.domain_ = dom;

    f.alpha_ = lower_index(g, v);
    f.dalpha_ = exterior_derivative(f.alpha_);
    f.nabla_alpha_ = covariant_derivative_oneform(g, f.alpha_);
    f.nabla_q_ = covariant_derivative_vector(g, v);
    f.h_ = projection_tensor(g, v);

    // h^mu_nu = delta^mu_nu - Q^mu Q_nu
    f.h_mixed_ = Rank2Tensor(g.chart());
    for (int m = 0; m < 4; ++m)
        for (int nu = 0; nu < 4; ++nu) {
            ScalarField d = (m == nu) ? ScalarField(1.0) : ScalarField();
            f.h_mixed_.component(m, nu) =
                d - v.component(m) * f.alpha_.component(static_cast<std::size_t>(nu));
        }

    // a_mu = Q_{mu;nu} Q^nu
    for (int m = 0; m < 4; ++m) {
        ScalarField s;
        for (int nu = 0; nu < 4; ++nu)
            s = s + f.nabla_alpha_.component(m, nu) * v.component(nu);
        f.accel_[static_cast<std::size_t>(m)] = s;
    }

    // Theta = g^{mu nu} Q_{nu;mu}
    {
        ScalarField s;
        for (int m = 0; m < 4; ++m)
            for (int nu = 0; nu < 4; ++nu)
                s = s + g.inverse_component(m, nu) * f.nabla_alpha_.component(nu, m);
        f.expansion_ = s;
    }

    // rotation = h h antisym(Q_{mu;nu}); shear = h h sym(Q_{mu;nu}) - Theta h / 3.
    // The double projection is what closes the reconstruction identity.
    Rank2Tensor sym(g.chart()), asym(g.chart());
    for (int m = 0; m < 4; ++m)
        for (int nu = 0; nu < 4; ++nu) {
            sym.component(m, nu) =
                0.5 * (f.nabla_alpha_.component(m, nu) + f.nabla_alpha_.component(nu, m));
            asym.component(m, nu) =
                0.5 * (f.nabla_alpha_.component(m, nu) - f.nabla_alpha_.component(nu, m));
        }
    auto project = [&f, &g](const Rank2Tensor& t) {
        Rank2Tensor out(g.chart());
        for (int m = 0; m < 4; ++m)
            for (int nu = 0; nu < 4; ++nu) {
                ScalarField s;
                for (int r = 0; r < 4; ++r)
                    for (int tt = 0; tt < 4; ++tt) {
                        const ScalarField& trt = t.component(r, tt);
                        if (trt.is_zero())
                            continue;
                        s = s + f.h_mixed_.component(r, m) * f.h_mixed_.component(tt, nu) * trt;
                    }
                out.component(m, nu) = s;
            }
        return out;
    };
    f.rotation_ = project(asym);
    const Rank2Tensor psym = project(sym);
    f.shear_ = Rank2Tensor(g.chart());
    const ScalarField third_theta = f.expansion_ / 3.0;
    for (int m = 0; m < 4; ++m)
        for (int nu = 0; nu < 4; ++nu)
            f.shear_.component(m, nu) =
                psym.component(m, nu) - third_theta * f.h_.component(m, nu);

    return f;
}

KinematicDecomposition FrameField::decompose(const Point& x) const {
    domain_.require_interior(x);
    EvalCache cache;
    KinematicDecomposition d;
    d.x = x;
    for (std::size_t m = 0; m < 4; ++m)
        d.acceleration[m] = accel_[m].eval(x, cache);
    d.rotation = rotation_.eval(x, cache);
    d.shear = shear_.eval(x, cache);
    d.expansion = expansion_.eval(x, cache);
    d.projection = h_.eval(x, cache);
    return d;
}

ResidualPair FrameField::residuals(const Point& x) const {
    domain_.require_interior(x);
    EvalCache cache;
    const Mat4 nabla = nabla_alpha_.eval(x, cache);
    const Mat4 rot = rotation_.eval(x, cache);
    const Mat4 sh = shear_.eval(x, cache);
    const Mat4 h = h_.eval(x, cache);
    const Mat4 hm = h_mixed_.eval(x, cache);
    const double theta = expansion_.eval(x, cache);
    Vec4 a{}, alpha{};
    for (std::size_t m = 0; m < 4; ++m) {
        a[m] = accel_[m].eval(x, cache);
        alpha[m] = alpha_.component(m).eval(x, cache);
    }

    ResidualPair out;
    for (std::size_t m = 0; m < 4; ++m)
        for (std::size_t n = 0; n < 4; ++n) {
            const double rebuilt =
                a[m] * alpha[n] + rot[m][n] + sh[m][n] + theta / 3.0 * h[m][n];
            out.reconstruction = std::max(out.reconstruction, std::abs(rebuilt - nabla[m][n]));
            double projected = 0.0;
            for (std::size_t r = 0; r < 4; ++r)
                for (std::size_t t = 0; t < 4; ++t)
                    projected += nabla[r][t] * hm[r][m] * hm[t][n];
            const double rhs = nabla[m][n] - a[m] * alpha[n];
            out.second_identity = std::max(out.second_identity, std::abs(projected - rhs));
        }
    return out;
}

PForm frobenius_obstruction(const FrameField& frame) {
    return wedge(frame.dual(), frame.dalpha());
}

VectorField vortex_vector(const FrameField& frame) {
    const PForm dual3 = hodge_star(frame.metric(), frobenius_obstruction(frame));
    const VectorField raw = raise_index(frame.metric(), dual3);
    std::array<ScalarField, 4> comp;
    for (int m = 0; m < 4; ++m)
        comp[static_cast<std::size_t>(m)] = 0.5 * raw.component(m);
    return VectorField(frame.metric().chart(), std::move(comp));
}

SynchronizabilityReport classify(const FrameField& frame, const GridSpec& grid,
                                 double tol) {
    if (grid.size() == 0)
        throw ValidationError("classify: empty grid");
    SynchronizabilityReport rep;
    rep.frame = frame.name();
    rep.tolerance = tol;
    rep.grid_description = grid.describe();

    auto collect2 = [](const Rank2Tensor& t) {
        std::vector<ScalarField> v;
        for (int m = 0; m < 4; ++m)
            for (int n = 0; n < 4; ++n)
                if (!t.component(m, n).is_zero())
                    v.push_back(t.component(m, n));
        if (v.empty())
            v.push_back(ScalarField());
        return v;
    };
    auto collectp = [](const PForm& f) {
        std::vector<ScalarField> v;
        for (std::size_t i = 0; i < f.component_count(); ++i)
            if (!f.component(i).is_zero())
                v.push_back(f.component(i));
        if (v.empty())
            v.push_back(ScalarField());
        return v;
    };

    const PForm frob = frobenius_obstruction(frame);

    const ScanResult s_dalpha = max_abs_scan(collectp(frame.dalpha()), grid);
    const ScanResult s_frob = max_abs_scan(collectp(frob), grid);
    const ScanResult s_rot = max_abs_scan(collect2(frame.rotation_tensor()), grid);
    const ScanResult s_dq = max_abs_scan(collect2(frame.covariant_vector()), grid);

    rep.max_dalpha = s_dalpha.max_abs;
    rep.at_dalpha = s_dalpha.at;
    rep.max_frobenius = s_frob.max_abs;
    rep.at_frobenius = s_frob.at;
    rep.max_rotation = s_rot.max_abs;
    rep.at_rotation = s_rot.at;
    rep.max_nabla_q = s_dq.max_abs;
    rep.at_nabla_q = s_dq.at;

    rep.locally_proper_time_synchronizable = rep.max_dalpha < tol;
    rep.locally_synchronizable = rep.max_frobenius < tol;
    rep.rotating = rep.max_rotation >= tol;
    rep.inertial = rep.max_nabla_q < tol;
    rep.equivalence_consistent = (rep.max_frobenius < tol) == (rep.max_rotation < tol);
    return rep;
}

AdaptedCoframe adapted_coframe(const FrameField& frame) {
    AdaptedCoframe out;
    out.theta0 = frame.dual();
    out.gamma = Rank2Tensor(frame.metric().chart());
    const MetricField& g = frame.metric();
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n)
            out.gamma.component(m, n) =
                g.component(m, n) - out.theta0.component(static_cast<std::size_t>(m)) *
                                        out.theta0.component(static_cast<std::size_t>(n));
    return out;
}

CoframeCheck verify_coframe(const FrameField& frame, const GridSpec& grid,
                            double zero_tol) {
    const AdaptedCoframe cf = adapted_coframe(frame);
    const MetricField& g = frame.metric();
    CoframeCheck out;
    out.spatial_rank3 = true;
    EvalCache cache;
    for (std::size_t p = 0; p < grid.size(); ++p) {
        const Point x = grid.point(p);
        cache.clear();
        const Mat4 gm = g.eval(x, cache);
        const Mat4 gam = cf.gamma.eval(x, cache);
        Vec4 th{}, q{};
        for (std::size_t m = 0; m < 4; ++m) {
            th[m] = cf.theta0.component(m).eval(x, cache);
            q[m] = frame.vector().component(static_cast<int>(m)).eval(x, cache);
        }
        for (std::size_t m = 0; m < 4; ++m) {
            double contr = 0.0;
            for (std::size_t n = 0; n < 4; ++n) {
                const double resid = gm[m][n] - (th[m] * th[n] + gam[m][n]);
                out.reconstruction_max = std::max(out.reconstruction_max, std::abs(resid));
                contr += gam[m][n] * q[n];
            }
            out.contraction_max = std::max(out.contraction_max, std::abs(contr));
        }
        const Vec4 ev = symmetric_eigenvalues(gam);
        // spectrum must be (-,-,-,0) up to tolerance
        const bool ok = ev[0] < -zero_tol && ev[1] < -zero_tol && ev[2] < -zero_tol &&
                        std::abs(ev[3]) <= zero_tol;
        if (!ok)
            out.spatial_rank3 = false;
    }
    return out;
}

DiagonalityResult diagonality_check(const MetricField& g, const GridSpec& grid,
                                    double tol) {
    std::vector<ScalarField> cross;
    for (int i = 1; i <= 3; ++i)
        cross.push_back(g.component(0, i));
    const ScanResult s = max_abs_scan(cross, grid);
    DiagonalityResult out;
    out.max_offdiagonal = s.max_abs;
    out.at = s.at;
    out.diagonal = s.max_abs < tol;
    return out;
}

} // namespace framelab
