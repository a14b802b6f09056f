#pragma once

#include "framelab/geometry.hpp"
#include "framelab/scan.hpp"

#include <memory>
#include <optional>
#include <string>

namespace framelab {

struct KinematicDecomposition {
    Point x{};
    Vec4 acceleration{};  // a_mu = Q_{mu;nu} Q^nu
    Mat4 rotation{};      // omega_{mu nu}, antisymmetric, h-projected
    Mat4 shear{};         // sigma_{mu nu}, symmetric, h-traceless
    double expansion = 0; // Theta = Q^mu_{;mu}
    Mat4 projection{};    // h_{mu nu} = g_{mu nu} - Q_mu Q_nu
};

struct ResidualPair {
    double reconstruction = 0; // max |(a(x)Q + omega + sigma + Theta h/3) - Q_{mu;nu}|
    double second_identity = 0; // max |Q_{r;t} h^r_mu h^t_nu - (Q_{mu;nu} - a_mu Q_nu)|
};

// A unit timelike future-pointing vector field together with every derived
// expression the kinematics and classification need. All expression tables
// are built once at validation time; evaluation afterwards is pure.
class FrameField {
public:
    const std::string& name() const { return name_; }
    const MetricField& metric() const { return metric_; }
    const VectorField& vector() const { return vector_; }
    const Chart& domain() const { return domain_; } // possibly tighter than the chart

    const PForm& dual() const { return alpha_; }            // alpha_Q = g(Q, .)
    const Rank2Tensor& covariant_dual() const { return nabla_alpha_; } // Q_{mu;nu}
    const Rank2Tensor& covariant_vector() const { return nabla_q_; }   // Q^mu_{;nu}
    const Rank2Tensor& projection() const { return h_; }
    const Rank2Tensor& rotation_tensor() const { return rotation_; }
    const Rank2Tensor& shear_tensor() const { return shear_; }
    const ScalarField& expansion_scalar() const { return expansion_; }
    const std::array<ScalarField, 4>& acceleration_form() const { return accel_; }
    const PForm& dalpha() const { return dalpha_; }

    KinematicDecomposition decompose(const Point& x) const;
    ResidualPair residuals(const Point& x) const;

private:
    friend FrameField make_frame(const MetricField&, const VectorField&, const GridSpec&,
                                 std::string, std::optional<Chart>);

    std::string name_;
    MetricField metric_;
    VectorField vector_;
    Chart domain_;

    PForm alpha_;           // 1-form
    PForm dalpha_;          // 2-form
    Rank2Tensor nabla_alpha_;
    Rank2Tensor nabla_q_;
    Rank2Tensor h_;         // covariant projection
    Rank2Tensor h_mixed_;   // h^mu_nu = delta - Q^mu Q_nu
    std::array<ScalarField, 4> accel_;
    ScalarField expansion_;
    Rank2Tensor rotation_;  // h-projected antisymmetric part
    Rank2Tensor shear_;
};

// Validates |g(V,V) - 1| <= norm_tol and V^0 > 0 over the grid, and that the
// grid lies inside the frame's domain. Throws ValidationError / DomainError.
FrameField make_frame(const MetricField& g, const VectorField& v, const GridSpec& grid,
                      std::string name, std::optional<Chart> domain = std::nullopt);

// h_{mu nu} = g_{mu nu} - Q_mu Q_nu as expressions (also kept inside FrameField).
Rank2Tensor projection_tensor(const MetricField& g, const VectorField& q);

// alpha_Q ^ d alpha_Q; identically zero iff the rest spaces mesh into
// hypersurfaces, equivalently iff the rotation tensor vanishes.
PForm frobenius_obstruction(const FrameField& frame);

// Vector dual of *(alpha ^ d alpha), scaled by 1/2 so that for slow rigid
// rotation the z-component tends to the angular velocity.
VectorField vortex_vector(const FrameField& frame);

struct SynchronizabilityReport {
    std::string frame;
    bool locally_synchronizable = false;        // alpha ^ d alpha below tol
    bool locally_proper_time_synchronizable = false; // d alpha below tol
    bool rotating = false;                      // omega_Q above tol somewhere
    bool inertial = false;                      // DQ below tol everywhere
    bool equivalence_consistent = false;        // (frobenius ~ 0) <=> (omega ~ 0)

    double max_dalpha = 0, max_frobenius = 0, max_rotation = 0, max_nabla_q = 0;
    Point at_dalpha{}, at_frobenius{}, at_rotation{}, at_nabla_q{};
    std::string grid_description;
    double tolerance = 0;
};

SynchronizabilityReport classify(const FrameField& frame, const GridSpec& grid,
                                 double tol = 1e-9);

struct AdaptedCoframe {
    PForm theta0;      // Z_mu dx^mu
    Rank2Tensor gamma; // g_mu_nu - Z_mu Z_nu (spatial part, negative semidefinite)
};

AdaptedCoframe adapted_coframe(const FrameField& frame);

// max over grid of |gamma_{mu nu} - (g_{mu nu} - theta0_mu theta0_nu)| plus the
// rank-3 / non-positive-spectrum check of gamma at the worst point.
struct CoframeCheck {
    double reconstruction_max = 0;
    double contraction_max = 0; // max |gamma_{mu nu} Q^nu|
    bool spatial_rank3 = false; // eigenvalues (0, -, -, -) at every grid point
};

CoframeCheck verify_coframe(const FrameField& frame, const GridSpec& grid,
                            double zero_tol = 1e-9);

struct DiagonalityResult {
    bool diagonal = false;
    double max_offdiagonal = 0; // max |g_{i0}| over the grid, i = 1..3
    Point at{};
};

// True iff the metric has no time-space cross terms anywhere on the grid.
DiagonalityResult diagonality_check(const MetricField& g, const GridSpec& grid,
                                    double tol = 1e-9);

} // namespace framelab
