#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "chemocomp/field.hpp"
#include "chemocomp/params.hpp"
#include "chemocomp/tridiagonal.hpp"

namespace chemocomp {

struct SchemeConfig {
    double dt = 0.01;
    double t_end = 1.0;
    double tol_neg = 1e-8;
    std::vector<double> snapshot_times;
    double elliptic_tol = 1e-10;

    /// Throws InvalidArgument unless dt > 0, t_end >= dt, tol_neg >= 0 and
    /// elliptic_tol > 0.
    void validate() const;
    /// Number of fixed-size steps needed to reach t_end.
    long step_count() const;
};

/// Centred differences (c[i+1] - c[i-1]) / (2h) of a chemical at every cell,
/// with mirrored ghost values at the boundary. `gy` is empty for 1D fields.
struct ChemGradient {
    std::vector<double> gx;
    std::vector<double> gy;
};

ChemGradient chem_face_gradient(const Field& c);

/// Lax-Friedrichs face flux for a drift that is linear in the density,
/// φ(ρ) = p ρ, with p frozen at the previous time level:
///   η = ½ (p_L ρ_L + p_R ρ_R) - (h / 2Δt) (ρ_R - ρ_L).
/// Stored as η = on_left ρ_L + on_right ρ_R + constant.
struct FaceFlux {
    double on_left;
    double on_right;
    double constant = 0.0;

    double operator()(double rho_left, double rho_right) const noexcept {
        return on_left * rho_left + on_right * rho_right + constant;
    }
};

FaceFlux lax_friedrichs_flux(double drift_left, double drift_right, double dx, double dt);

/// Reaction value and partial derivatives at the previous time level.
/// `d_self` is ∂f/∂(own density), `d_other` is ∂f/∂(competitor).
struct ReactionTerms {
    double value;
    double d_self;
    double d_other;
};

struct ReactionPair {
    ReactionTerms u;
    ReactionTerms v;
};

ReactionPair linearized_reaction(double u, double v, const Params& p);

enum class Axis { x, y };

/// Tridiagonal factor (I - (d D_hh - D_h + R) Δt) along one axis, where D_h is
/// the Lax-Friedrichs flux difference, D_hh the diffusion stencil and R the
/// diagonal reaction Jacobian assigned to this factor. Coefficients for line l
/// (a row for Axis::x, a column for Axis::y) occupy [l * n, (l + 1) * n).
/// Boundary faces carry zero flux.
struct DirectionalOperator {
    Axis axis = Axis::x;
    std::size_t lines = 0;
    std::size_t n = 0;
    std::vector<double> sub;
    std::vector<double> diag;
    std::vector<double> sup;
    Dominance dominance = Dominance::none;  ///< worst line
    bool monotone = true;                   ///< all off-diagonals <= 0

    std::span<const double> line_sub(std::size_t l) const { return {sub.data() + l * n, n}; }
    std::span<const double> line_diag(std::size_t l) const { return {diag.data() + l * n, n}; }
    std::span<const double> line_sup(std::size_t l) const { return {sup.data() + l * n, n}; }
};

/// `drift` holds p per cell (in the grid's storage order), `reaction` the
/// diagonal Jacobian per cell or is empty for none.
DirectionalOperator assemble_directional(Axis axis, const Grid& grid, std::span<const double> drift,
                                         double diffusion, std::span<const double> reaction,
                                         double dt);

/// Per-step bookkeeping, filled when the caller passes a pointer.
struct StepInfo {
    bool monotone = true;
    bool dominant = true;  ///< every factor strictly diagonally dominant
    long elliptic_iterations = 0;
};

/// Builds the initial state: copies the densities and solves for the chemicals.
State make_state(Field u, Field v, const SchemeConfig& cfg, double t = 0.0);

/// One semi-implicit step on a 1D grid: a single tridiagonal solve per
/// species, both species driven by time-n data of the other, then a chemical
/// refresh. Throws SchemeFailure on undershoot below -tol_neg. A factor that
/// loses strict diagonal dominance (|drift| >= 2d/dx + 2dx/dt roughly) is
/// still solved and reported through `info`.
State step_1d(const State& s, const Params& p, const SchemeConfig& cfg, StepInfo* info = nullptr);

/// One ADI step on a square 2D grid: x-sweep with the full reaction Jacobian,
/// then a pure transport y-sweep, for each species.
State adi_step_2d(const State& s, const Params& p, const SchemeConfig& cfg,
                  StepInfo* info = nullptr);

/// Dispatches on the grid dimension.
State step(const State& s, const Params& p, const SchemeConfig& cfg, StepInfo* info = nullptr);

}  // namespace chemocomp
