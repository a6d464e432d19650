#pragma once

namespace chemocomp {

/// Coefficients of the two-species competition system with mutually repulsive
/// chemotaxis
///
///   u_t = d1 Δu + chi1 ∇·(u ∇c[v]) + b1 u (1 - u - a1 v)
///   v_t = d2 Δv + chi2 ∇·(v ∇c[u]) + b2 v (1 - v - a2 u)
///
/// on [0, L]^dim with no-flux boundaries, where c[ρ] solves c - Δc = ρ.
struct Params {
    double d1 = 1.0;
    double d2 = 1.0;
    double chi1 = 0.0;
    double chi2 = 0.0;
    double a1 = 0.5;
    double a2 = 0.5;
    double b1 = 1.0;
    double b2 = 1.0;
    double L = 1.0;
    int dim = 1;

    /// d1 = d2 = b1 = b2 = 1, a1 = a2 = a, chi1 = chi2 = chi.
    static Params symmetric(double a, double chi, double L, int dim = 1);

    /// Throws InvalidArgument unless d, a, b, L > 0, chi >= 0, dim in {1, 2},
    /// and every value is finite.
    void validate() const;

    /// True iff the coefficients reduce to the single-parameter symmetric system
    /// analysed by the stability and amplitude modules.
    bool is_symmetric() const noexcept;
};

struct Coexistence {
    double u;
    double v;
};

/// Spatially constant positive equilibrium
///   ū = (1 - a1) / (1 - a1 a2),  v̄ = (1 - a2) / (1 - a1 a2).
/// Throws NoCoexistence when a1 a2 == 1 or either component is not positive.
Coexistence coexistence_state(const Params& p);

}  // namespace chemocomp
