#pragma once

#include "chemocomp/field.hpp"
#include "chemocomp/tridiagonal.hpp"

namespace chemocomp {

// Screened Poisson problem c - Δc = ρ with homogeneous Neumann boundaries,
// discretised by central differences on the cell-centred grid. The boundary
// closure mirrors the first interior cell (c_0 = c_1), which keeps the
// operator symmetric with unit column sums, so Σc = Σρ holds exactly.

struct HelmholtzOptions {
    double tol = 1e-10;       ///< relative residual ‖ρ - A c‖₂ / ‖ρ‖₂ (2D only)
    long max_iterations = 0;  ///< 0 selects 10 N²
};

struct HelmholtzStats {
    long iterations = 0;
    double relative_residual = 0.0;
};

/// Assembled (I - D_xx) for an N-cell 1D grid; rhs is left empty.
TridiagonalSystem helmholtz_system_1d(const Grid& grid);

/// Direct tridiagonal solve.
Field solve_helmholtz_1d(const Field& rho);

/// Conjugate gradients on the SPD five-point operator. `guess`, when given, is
/// shifted to the mean of ρ before use so the initial residual carries no
/// constant component; that keeps the mass identity at rounding level.
/// Throws NoConvergence when the iteration cap is hit.
Field solve_helmholtz_2d(const Field& rho, const HelmholtzOptions& opts = {},
                         const Field* guess = nullptr, HelmholtzStats* stats = nullptr);

/// Dispatches on the grid dimension.
Field solve_helmholtz(const Field& rho, const HelmholtzOptions& opts = {},
                      const Field* guess = nullptr);

}  // namespace chemocomp
