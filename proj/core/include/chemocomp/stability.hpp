#pragma once

#include <array>
#include <vector>

#include "chemocomp/params.hpp"

namespace chemocomp {

// Linear stability of the coexistence state ū = v̄ = 1/(1+a) for the symmetric
// system (d = b = 1, a1 = a2 = a, chi1 = chi2 = chi) on [0, L] or [0, L]^2.

/// Neumann mode: cos(kπx/L) in 1D, cos(kπx/L) cos(jπy/L) in 2D (j = 0 in 1D).
struct Mode {
    int k = 0;
    int j = 0;
    friend bool operator==(const Mode&, const Mode&) = default;
};

/// (kπ/L)^2, and (kπ/L)^2 + (jπ/L)^2 for the 2D overload.
double neumann_eigenvalue(int k, double L);
double neumann_eigenvalue(int k, int j, double L);

/// Linearisation of one Neumann mode. The matrix has the form [[c, d], [d, c]],
/// so its eigenvalues are c + d along (1, 1) and c - d along (1, -1).
struct ModeJacobian {
    std::array<std::array<double, 2>, 2> matrix{};
    double eig_in_phase = 0.0;      ///< c + d, eigenvector (1, 1)
    double eig_out_of_phase = 0.0;  ///< c - d, eigenvector (1, -1)
};

ModeJacobian jacobian_mode(double a, double lambda, double chi);
/// Throws Unsupported unless `p` is symmetric; uses a = a1 and chi = chi1.
ModeJacobian jacobian_mode(const Params& p, double lambda);

/// χ*_k = (1 + λ)/λ (λ(a + 1) + 1 - a) = 2 + (1 - a)/λ + λ(1 + a).
/// Throws InvalidArgument for λ <= 0 or a outside (0, 1).
double chi_star_k(double a, double lambda);

/// Real minimiser √((1 - a)/(1 + a)) of χ*_k over λ > 0.
double optimal_eigenvalue(double a);

struct CriticalThreshold {
    double chi_star = 0.0;
    std::vector<Mode> modes;  ///< all modes within 1e-12 (relative) of the minimum
    bool tie() const noexcept { return modes.size() > 1; }
};

/// Exact minimum of χ*_k over the nonzero integer modes of the interval or the
/// square. 2D modes are reported with k >= j first.
CriticalThreshold chi_star(double a, double L, int dim = 1);

/// σ = ε ū w² / (1 + w²) for the critical mode w = k*π/L of the interval.
/// Throws Unsupported when two modes tie, InvalidArgument for eps < 0.
double growth_rate_sigma(double eps, double a, double L);

struct ModeEntry {
    Mode mode;
    double lambda = 0.0;
    double chi_k = 0.0;
    ModeJacobian jacobian;
};

struct StabilityReport {
    double a = 0.0;
    double L = 0.0;
    int dim = 1;
    double chi = 0.0;  ///< query value
    double chi_star = 0.0;
    std::vector<Mode> critical;
    std::vector<ModeEntry> entries;  ///< every mode that can destabilise at chi, plus margin
    bool stable = true;
    std::vector<Mode> growing;
};

/// Scans all modes whose threshold can lie below max(chi, χ*) and classifies
/// the query value.
StabilityReport stability_report(double a, double L, int dim, double chi);

}  // namespace chemocomp
