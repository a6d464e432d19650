#include "chemocomp/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "chemocomp/error.hpp"

namespace chemocomp {

namespace {

constexpr double kTieTolerance = 1e-12;

void require_weak_competition(double a) {
    if (!(a > 0.0 && a < 1.0)) throw InvalidArgument("stability analysis needs 0 < a < 1");
}

void require_length(double L) {
    if (!std::isfinite(L) || L <= 0.0) throw InvalidArgument("domain length must be > 0");
}

// Largest mode index per axis whose eigenvalue reaches lambda_max, plus margin.
int axis_cutoff(double L, double lambda_max) {
    return static_cast<int>(std::floor(L * std::sqrt(lambda_max) / std::numbers::pi)) + 2;
}

std::vector<Mode> lattice(int dim, int cutoff) {
    std::vector<Mode> modes;
    if (dim == 1) {
        for (int k = 1; k <= cutoff; ++k) modes.push_back({k, 0});
    } else {
        for (int k = 0; k <= cutoff; ++k)
            for (int j = 0; j <= cutoff; ++j)
                if (k != 0 || j != 0) modes.push_back({k, j});
    }
    return modes;
}

double mode_eigenvalue(const Mode& m, double L, int dim) {
    return dim == 1 ? neumann_eigenvalue(m.k, L) : neumann_eigenvalue(m.k, m.j, L);
}

void order_critical(std::vector<Mode>& modes) {
    std::sort(modes.begin(), modes.end(), [](const Mode& x, const Mode& y) {
        const bool xs = x.k >= x.j, ys = y.k >= y.j;
        if (xs != ys) return xs;
        if (x.k != y.k) return x.k > y.k;
        return x.j < y.j;
    });
}

}  // namespace

double neumann_eigenvalue(int k, double L) {
    if (k < 0) throw InvalidArgument("mode index must be >= 0");
    require_length(L);
    const double w = k * std::numbers::pi / L;
    return w * w;
}

double neumann_eigenvalue(int k, int j, double L) {
    return neumann_eigenvalue(k, L) + neumann_eigenvalue(j, L);
}

ModeJacobian jacobian_mode(double a, double lambda, double chi) {
    const double ubar = 1.0 / (1.0 + a);
    const double c = -lambda - ubar;
    const double d = -chi * ubar * lambda / (1.0 + lambda) - a * ubar;
    ModeJacobian J;
    J.matrix = {{{c, d}, {d, c}}};
    J.eig_in_phase = c + d;
    J.eig_out_of_phase = c - d;
    return J;
}

ModeJacobian jacobian_mode(const Params& p, double lambda) {
    if (!p.is_symmetric()) {
        throw Unsupported("mode Jacobian is only available for symmetric coefficients");
    }
    return jacobian_mode(p.a1, lambda, p.chi1);
}

double chi_star_k(double a, double lambda) {
    require_weak_competition(a);
    if (!(lambda > 0.0)) throw InvalidArgument("the constant mode has no threshold (lambda must be > 0)");
    return 2.0 + (1.0 - a) / lambda + lambda * (1.0 + a);
}

double optimal_eigenvalue(double a) {
    require_weak_competition(a);
    return std::sqrt((1.0 - a) / (1.0 + a));
}

CriticalThreshold chi_star(double a, double L, int dim) {
    require_weak_competition(a);
    require_length(L);
    if (dim != 1 && dim != 2) throw InvalidArgument("dim must be 1 or 2");

    std::vector<Mode> candidates;
    if (dim == 1) {
        // χ*_k is convex in λ: walk k upwards until past the real minimiser
        // and increasing, then keep one more mode.
        const double lambda_opt = optimal_eigenvalue(a);
        double previous = std::numeric_limits<double>::infinity();
        for (int k = 1;; ++k) {
            const double lam = neumann_eigenvalue(k, L);
            const double chi_k = chi_star_k(a, lam);
            candidates.push_back({k, 0});
            if (lam > lambda_opt && chi_k > previous) {
                candidates.push_back({k + 1, 0});
                break;
            }
            previous = chi_k;
        }
    } else {
        candidates = lattice(dim, axis_cutoff(L, optimal_eigenvalue(a)));
    }

    double best = std::numeric_limits<double>::infinity();
    for (const Mode& m : candidates) best = std::min(best, chi_star_k(a, mode_eigenvalue(m, L, dim)));

    CriticalThreshold out;
    out.chi_star = best;
    for (const Mode& m : candidates) {
        if (chi_star_k(a, mode_eigenvalue(m, L, dim)) - best <= kTieTolerance * best) {
            out.modes.push_back(m);
        }
    }
    order_critical(out.modes);
    return out;
}

double growth_rate_sigma(double eps, double a, double L) {
    if (!(eps >= 0.0)) throw InvalidArgument("growth rate formula needs eps >= 0");
    const CriticalThreshold ct = chi_star(a, L, 1);
    if (ct.tie()) throw Unsupported("two critical modes tie; growth rate is ambiguous");
    const double w2 = neumann_eigenvalue(ct.modes.front().k, L);
    const double ubar = 1.0 / (1.0 + a);
    return eps * ubar * w2 / (1.0 + w2);
}

StabilityReport stability_report(double a, double L, int dim, double chi) {
    const CriticalThreshold ct = chi_star(a, L, dim);
    StabilityReport rep;
    rep.a = a;
    rep.L = L;
    rep.dim = dim;
    rep.chi = chi;
    rep.chi_star = ct.chi_star;
    rep.critical = ct.modes;

    // Modes with χ*_k < chi have λ below the larger root of
    // (1 + a) λ² - (chi - 2) λ + (1 - a) = 0.
    double lambda_max = optimal_eigenvalue(a);
    for (const Mode& m : ct.modes) lambda_max = std::max(lambda_max, mode_eigenvalue(m, L, dim));
    const double disc = (chi - 2.0) * (chi - 2.0) - 4.0 * (1.0 - a * a);
    if (chi > 2.0 && disc >= 0.0) {
        lambda_max = std::max(lambda_max, ((chi - 2.0) + std::sqrt(disc)) / (2.0 * (1.0 + a)));
    }

    for (const Mode& m : lattice(dim, axis_cutoff(L, lambda_max))) {
        ModeEntry e;
        e.mode = m;
        e.lambda = mode_eigenvalue(m, L, dim);
        e.chi_k = chi_star_k(a, e.lambda);
        e.jacobian = jacobian_mode(a, e.lambda, chi);
        if (e.jacobian.eig_out_of_phase > 0.0 || e.jacobian.eig_in_phase > 0.0) {
            rep.stable = false;
            rep.growing.push_back(m);
        }
        rep.entries.push_back(e);
    }
    return rep;
}

}  // namespace chemocomp
