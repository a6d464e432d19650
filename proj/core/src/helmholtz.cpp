#include "chemocomp/helmholtz.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "chemocomp/error.hpp"

namespace chemocomp {

namespace {

// out = (I - D_xx - D_yy) c with mirrored ghost cells.
void apply_operator_2d(std::span<const double> c, std::span<double> out, std::size_t n,
                       double inv_h2) {
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t row = k * n;
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t i = row + j;
            const double ci = c[i];
            double lap = 0.0;
            if (j > 0) lap += c[i - 1] - ci;
            if (j + 1 < n) lap += c[i + 1] - ci;
            if (k > 0) lap += c[i - n] - ci;
            if (k + 1 < n) lap += c[i + n] - ci;
            out[i] = ci - lap * inv_h2;
        }
    }
}

double dot(std::span<const double> a, std::span<const double> b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

}  // namespace

TridiagonalSystem helmholtz_system_1d(const Grid& grid) {
    const std::size_t n = grid.n();
    const double inv_h2 = 1.0 / (grid.dx() * grid.dx());
    TridiagonalSystem sys(n);
    for (std::size_t j = 0; j < n; ++j) {
        double d = 1.0;
        if (j > 0) {
            sys.sub[j] = -inv_h2;
            d += inv_h2;
        }
        if (j + 1 < n) {
            sys.sup[j] = -inv_h2;
            d += inv_h2;
        }
        sys.diag[j] = d;
    }
    sys.rhs.clear();
    sys.assess();
    return sys;
}

Field solve_helmholtz_1d(const Field& rho) {
    const Grid& grid = rho.grid();
    if (grid.dim() != 1) throw InvalidArgument("solve_helmholtz_1d needs a 1D field");
    if (!rho.all_finite()) throw InvalidArgument("Helmholtz right-hand side is not finite");
    TridiagonalSystem sys = helmholtz_system_1d(grid);
    if (sys.dominance != Dominance::strict) {
        throw SingularSystem("Helmholtz system lost diagonal dominance");
    }
    sys.rhs.assign(rho.values().begin(), rho.values().end());
    return Field(grid, thomas_solve(sys));
}

Field solve_helmholtz_2d(const Field& rho, const HelmholtzOptions& opts, const Field* guess,
                         HelmholtzStats* stats) {
    const Grid& grid = rho.grid();
    if (grid.dim() != 2) throw InvalidArgument("solve_helmholtz_2d needs a 2D field");
    if (!(opts.tol > 0.0)) throw InvalidArgument("Helmholtz tolerance must be > 0");
    if (!rho.all_finite()) throw InvalidArgument("Helmholtz right-hand side is not finite");

    const std::size_t n = grid.n();
    const std::size_t m = grid.size();
    const double inv_h2 = 1.0 / (grid.dx() * grid.dx());
    const long cap = opts.max_iterations > 0 ? opts.max_iterations : static_cast<long>(10 * m);

    std::span<const double> b = rho.values();
    const double bnorm = std::sqrt(dot(b, b));
    Field c(grid, 0.0);
    if (bnorm == 0.0) {
        if (stats) *stats = {};
        return c;
    }

    const double mean_b = std::accumulate(b.begin(), b.end(), 0.0) / static_cast<double>(m);
    if (guess != nullptr && guess->grid() == grid && guess->all_finite()) {
        std::span<const double> g = guess->values();
        const double shift =
            mean_b - std::accumulate(g.begin(), g.end(), 0.0) / static_cast<double>(m);
        for (std::size_t i = 0; i < m; ++i) c[i] = g[i] + shift;
    } else {
        for (std::size_t i = 0; i < m; ++i) c[i] = b[i];
    }

    std::vector<double> r(m), p(m), ap(m);
    apply_operator_2d(c.values(), ap, n, inv_h2);
    for (std::size_t i = 0; i < m; ++i) r[i] = b[i] - ap[i];
    p = r;
    double rr = dot(r, r);
    const double target = opts.tol * bnorm;

    long it = 0;
    while (std::sqrt(rr) > target) {
        if (it >= cap) {
            throw NoConvergence("Helmholtz CG did not converge in " + std::to_string(cap) +
                                    " iterations (relative residual " +
                                    std::to_string(std::sqrt(rr) / bnorm) + ")",
                                std::sqrt(rr) / bnorm, it);
        }
        apply_operator_2d(p, ap, n, inv_h2);
        const double alpha = rr / dot(p, ap);
        for (std::size_t i = 0; i < m; ++i) {
            c[i] += alpha * p[i];
            r[i] -= alpha * ap[i];
        }
        const double rr_next = dot(r, r);
        const double beta = rr_next / rr;
        rr = rr_next;
        for (std::size_t i = 0; i < m; ++i) p[i] = r[i] + beta * p[i];
        ++it;
    }
    if (stats) *stats = {it, std::sqrt(rr) / bnorm};
    return c;
}

Field solve_helmholtz(const Field& rho, const HelmholtzOptions& opts, const Field* guess) {
    return rho.grid().dim() == 1 ? solve_helmholtz_1d(rho) : solve_helmholtz_2d(rho, opts, guess);
}

}  // namespace chemocomp
