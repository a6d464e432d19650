#include "chemocomp/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <fmt/core.h>

#include "chemocomp/error.hpp"
#include "chemocomp/helmholtz.hpp"

namespace chemocomp {

void SchemeConfig::validate() const {
    if (!std::isfinite(dt) || dt <= 0.0) throw InvalidArgument("dt must be > 0");
    if (!std::isfinite(t_end) || t_end < dt) throw InvalidArgument("t_end must be >= dt");
    if (!(tol_neg >= 0.0)) throw InvalidArgument("tol_neg must be >= 0");
    if (!(elliptic_tol > 0.0)) throw InvalidArgument("elliptic_tol must be > 0");
}

long SchemeConfig::step_count() const {
    return static_cast<long>(std::ceil(t_end / dt - 1e-9));
}

ChemGradient chem_face_gradient(const Field& c) {
    const Grid& g = c.grid();
    const std::size_t n = g.n();
    const double inv_2h = 1.0 / (2.0 * g.dx());
    ChemGradient out;
    if (g.dim() == 1) {
        out.gx.resize(n);
        for (std::size_t j = 0; j < n; ++j) {
            const double left = c[j > 0 ? j - 1 : 0];
            const double right = c[j + 1 < n ? j + 1 : n - 1];
            out.gx[j] = (right - left) * inv_2h;
        }
        return out;
    }
    out.gx.resize(g.size());
    out.gy.resize(g.size());
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t i = g.index(j, k);
            out.gx[i] = (c(j + 1 < n ? j + 1 : n - 1, k) - c(j > 0 ? j - 1 : 0, k)) * inv_2h;
            out.gy[i] = (c(j, k + 1 < n ? k + 1 : n - 1) - c(j, k > 0 ? k - 1 : 0)) * inv_2h;
        }
    }
    return out;
}

FaceFlux lax_friedrichs_flux(double drift_left, double drift_right, double dx, double dt) {
    const double damping = dx / (2.0 * dt);
    return {0.5 * drift_left + damping, 0.5 * drift_right - damping, 0.0};
}

ReactionPair linearized_reaction(double u, double v, const Params& p) {
    return {
        {p.b1 * u * (1.0 - u - p.a1 * v), p.b1 * (1.0 - 2.0 * u - p.a1 * v), -p.b1 * p.a1 * u},
        {p.b2 * v * (1.0 - v - p.a2 * u), p.b2 * (1.0 - 2.0 * v - p.a2 * u), -p.b2 * p.a2 * v},
    };
}

DirectionalOperator assemble_directional(Axis axis, const Grid& grid, std::span<const double> drift,
                                         double diffusion, std::span<const double> reaction,
                                         double dt) {
    const std::size_t n = grid.n();
    const std::size_t lines = grid.dim() == 1 ? 1 : n;
    if (grid.dim() == 1 && axis == Axis::y) throw InvalidArgument("1D grids have no y axis");
    if (drift.size() != grid.size() || (!reaction.empty() && reaction.size() != grid.size())) {
        throw InvalidArgument("coefficient arrays do not match the grid");
    }

    const double h = grid.dx();
    const double alpha = diffusion * dt / (h * h);
    const double q_scale = dt / (2.0 * h);

    DirectionalOperator op;
    op.axis = axis;
    op.lines = lines;
    op.n = n;
    op.sub.assign(lines * n, 0.0);
    op.diag.assign(lines * n, 0.0);
    op.sup.assign(lines * n, 0.0);
    op.dominance = Dominance::strict;

    for (std::size_t l = 0; l < lines; ++l) {
        auto cell = [&](std::size_t i) { return axis == Axis::x ? l * n + i : i * n + l; };
        const std::size_t base = l * n;
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t c = cell(i);
            const double q = q_scale * drift[c];
            double d = 1.0 - (reaction.empty() ? 0.0 : dt * reaction[c]);
            if (i > 0) {
                d += alpha + 0.5 - q;
                op.sub[base + i] = -alpha - 0.5 - q_scale * drift[cell(i - 1)];
            }
            if (i + 1 < n) {
                d += alpha + 0.5 + q;
                op.sup[base + i] = -alpha - 0.5 + q_scale * drift[cell(i + 1)];
            }
            op.diag[base + i] = d;
            if (op.sub[base + i] > 0.0 || op.sup[base + i] > 0.0) op.monotone = false;
        }
        const Dominance line_dom = diagonal_dominance(op.line_sub(l), op.line_diag(l), op.line_sup(l));
        if (static_cast<int>(line_dom) < static_cast<int>(op.dominance)) op.dominance = line_dom;
    }
    return op;
}

State make_state(Field u, Field v, const SchemeConfig& cfg, double t) {
    if (!(u.grid() == v.grid())) throw InvalidArgument("u and v live on different grids");
    if (!u.all_finite() || !v.all_finite()) throw InvalidArgument("initial data is not finite");
    HelmholtzOptions opts{cfg.elliptic_tol, 0};
    State s;
    s.cu = solve_helmholtz(u, opts);
    s.cv = solve_helmholtz(v, opts);
    s.u = std::move(u);
    s.v = std::move(v);
    s.t = t;
    return s;
}

namespace {

struct SpeciesCoefficients {
    double diffusion;
    double chi;
};

void record(const DirectionalOperator& op, StepInfo& flags) {
    flags.monotone = flags.monotone && op.monotone;
    flags.dominant = flags.dominant && op.dominance == Dominance::strict;
}

// rhs = ρⁿ + Δt (f(ρⁿ) - ∂f/∂ρ ρⁿ); reaction_diag = ∂f/∂ρ.
void reaction_parts(const State& s, const Params& p, bool first_species, std::vector<double>& rhs,
                    std::vector<double>& reaction_diag, double dt) {
    const std::size_t m = s.u.size();
    rhs.resize(m);
    reaction_diag.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        const ReactionPair r = linearized_reaction(s.u[i], s.v[i], p);
        const ReactionTerms& t = first_species ? r.u : r.v;
        const double rho = first_species ? s.u[i] : s.v[i];
        reaction_diag[i] = t.d_self;
        rhs[i] = rho + dt * (t.value - t.d_self * rho);
    }
}

void check_undershoot(const Field& f, double tol_neg, const char* species, double t) {
    const double lo = f.min();
    if (!(lo >= -tol_neg)) {
        throw SchemeFailure(fmt::format("density {} fell to {:.3g} at t = {:g}; reduce dt", species, lo, t));
    }
}

Field advance_species_1d(const State& s, const Params& p, const SchemeConfig& cfg, bool first,
                         StepInfo& flags) {
    const Grid& grid = s.u.grid();
    const SpeciesCoefficients coef = first ? SpeciesCoefficients{p.d1, p.chi1}
                                           : SpeciesCoefficients{p.d2, p.chi2};
    // Repulsion: species u drifts down the gradient of c[v] and vice versa.
    ChemGradient g = chem_face_gradient(first ? s.cv : s.cu);
    for (double& x : g.gx) x *= -coef.chi;

    std::vector<double> rhs, reaction;
    reaction_parts(s, p, first, rhs, reaction, cfg.dt);
    const DirectionalOperator op =
        assemble_directional(Axis::x, grid, g.gx, coef.diffusion, reaction, cfg.dt);
    record(op, flags);

    Field out(grid);
    std::vector<double> scratch(grid.n());
    thomas_solve(op.line_sub(0), op.line_diag(0), op.line_sup(0), rhs, out.values(), scratch);
    return out;
}

Field advance_species_2d(const State& s, const Params& p, const SchemeConfig& cfg, bool first,
                         StepInfo& flags) {
    const Grid& grid = s.u.grid();
    const std::size_t n = grid.n();
    const SpeciesCoefficients coef = first ? SpeciesCoefficients{p.d1, p.chi1}
                                           : SpeciesCoefficients{p.d2, p.chi2};
    ChemGradient g = chem_face_gradient(first ? s.cv : s.cu);
    for (double& x : g.gx) x *= -coef.chi;
    for (double& y : g.gy) y *= -coef.chi;

    std::vector<double> rhs, reaction;
    reaction_parts(s, p, first, rhs, reaction, cfg.dt);

    const DirectionalOperator ox =
        assemble_directional(Axis::x, grid, g.gx, coef.diffusion, reaction, cfg.dt);
    const DirectionalOperator oy = assemble_directional(Axis::y, grid, g.gy, coef.diffusion, {}, cfg.dt);
    record(ox, flags);
    record(oy, flags);

    std::vector<double> star(grid.size());
    std::vector<double> scratch(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::span<const double> b(rhs.data() + k * n, n);
        std::span<double> x(star.data() + k * n, n);
        thomas_solve(ox.line_sub(k), ox.line_diag(k), ox.line_sup(k), b, x, scratch);
    }

    Field out(grid);
    std::vector<double> column(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) column[k] = star[k * n + j];
        thomas_solve(oy.line_sub(j), oy.line_diag(j), oy.line_sup(j), column, column, scratch);
        for (std::size_t k = 0; k < n; ++k) out(j, k) = column[k];
    }
    return out;
}

State finish_step(const State& s, Field u, Field v, const SchemeConfig& cfg, StepInfo* info) {
    const double t = s.t + cfg.dt;
    check_undershoot(u, cfg.tol_neg, "u", t);
    check_undershoot(v, cfg.tol_neg, "v", t);

    State next;
    const HelmholtzOptions opts{cfg.elliptic_tol, 0};
    if (u.grid().dim() == 1) {
        next.cu = solve_helmholtz_1d(u);
        next.cv = solve_helmholtz_1d(v);
    } else {
        HelmholtzStats su, sv;
        next.cu = solve_helmholtz_2d(u, opts, &s.cu, &su);
        next.cv = solve_helmholtz_2d(v, opts, &s.cv, &sv);
        if (info) info->elliptic_iterations = su.iterations + sv.iterations;
    }
    next.u = std::move(u);
    next.v = std::move(v);
    next.t = t;
    return next;
}

}  // namespace

State step_1d(const State& s, const Params& p, const SchemeConfig& cfg, StepInfo* info) {
    if (s.u.grid().dim() != 1) throw InvalidArgument("step_1d needs a 1D state");
    StepInfo flags;
    Field u = advance_species_1d(s, p, cfg, true, flags);
    Field v = advance_species_1d(s, p, cfg, false, flags);
    if (info) *info = flags;
    return finish_step(s, std::move(u), std::move(v), cfg, info);
}

State adi_step_2d(const State& s, const Params& p, const SchemeConfig& cfg, StepInfo* info) {
    if (s.u.grid().dim() != 2) throw InvalidArgument("adi_step_2d needs a 2D state");
    StepInfo flags;
    Field u = advance_species_2d(s, p, cfg, true, flags);
    Field v = advance_species_2d(s, p, cfg, false, flags);
    if (info) *info = flags;
    return finish_step(s, std::move(u), std::move(v), cfg, info);
}

State step(const State& s, const Params& p, const SchemeConfig& cfg, StepInfo* info) {
    return s.u.grid().dim() == 1 ? step_1d(s, p, cfg, info) : adi_step_2d(s, p, cfg, info);
}

}  // namespace chemocomp
