#include "chemocomp/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <numbers>
#include <random>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "chemocomp/csv.hpp"
#include "chemocomp/error.hpp"
#include "chemocomp/scheme.hpp"
#include "chemocomp/stability.hpp"

namespace chemocomp {

namespace {

// Midpoint projection of height * 1_[lo, hi].
Field indicator(const Grid& g, double lo, double hi, double height) {
    return project([=](double x) { return lo <= x && x <= hi ? height : 0.0; }, g);
}

Field gaussian(const Grid& g, double sigma_sq, std::array<double, 2> c) {
    if (g.dim() == 1) {
        const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi * sigma_sq);
        return project([&](double x) { return norm * std::exp(-(x - c[0]) * (x - c[0]) / (2.0 * sigma_sq)); },
                       g);
    }
    const double norm = 1.0 / (2.0 * std::numbers::pi * sigma_sq);
    return project(
        [&](double x, double y) {
            const double r2 = (x - c[0]) * (x - c[0]) + (y - c[1]) * (y - c[1]);
            return norm * std::exp(-r2 / (2.0 * sigma_sq));
        },
        g);
}

Mode critical_mode(const Params& p) {
    return chi_star(p.a1, p.L, p.dim).modes.front();
}

bool has_threshold(const Params& p) {
    return p.is_symmetric() && p.a1 > 0.0 && p.a1 < 1.0;
}

std::string time_tag(double t) { return fmt::format("{:g}", t); }

nlohmann::json to_json(const RunSummary& s) {
    nlohmann::json j;
    j["scenario"] = s.scenario;
    j["params"] = {{"d1", s.params.d1},     {"d2", s.params.d2}, {"chi1", s.params.chi1},
                   {"chi2", s.params.chi2}, {"a1", s.params.a1}, {"a2", s.params.a2},
                   {"b1", s.params.b1},     {"b2", s.params.b2}, {"L", s.params.L},
                   {"dim", s.params.dim}};
    auto opt = [](const std::optional<double>& x) { return x ? nlohmann::json(*x) : nlohmann::json(); };
    j["chi_star"] = opt(s.chi_star);
    j["predicted_plateau"] = opt(s.predicted_plateau);
    j["growth_rate"] = opt(s.growth_rate);
    j["plateau_u"] = s.plateau_u;
    j["numerical_diffusion"] = s.numerical_diffusion;
    const MonitorReport& m = s.monitors;
    auto finite_or_null = [](double x) { return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(); };
    j["monitors"] = {{"mass_bound_ok", m.mass_bound_ok},
                     {"positivity_ok", m.positivity_ok},
                     {"mass_bound", m.mass_bound},
                     {"max_mass", m.max_mass},
                     {"min_density", m.min_density},
                     {"extinction_floor_u", finite_or_null(m.extinction_floor_u)},
                     {"extinction_floor_v", finite_or_null(m.extinction_floor_v)},
                     {"floor_warning", m.floor_warning}};
    if (s.speed) {
        j["wave_speed"] = {{"speed", s.speed->speed},
                           {"intercept", s.speed->intercept},
                           {"max_residual", s.speed->max_residual},
                           {"samples", s.speed->samples}};
    }
    j["boundary_contamination"] = s.boundary_contamination;
    j["steps"] = s.steps;
    j["stopped_early"] = s.stopped_early;
    j["non_monotone_steps"] = s.non_monotone_steps;
    j["non_dominant_steps"] = s.non_dominant_steps;
    j["warnings"] = s.warnings;
    j["files"] = s.files;
    return j;
}

}  // namespace

Grid scenario_grid(const ScenarioConfig& cfg) {
    return build_grid(cfg.params.L, cfg.N, cfg.params.dim);
}

std::pair<Field, Field> make_initial(const ScenarioConfig& cfg, const Grid& grid,
                                     const Params& params) {
    const InitialSpec& in = cfg.initial;
    const double L = params.L;
    Field u, v;
    switch (in.kind) {
        case InitialKind::perturbed_mode: {
            if (!has_threshold(params)) {
                throw InvalidArgument("perturbed-mode data needs symmetric coefficients with 0 < a < 1");
            }
            const Coexistence s = coexistence_state(params);
            if (in.A0 >= std::min(s.u, s.v)) {
                throw InvalidArgument("A0 >= min(u_bar, v_bar): initial density would be nonpositive");
            }
            const Mode m = critical_mode(params);
            const double wk = m.k * std::numbers::pi / L;
            const double wj = m.j * std::numbers::pi / L;
            const double A0 = in.A0;
            if (grid.dim() == 1) {
                u = project([&](double x) { return s.u + A0 * std::cos(wk * x); }, grid);
                v = project([&](double x) { return s.v - A0 * std::cos(wk * x); }, grid);
            } else {
                u = project([&](double x, double y) { return s.u + A0 * std::cos(wk * x) * std::cos(wj * y); },
                            grid);
                v = project([&](double x, double y) { return s.v - A0 * std::cos(wk * x) * std::cos(wj * y); },
                            grid);
            }
            break;
        }
        case InitialKind::segregated:
            u = indicator(grid, in.s2, L, 1.0 / (L - in.s2));
            v = indicator(grid, 0.0, in.s1, 1.0 / in.s1);
            break;
        case InitialKind::compact:
            u = indicator(grid, in.I1[0], in.I1[1], 1.0 / (in.I1[1] - in.I1[0]));
            v = indicator(grid, in.I2[0], in.I2[1], 1.0 / (in.I2[1] - in.I2[0]));
            break;
        case InitialKind::gaussian: {
            const std::array<double, 2> c = in.center.value_or(std::array<double, 2>{L / 2.0, L / 2.0});
            u = gaussian(grid, in.sigma1_sq, c);
            v = gaussian(grid, in.sigma2_sq, c);
            break;
        }
        case InitialKind::constant: {
            const Coexistence s = coexistence_state(params);
            u = Field(grid, s.u);
            v = Field(grid, s.v);
            break;
        }
    }
    if (in.noise > 0.0) {
        std::mt19937_64 rng(in.seed);
        std::uniform_real_distribution<double> unit(-1.0, 1.0);
        for (std::size_t i = 0; i < u.size(); ++i) u[i] *= 1.0 + in.noise * unit(rng);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] *= 1.0 + in.noise * unit(rng);
    }
    return {std::move(u), std::move(v)};
}

RunResult run_scenario(const ScenarioConfig& cfg, const RunOptions& run_opts) {
    cfg.validate();
    const Params p = cfg.effective_params();
    const Grid grid = scenario_grid(cfg);
    auto [u0, v0] = make_initial(cfg, grid, p);

    RunSummary sum;
    sum.scenario = cfg.scenario;
    sum.params = p;
    sum.numerical_diffusion = grid.dx() * grid.dx() / (2.0 * cfg.scheme.dt);

    SimulateOptions opts;
    opts.series_stride = cfg.series_stride;
    opts.diagnostics = cfg.diagnostics;
    const DiagnosticsOptions refs = DiagnosticsOptions::for_params(p);
    opts.diagnostics.reference_u = refs.reference_u;
    opts.diagnostics.reference_v = refs.reference_v;

    const bool segregated = cfg.initial.kind == InitialKind::segregated;
    if (segregated) {
        const double margin = 10.0 * grid.dx();
        const DiagnosticsOptions d = opts.diagnostics;
        opts.on_step = [&sum, margin, d, L = p.L](const State& s) {
            for (const auto& [f, side] : {std::pair{&s.u, d.front_side_u}, std::pair{&s.v, d.front_side_v}}) {
                const auto x = front_position(*f, d.front_level, side);
                if (x && (*x < margin || *x > L - margin)) {
                    sum.boundary_contamination = true;
                    return false;
                }
            }
            return true;
        };
    }

    {
        // Smearing check against the initial drift scale.
        const State s0 = make_state(u0, v0, cfg.scheme);
        double grad = 0.0;
        for (const Field* c : {&s0.cu, &s0.cv}) {
            const ChemGradient g = chem_face_gradient(*c);
            for (double x : g.gx) grad = std::max(grad, std::abs(x));
            for (double y : g.gy) grad = std::max(grad, std::abs(y));
        }
        const double damping = grid.dx() / (2.0 * cfg.scheme.dt);
        const double drift = 10.0 * std::max(p.chi1, p.chi2) * grad;
        if (damping > drift) {
            sum.warnings.push_back(fmt::format(
                "Lax-Friedrichs dissipation dx/(2dt) = {:.3g} exceeds 10 * max(chi) * max|grad c| = {:.3g} "
                "at t = 0; the solution will be noticeably smeared",
                damping, drift));
        }
    }

    RunResult res;
    res.trajectory = simulate(p, std::move(u0), std::move(v0), cfg.scheme, opts);
    const Trajectory& tr = res.trajectory;
    sum.steps = tr.steps;
    sum.stopped_early = tr.stopped_early;
    sum.non_monotone_steps = tr.non_monotone_steps;
    sum.non_dominant_steps = tr.non_dominant_steps;
    sum.plateau_u = tr.series.records.back().amp_u;
    sum.monitors = monitors(tr.series, p, cfg.scheme.tol_neg);

    if (has_threshold(p)) {
        const CriticalThreshold ct = chi_star(p.a1, p.L, p.dim);
        sum.chi_star = ct.chi_star;
        if (cfg.eps) {
            const Mode m = ct.modes.front();
            const double lam = p.dim == 1 ? neumann_eigenvalue(m.k, p.L) : neumann_eigenvalue(m.k, m.j, p.L);
            const double shift = (1.0 + lam) * (1.0 + p.a1) * sum.numerical_diffusion;
            if (shift > 0.1 * std::abs(*cfg.eps)) {
                sum.warnings.push_back(fmt::format(
                    "Lax-Friedrichs smearing (nu = {:.3g}) raises the effective threshold by about {:.3g}, "
                    "comparable to eps = {:.3g}; expect slower growth and a lower plateau than the "
                    "amplitude equation predicts. Refine dx (with dt ~ dx) to reduce it.",
                    sum.numerical_diffusion, shift, *cfg.eps));
            }
            if (p.dim == 1 && !ct.tie()) {
                const AmplitudeCoefficients c = amplitude_coefficients(p.a1, p.L);
                if (c.lambda1 < 0.0) sum.predicted_plateau = steady_amplitude(c, *cfg.eps);
                if (*cfg.eps >= 0.0) sum.growth_rate = growth_rate_sigma(*cfg.eps, p.a1, p.L);
                if (cfg.initial.kind == InitialKind::perturbed_mode) {
                    res.ode = solve_amplitude_ode(c, *cfg.eps, cfg.initial.A0, cfg.scheme.t_end);
                }
            }
        }
    }

    if (segregated) {
        const auto [times, positions] = tr.series.front_track(true);
        try {
            sum.speed = wave_speed(positions, times);
        } catch (const InvalidArgument& e) {
            sum.warnings.push_back(std::string("no wave speed: ") + e.what());
        }
        if (sum.boundary_contamination) {
            sum.warnings.push_back(fmt::format(
                "a front came within 10 cells of the boundary at t = {:g}; run stopped early",
                tr.final.t));
        }
    }
    if (!sum.monitors.mass_bound_ok) sum.warnings.push_back("mass bound violated");
    if (!sum.monitors.positivity_ok) sum.warnings.push_back("density below -tol_neg");
    if (sum.monitors.floor_warning) sum.warnings.push_back("extinction floor below 0.1");
    if (tr.non_monotone_steps > 0) {
        sum.warnings.push_back(fmt::format(
            "{} steps had implicit factors with positive off-diagonals (|drift| > dx/dt + 2d/dx); "
            "positivity is not guaranteed there",
            tr.non_monotone_steps));
    }
    if (tr.non_dominant_steps > 0) {
        sum.warnings.push_back(fmt::format(
            "{} steps had implicit factors that were not strictly diagonally dominant", tr.non_dominant_steps));
    }

    if (run_opts.write_files) {
        namespace fs = std::filesystem;
        const fs::path dir(cfg.output.dir);
        fs::create_directories(dir);
        const std::string prefix = cfg.output.prefix.empty() ? cfg.scenario : cfg.output.prefix;
        auto open = [&](const std::string& name) {
            const fs::path path = dir / (prefix + name);
            std::ofstream os(path);
            if (!os) throw Error("cannot write '" + path.string() + "'");
            sum.files.push_back(path.string());
            return os;
        };
        {
            auto os = open("_series.csv");
            write_time_series(os, tr.series, res.ode ? &*res.ode : nullptr);
        }
        for (const State& s : tr.snapshots) {
            auto os = open("_snapshot_" + time_tag(s.t) + ".csv");
            write_snapshot(os, s);
        }
        {
            auto os = open("_final.csv");
            write_snapshot(os, tr.final);
        }
        const fs::path summary_path = dir / (prefix + "_summary.json");
        sum.files.push_back(summary_path.string());
        std::ofstream os(summary_path);
        if (!os) throw Error("cannot write '" + summary_path.string() + "'");
        os << to_json(sum).dump(2) << '\n';
    }

    res.summary = std::move(sum);
    return res;
}

std::vector<SweepRow> sweep_epsilon(const ScenarioConfig& base, const std::vector<double>& eps) {
    std::vector<std::future<SweepRow>> jobs;
    jobs.reserve(eps.size());
    for (double e : eps) {
        jobs.push_back(std::async(std::launch::async, [base, e] {
            SweepRow row;
            row.eps = e;
            try {
                ScenarioConfig cfg = base;
                cfg.eps = e;
                const AmplitudeCoefficients c = amplitude_coefficients(cfg.params.a1, cfg.params.L);
                row.predicted = steady_amplitude(c, e);
                RunOptions quiet;
                quiet.write_files = false;
                const RunSummary sum = run_scenario(cfg, quiet).summary;
                row.plateau = sum.plateau_u;
                row.monitors = sum.monitors;
            } catch (const std::exception& ex) {
                row.error = ex.what();
            }
            return row;
        }));
    }
    std::vector<SweepRow> rows;
    rows.reserve(jobs.size());
    for (auto& j : jobs) rows.push_back(j.get());
    return rows;
}

void write_sweep(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << "eps,plateau,predicted,error\n";
    for (const SweepRow& r : rows) {
        std::string err = r.error;
        std::replace(err.begin(), err.end(), ',', ';');
        os << fmt::format("{:.16e},{},{:.16e},{}\n", r.eps,
                          r.plateau ? fmt::format("{:.16e}", *r.plateau) : std::string(), r.predicted,
                          err);
    }
}

}  // namespace chemocomp
