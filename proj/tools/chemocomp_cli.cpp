#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "chemocomp/amplitude.hpp"
#include "chemocomp/config.hpp"
#include "chemocomp/error.hpp"
#include "chemocomp/scenario.hpp"
#include "chemocomp/stability.hpp"

using namespace chemocomp;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitNumerical = 2;

int cmd_simulate(const std::string& path, bool quiet) {
    const ScenarioConfig cfg = load_config(path);
    const RunResult res = run_scenario(cfg);
    const RunSummary& s = res.summary;
    if (!quiet) {
        fmt::print("scenario      {}\n", s.scenario);
        fmt::print("steps         {}{}\n", s.steps, s.stopped_early ? " (stopped early)" : "");
        fmt::print("t_final       {:g}\n", res.trajectory.final.t);
        if (s.chi_star) fmt::print("chi_star      {:.10g}\n", *s.chi_star);
        fmt::print("chi1, chi2    {:.10g}, {:.10g}\n", s.params.chi1, s.params.chi2);
        fmt::print("A_amp(u) end  {:.6g}\n", s.plateau_u);
        if (s.predicted_plateau) fmt::print("A(inf) pred   {:.6g}\n", *s.predicted_plateau);
        if (s.speed) {
            fmt::print("wave speed    {:.6g} (max residual {:.3g}, {} samples)\n", s.speed->speed,
                       s.speed->max_residual, s.speed->samples);
        }
        fmt::print("mass bound    {} (max {:.6g} <= {:.6g})\n", s.monitors.mass_bound_ok ? "ok" : "VIOLATED",
                   s.monitors.max_mass, s.monitors.mass_bound);
        fmt::print("min density   {:.3e}\n", s.monitors.min_density);
        for (const auto& f : s.files) fmt::print("wrote         {}\n", f);
    }
    for (const auto& w : s.warnings) fmt::print(stderr, "warning: {}\n", w);
    return kExitOk;
}

std::string mode_string(const Mode& m, int dim) {
    return dim == 1 ? fmt::format("k={}", m.k) : fmt::format("(k,j)=({},{})", m.k, m.j);
}

int cmd_stability(double a, double L, int dim, const std::optional<double>& chi) {
    const CriticalThreshold ct = chi_star(a, L, dim);
    fmt::print("chi_star {:.12g}\n", ct.chi_star);
    for (const Mode& m : ct.modes) {
        const double lam = dim == 1 ? neumann_eigenvalue(m.k, L) : neumann_eigenvalue(m.k, m.j, L);
        fmt::print("critical {} lambda={:.12g}\n", mode_string(m, dim), lam);
    }
    if (ct.tie()) fmt::print("note: {} modes tie at the threshold\n", ct.modes.size());
    if (chi) {
        const StabilityReport r = stability_report(a, L, dim, *chi);
        fmt::print("chi {:.12g}: {}\n", *chi, r.stable ? "stable" : "unstable");
        for (const Mode& m : r.growing) {
            for (const ModeEntry& e : r.entries) {
                if (e.mode == m) {
                    fmt::print("growing {} lambda={:.6g} chi_k={:.6g} rate={:.6g}\n", mode_string(m, dim),
                               e.lambda, e.chi_k, std::max(e.jacobian.eig_in_phase, e.jacobian.eig_out_of_phase));
                }
            }
        }
    }
    return kExitOk;
}

int cmd_amplitude(double a, double L, double eps, double A0, double t_end, double dt_ode, double every) {
    const AmplitudeCoefficients c = amplitude_coefficients(a, L);
    fmt::print(stderr, "a={:.12g} L={:.12g} k_star={} chi_star={:.15g}\n", c.a, c.L, c.k_star, c.chi_star);
    fmt::print(stderr, "c1={:.15g} c2={:.15g} lambda1={:.15g} lambda2={:.15g}\n", c.c1, c.c2, c.lambda1,
               c.lambda2);
    if (c.lambda1 < 0.0) fmt::print(stderr, "steady_amplitude={:.15g}\n", steady_amplitude(c, eps));
    const auto stride = static_cast<std::size_t>(std::max(1.0, std::round(every / dt_ode)));
    const AmplitudeSeries s = solve_amplitude_ode(c, eps, A0, t_end, dt_ode, stride);
    fmt::print("t,A\n");
    for (std::size_t i = 0; i < s.t.size(); ++i) fmt::print("{:.16e},{:.16e}\n", s.t[i], s.A[i]);
    return kExitOk;
}

int cmd_sweep(const std::string& path, const std::vector<double>& eps, const std::string& out) {
    const ScenarioConfig cfg = load_config(path);
    const auto rows = sweep_epsilon(cfg, eps);
    if (out.empty()) {
        write_sweep(std::cout, rows);
    } else {
        std::ofstream os(out);
        if (!os) throw ConfigError("out", "cannot write '" + out + "'");
        write_sweep(os, rows);
    }
    bool numerical = false;
    for (const auto& r : rows) {
        if (!r.error.empty()) {
            fmt::print(stderr, "eps={:g}: {}\n", r.eps, r.error);
            numerical = true;
        }
    }
    return numerical ? kExitNumerical : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-species competition with repulsive chemotaxis: simulation and analysis"};
    app.require_subcommand(1);

    std::string config_path;
    bool quiet = false;
    auto* sim = app.add_subcommand("simulate", "Run a configured scenario and write CSV output");
    sim->add_option("config", config_path, "INI scenario file")->required();
    sim->add_flag("-q,--quiet", quiet, "Only print warnings");

    double a = 0.2, L = 2.0, eps = 0.05, A0 = 1e-2, t_end = 200.0, dt_ode = 1e-3, every = 0.1;
    int dim = 1;
    std::optional<double> chi;
    auto* stab = app.add_subcommand("stability", "Critical chemotactic threshold of the symmetric system");
    stab->add_option("--a", a, "Competition coefficient, 0 < a < 1")->required();
    stab->add_option("--L", L, "Domain length")->required();
    stab->add_option("--dim", dim, "1 or 2")->check(CLI::IsMember({1, 2}));
    stab->add_option("--chi", chi, "Classify this chemotactic coefficient");

    auto* amp = app.add_subcommand("amplitude", "Integrate the amplitude equation; CSV on stdout");
    amp->add_option("--a", a, "Competition coefficient, 0 < a < 1")->required();
    amp->add_option("--L", L, "Domain length")->required();
    amp->add_option("--eps", eps, "chi - chi_star")->required();
    amp->add_option("--A0", A0, "Initial amplitude")->capture_default_str();
    amp->add_option("--t-end", t_end, "Final time")->capture_default_str();
    amp->add_option("--dt-ode", dt_ode, "Runge-Kutta step")->capture_default_str();
    amp->add_option("--every", every, "Output interval")->capture_default_str();

    std::vector<double> eps_list;
    std::string out;
    auto* sweep = app.add_subcommand("sweep", "Plateau amplitude against eps, one run per value");
    sweep->add_option("config", config_path, "INI scenario file (amplitude-verify base)")->required();
    sweep->add_option("--eps", eps_list, "Comma-separated eps values")->required()->delimiter(',');
    sweep->add_option("-o,--out", out, "Write the table here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (*sim) return cmd_simulate(config_path, quiet);
        if (*stab) return cmd_stability(a, L, dim, chi);
        if (*amp) return cmd_amplitude(a, L, eps, A0, t_end, dt_ode, every);
        if (*sweep) return cmd_sweep(config_path, eps_list, out);
    } catch (const NumericalFailure& e) {
        fmt::print(stderr, "numerical failure: {}\n", e.what());
        return kExitNumerical;
    } catch (const std::exception& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return kExitConfig;
    }
    return kExitOk;
}
