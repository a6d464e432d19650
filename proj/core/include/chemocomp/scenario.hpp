#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chemocomp/amplitude.hpp"
#include "chemocomp/config.hpp"
#include "chemocomp/diagnostics.hpp"
#include "chemocomp/simulate.hpp"

namespace chemocomp {

Grid scenario_grid(const ScenarioConfig& cfg);

/// Initial densities for the configured kind, projected onto `grid`. Mode
/// data uses the critical mode of the stability analysis (the first reported
/// one on a tie). Throws InvalidArgument when A0 >= min(ū, v̄).
std::pair<Field, Field> make_initial(const ScenarioConfig& cfg, const Grid& grid,
                                     const Params& params);

struct RunSummary {
    std::string scenario;
    Params params;  ///< with eps applied
    std::optional<double> chi_star;
    std::optional<double> predicted_plateau;  ///< √(ελ₂/−λ₁) when eps is set in 1D
    std::optional<double> growth_rate;        ///< σ(k*) when eps >= 0 in 1D
    double plateau_u = 0.0;                   ///< A_amp of u at the final time
    double numerical_diffusion = 0.0;         ///< Lax-Friedrichs ν = dx² / (2 dt)
    MonitorReport monitors;
    std::optional<SpeedFit> speed;  ///< front speed of u, for segregated data
    bool boundary_contamination = false;
    long steps = 0;
    bool stopped_early = false;
    long non_monotone_steps = 0;
    long non_dominant_steps = 0;
    std::vector<std::string> warnings;
    std::vector<std::string> files;
};

struct RunResult {
    Trajectory trajectory;
    std::optional<AmplitudeSeries> ode;
    RunSummary summary;
};

struct RunOptions {
    bool write_files = true;
};

/// Runs one configured simulation. With write_files, writes
/// <dir>/<prefix>_series.csv, one <prefix>_snapshot_<t>.csv per requested
/// time, <prefix>_final.csv and <prefix>_summary.json.
///
/// Runs from segregated data stop as soon as a tracked front comes within
/// 10 cells of the boundary and record a contamination warning.
RunResult run_scenario(const ScenarioConfig& cfg, const RunOptions& opts = {});

struct SweepRow {
    double eps = 0.0;
    std::optional<double> plateau;  ///< A_amp of u at t_end
    double predicted = 0.0;         ///< steady_amplitude(eps)
    std::optional<MonitorReport> monitors;
    std::string error;              ///< non-empty when the run failed
};

/// One run per eps, concurrently; failures are recorded per row.
std::vector<SweepRow> sweep_epsilon(const ScenarioConfig& base, const std::vector<double>& eps);

void write_sweep(std::ostream& os, const std::vector<SweepRow>& rows);

}  // namespace chemocomp
