#pragma once

#include <functional>
#include <vector>

#include "chemocomp/diagnostics.hpp"
#include "chemocomp/field.hpp"
#include "chemocomp/params.hpp"
#include "chemocomp/scheme.hpp"

namespace chemocomp {

struct SimulateOptions {
    DiagnosticsOptions diagnostics;
    long series_stride = 1;  ///< record diagnostics every n-th step (plus t = 0 and the last step)
    /// Called after every step; returning false stops the run early.
    std::function<bool(const State&)> on_step;
};

struct Trajectory {
    State final;
    TimeSeries series;
    std::vector<State> snapshots;
    long steps = 0;
    bool stopped_early = false;
    long non_monotone_steps = 0;  ///< steps whose implicit factors had positive off-diagonals
    long non_dominant_steps = 0;  ///< steps with a factor that was not strictly diagonally dominant
};

/// Advances (u0, v0) to cfg.t_end with fixed steps of cfg.dt. The state at
/// step i carries t = i * dt exactly. Snapshots are taken at the first step
/// reaching each requested time.
Trajectory simulate(const Params& p, Field u0, Field v0, const SchemeConfig& cfg,
                    const SimulateOptions& opts);
Trajectory simulate(const Params& p, Field u0, Field v0, const SchemeConfig& cfg);

}  // namespace chemocomp
