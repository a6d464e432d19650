#include "chemocomp/simulate.hpp"

#include <algorithm>

#include "chemocomp/error.hpp"

namespace chemocomp {

Trajectory simulate(const Params& p, Field u0, Field v0, const SchemeConfig& cfg,
                    const SimulateOptions& opts) {
    p.validate();
    cfg.validate();
    if (u0.grid().dim() != p.dim) throw InvalidArgument("grid dimension differs from params.dim");
    if (opts.series_stride < 1) throw InvalidArgument("series_stride must be >= 1");

    std::vector<double> pending = cfg.snapshot_times;
    std::sort(pending.begin(), pending.end());
    auto next_snapshot = pending.begin();
    const double snap_eps = 1e-9 * cfg.dt;

    Trajectory tr;
    State s = make_state(std::move(u0), std::move(v0), cfg);
    tr.series.records.push_back(measure(s, opts.diagnostics));
    auto take_snapshots = [&](const State& st) {
        bool taken = false;
        while (next_snapshot != pending.end() && st.t + snap_eps >= *next_snapshot) {
            if (!taken) tr.snapshots.push_back(st);
            taken = true;
            ++next_snapshot;
        }
    };
    take_snapshots(s);

    const long n = cfg.step_count();
    for (long i = 1; i <= n; ++i) {
        StepInfo info;
        s = step(s, p, cfg, &info);
        s.t = static_cast<double>(i) * cfg.dt;
        if (!info.monotone) ++tr.non_monotone_steps;
        if (!info.dominant) ++tr.non_dominant_steps;
        tr.steps = i;

        const bool keep_going = !opts.on_step || opts.on_step(s);
        if (i % opts.series_stride == 0 || i == n || !keep_going) {
            tr.series.records.push_back(measure(s, opts.diagnostics));
        }
        take_snapshots(s);
        if (!keep_going) {
            tr.stopped_early = i < n;
            break;
        }
    }
    tr.final = std::move(s);
    return tr;
}

Trajectory simulate(const Params& p, Field u0, Field v0, const SchemeConfig& cfg) {
    SimulateOptions opts;
    opts.diagnostics = DiagnosticsOptions::for_params(p);
    return simulate(p, std::move(u0), std::move(v0), cfg, opts);
}

}  // namespace chemocomp
