#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "chemocomp/field.hpp"
#include "chemocomp/params.hpp"

namespace chemocomp {

/// Σ ρ̄ |C| over all cells.
double mass(const Field& f);

/// max over cells of |ρ̄ - reference|.
double linf_amplitude(const Field& f, double reference);

enum class FrontSide { left, right };

/// Outermost crossing of level * max(f) on the given side of a 1D profile,
/// linearly interpolated between cell centres. Empty when the profile has no
/// such crossing (or the field is 2D).
std::optional<double> front_position(const Field& f, double level = 0.5,
                                     FrontSide side = FrontSide::right);

struct SpeedFit {
    double speed = 0.0;
    double intercept = 0.0;
    double max_residual = 0.0;  ///< max |position - fitted line| over the window
    std::size_t samples = 0;
};

/// Least-squares slope of position against time over the final
/// `window_fraction` of the samples. Throws InvalidArgument with fewer than 5
/// samples in the window.
SpeedFit wave_speed(std::span<const double> positions, std::span<const double> times,
                    double window_fraction = 0.25);

struct DiagnosticRecord {
    double t = 0.0;
    double mass_u = 0.0;
    double mass_v = 0.0;
    double amp_u = 0.0;
    double amp_v = 0.0;
    double min_u = 0.0;
    double min_v = 0.0;
    double max_u = 0.0;
    double max_v = 0.0;
    std::optional<double> front_u;
    std::optional<double> front_v;
};

struct DiagnosticsOptions {
    double reference_u = 0.0;  ///< amplitude reference for u (usually ū)
    double reference_v = 0.0;
    double front_level = 0.5;
    FrontSide front_side_u = FrontSide::right;
    FrontSide front_side_v = FrontSide::right;

    /// References set to the coexistence state when one exists, else 0.
    static DiagnosticsOptions for_params(const Params& p);
};

DiagnosticRecord measure(const State& s, const DiagnosticsOptions& opts);

struct TimeSeries {
    std::vector<DiagnosticRecord> records;

    std::size_t size() const noexcept { return records.size(); }
    std::vector<double> times() const;
    /// Times and positions of the samples where the front is defined.
    std::pair<std::vector<double>, std::vector<double>> front_track(bool species_u) const;
};

struct MonitorReport {
    bool mass_bound_ok = true;
    bool positivity_ok = true;
    double mass_bound = 0.0;   ///< ‖u₀‖₁ + ‖v₀‖₁ + 2 L^dim
    double max_mass = 0.0;     ///< max_t (M_u + M_v)
    double min_density = 0.0;  ///< min over t of min(u, v)
    /// min over t >= 1 of M(t) / min(M(1), 1); NaN when the run ends before t = 1.
    double extinction_floor_u = 0.0;
    double extinction_floor_v = 0.0;
    bool floor_warning = false;  ///< either floor below the warn threshold
};

/// Evaluates the global mass bound, near-positivity and the empirical
/// no-extinction floor over a completed series (first record = initial data).
MonitorReport monitors(const TimeSeries& series, const Params& p, double tol_neg = 1e-8,
                       double floor_warn_threshold = 0.1, double mass_slack = 1e-8);

}  // namespace chemocomp
