#include "chemocomp/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "chemocomp/error.hpp"

namespace chemocomp {

double mass(const Field& f) {
    const auto vals = f.values();
    return std::accumulate(vals.begin(), vals.end(), 0.0) * f.grid().cell_volume();
}

double linf_amplitude(const Field& f, double reference) {
    double m = 0.0;
    for (double x : f.values()) m = std::max(m, std::abs(x - reference));
    return m;
}

std::optional<double> front_position(const Field& f, double level, FrontSide side) {
    const Grid& g = f.grid();
    if (g.dim() != 1) return std::nullopt;
    const std::size_t n = g.n();
    const double threshold = level * f.max();
    if (!(threshold > 0.0)) return std::nullopt;

    if (side == FrontSide::right) {
        std::size_t j = n;
        while (j-- > 0 && f[j] < threshold) {
        }
        if (j + 1 >= n || j >= n) return std::nullopt;  // at boundary, or nothing above level
        const double frac = (f[j] - threshold) / (f[j] - f[j + 1]);
        return g.center(j) + frac * g.dx();
    }
    std::size_t j = 0;
    while (j < n && f[j] < threshold) ++j;
    if (j == 0 || j >= n) return std::nullopt;
    const double frac = (f[j] - threshold) / (f[j] - f[j - 1]);
    return g.center(j) - frac * g.dx();
}

SpeedFit wave_speed(std::span<const double> positions, std::span<const double> times,
                    double window_fraction) {
    if (positions.size() != times.size()) throw InvalidArgument("positions and times differ in length");
    const std::size_t total = positions.size();
    const auto count = static_cast<std::size_t>(std::ceil(window_fraction * static_cast<double>(total)));
    const std::size_t first = total - std::min(total, count);
    const std::size_t m = total - first;
    if (m < 5) throw InvalidArgument("wave speed fit needs at least 5 samples in the window");

    double st = 0.0, sx = 0.0;
    for (std::size_t i = first; i < total; ++i) {
        st += times[i];
        sx += positions[i];
    }
    const double tm = st / static_cast<double>(m);
    const double xm = sx / static_cast<double>(m);
    double stt = 0.0, stx = 0.0;
    for (std::size_t i = first; i < total; ++i) {
        stt += (times[i] - tm) * (times[i] - tm);
        stx += (times[i] - tm) * (positions[i] - xm);
    }
    if (stt == 0.0) throw InvalidArgument("wave speed fit needs distinct times");

    SpeedFit fit;
    fit.speed = stx / stt;
    fit.intercept = xm - fit.speed * tm;
    fit.samples = m;
    for (std::size_t i = first; i < total; ++i) {
        const double r = positions[i] - (fit.intercept + fit.speed * times[i]);
        fit.max_residual = std::max(fit.max_residual, std::abs(r));
    }
    return fit;
}

DiagnosticsOptions DiagnosticsOptions::for_params(const Params& p) {
    DiagnosticsOptions o;
    try {
        const Coexistence c = coexistence_state(p);
        o.reference_u = c.u;
        o.reference_v = c.v;
    } catch (const NoCoexistence&) {
    }
    return o;
}

DiagnosticRecord measure(const State& s, const DiagnosticsOptions& opts) {
    DiagnosticRecord r;
    r.t = s.t;
    r.mass_u = mass(s.u);
    r.mass_v = mass(s.v);
    r.amp_u = linf_amplitude(s.u, opts.reference_u);
    r.amp_v = linf_amplitude(s.v, opts.reference_v);
    r.min_u = s.u.min();
    r.min_v = s.v.min();
    r.max_u = s.u.max();
    r.max_v = s.v.max();
    r.front_u = front_position(s.u, opts.front_level, opts.front_side_u);
    r.front_v = front_position(s.v, opts.front_level, opts.front_side_v);
    return r;
}

std::vector<double> TimeSeries::times() const {
    std::vector<double> t;
    t.reserve(records.size());
    for (const auto& r : records) t.push_back(r.t);
    return t;
}

std::pair<std::vector<double>, std::vector<double>> TimeSeries::front_track(bool species_u) const {
    std::pair<std::vector<double>, std::vector<double>> out;
    for (const auto& r : records) {
        const auto& f = species_u ? r.front_u : r.front_v;
        if (f) {
            out.first.push_back(r.t);
            out.second.push_back(*f);
        }
    }
    return out;
}

MonitorReport monitors(const TimeSeries& series, const Params& p, double tol_neg,
                       double floor_warn_threshold, double mass_slack) {
    MonitorReport rep;
    if (series.records.empty()) return rep;
    const auto& first = series.records.front();
    rep.mass_bound = first.mass_u + first.mass_v + 2.0 * std::pow(p.L, p.dim);
    rep.min_density = std::numeric_limits<double>::infinity();

    const DiagnosticRecord* at_one = nullptr;
    for (const auto& r : series.records) {
        rep.max_mass = std::max(rep.max_mass, r.mass_u + r.mass_v);
        rep.min_density = std::min({rep.min_density, r.min_u, r.min_v});
        if (!at_one && r.t >= 1.0 - 1e-12) at_one = &r;
    }
    rep.mass_bound_ok = rep.max_mass <= rep.mass_bound + mass_slack;
    rep.positivity_ok = rep.min_density >= -tol_neg;

    const double nan = std::numeric_limits<double>::quiet_NaN();
    rep.extinction_floor_u = rep.extinction_floor_v = nan;
    if (at_one) {
        const double ref_u = std::min(at_one->mass_u, 1.0);
        const double ref_v = std::min(at_one->mass_v, 1.0);
        double fu = std::numeric_limits<double>::infinity();
        double fv = fu;
        for (const auto& r : series.records) {
            if (r.t < at_one->t) continue;
            fu = std::min(fu, r.mass_u / ref_u);
            fv = std::min(fv, r.mass_v / ref_v);
        }
        rep.extinction_floor_u = fu;
        rep.extinction_floor_v = fv;
        rep.floor_warning = fu < floor_warn_threshold || fv < floor_warn_threshold;
    }
    return rep;
}

}  // namespace chemocomp
