#include "chemocomp/amplitude.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "chemocomp/error.hpp"
#include "chemocomp/stability.hpp"

namespace chemocomp {

AmplitudeCoefficients amplitude_coefficients(double a, double L) {
    const CriticalThreshold ct = chi_star(a, L, 1);
    if (ct.tie()) {
        throw Unsupported("amplitude equation assumes a single critical mode; modes tie at this L");
    }
    AmplitudeCoefficients c;
    c.a = a;
    c.L = L;
    c.k_star = ct.modes.front().k;
    c.w = c.k_star * std::numbers::pi / L;
    c.w2 = 2.0 * c.w;
    c.chi_star = ct.chi_star;
    c.u_bar = 1.0 / (1.0 + a);

    const double wk2 = c.w * c.w;
    const double w2k2 = c.w2 * c.w2;
    c.c1 = c.chi_star * wk2 / (1.0 + wk2) + (a - 1.0) / 2.0;
    const double c1_closed = (1.0 - a) / 2.0 + (1.0 + a) * wk2;
    if (std::abs(c.c1 - c1_closed) > 1e-12 * std::max(1.0, std::abs(c1_closed))) {
        throw NumericalFailure("c1 consistency check failed: threshold and critical mode disagree");
    }
    c.c2 = c.c1 / (c.chi_star * c.u_bar * w2k2 / (1.0 + w2k2) + w2k2 + 1.0);
    c.lambda1 = c.chi_star * ((a - 1.0 - c.c2) * wk2 / (2.0 * (1.0 + wk2)) -
                              c.c2 * c.w * c.w2 / (2.0 * (1.0 + w2k2))) -
                (c.c2 + a - 1.0);
    c.lambda2 = c.u_bar * wk2 / (1.0 + wk2);
    return c;
}

double AmplitudeSeries::at(double time) const {
    if (t.empty()) throw InvalidArgument("empty amplitude series");
    if (time <= t.front()) return A.front();
    if (time >= t.back()) return A.back();
    const auto it = std::upper_bound(t.begin(), t.end(), time);
    const std::size_t i = static_cast<std::size_t>(it - t.begin());
    const double s = (time - t[i - 1]) / (t[i] - t[i - 1]);
    return A[i - 1] + s * (A[i] - A[i - 1]);
}

AmplitudeSeries solve_amplitude_ode(const AmplitudeCoefficients& c, double eps, double A0,
                                    double t_end, double dt_ode, std::size_t stride) {
    if (!(dt_ode > 0.0)) throw InvalidArgument("dt_ode must be > 0");
    if (!(t_end >= 0.0)) throw InvalidArgument("t_end must be >= 0");
    if (stride == 0) stride = 1;

    const double linear = eps * c.lambda2;
    const double cubic = c.lambda1;
    auto rhs = [&](double A) { return linear * A + cubic * A * A * A; };

    const auto steps = static_cast<std::size_t>(std::ceil(t_end / dt_ode - 1e-9));
    AmplitudeSeries out;
    out.t.reserve(steps / stride + 2);
    out.A.reserve(steps / stride + 2);
    out.t.push_back(0.0);
    out.A.push_back(A0);

    double A = A0;
    for (std::size_t i = 1; i <= steps; ++i) {
        const double k1 = rhs(A);
        const double k2 = rhs(A + 0.5 * dt_ode * k1);
        const double k3 = rhs(A + 0.5 * dt_ode * k2);
        const double k4 = rhs(A + dt_ode * k3);
        A += dt_ode / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (i % stride == 0 || i == steps) {
            out.t.push_back(static_cast<double>(i) * dt_ode);
            out.A.push_back(A);
        }
    }
    return out;
}

double steady_amplitude(const AmplitudeCoefficients& c, double eps) {
    if (!(c.lambda1 < 0.0)) {
        throw Unsupported("lambda1 >= 0: subcritical bifurcation, no small stable amplitude");
    }
    if (eps <= 0.0) return 0.0;
    return std::sqrt(eps * c.lambda2 / -c.lambda1);
}

std::pair<Field, Field> reconstruct_solution(const AmplitudeCoefficients& c, double A,
                                             const Grid& grid) {
    if (grid.dim() != 1) throw InvalidArgument("amplitude reconstruction is one-dimensional");
    if (std::abs(A) >= c.u_bar) {
        throw InvalidArgument("amplitude too large: reconstructed density would be nonpositive");
    }
    const double w = c.w;
    Field u = project([&](double x) { return c.u_bar + A * std::cos(w * x); }, grid);
    Field v = project([&](double x) { return c.u_bar - A * std::cos(w * x); }, grid);
    return {std::move(u), std::move(v)};
}

PitchforkScan pitchfork_scan(double a_min, double a_max, double L_min, double L_max,
                             std::size_t n_a, std::size_t n_L) {
    if (n_a < 2 || n_L < 2) throw InvalidArgument("pitchfork scan needs at least 2 points per axis");
    if (!(a_min > 0.0 && a_max < 1.0 && a_min <= a_max)) {
        throw InvalidArgument("a range must lie inside (0, 1)");
    }
    if (!(L_min > 0.0 && L_min <= L_max)) throw InvalidArgument("L range must be positive");

    PitchforkScan scan;
    for (std::size_t i = 0; i < n_a; ++i) {
        const double a = a_min + (a_max - a_min) * static_cast<double>(i) / static_cast<double>(n_a - 1);
        for (std::size_t j = 0; j < n_L; ++j) {
            const double L =
                L_min + (L_max - L_min) * static_cast<double>(j) / static_cast<double>(n_L - 1);
            PitchforkPoint pt;
            pt.a = a;
            pt.L = L;
            try {
                const AmplitudeCoefficients c = amplitude_coefficients(a, L);
                pt.k_star = c.k_star;
                pt.lambda1 = c.lambda1;
                if (!(c.lambda1 < 0.0)) scan.all_negative = false;
            } catch (const Unsupported&) {
                pt.tie = true;
                ++scan.ties;
            }
            scan.points.push_back(pt);
        }
    }
    return scan;
}

}  // namespace chemocomp
