#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "chemocomp/field.hpp"

namespace chemocomp {

/// Coefficients of the weakly nonlinear amplitude equation
///   dA/dt = ε λ₂ A + λ₁ A³
/// for the symmetric system on [0, L] just above the threshold χ*.
struct AmplitudeCoefficients {
    double a = 0.0;
    double L = 0.0;
    int k_star = 0;
    double w = 0.0;   ///< k*π/L
    double w2 = 0.0;  ///< 2k*π/L
    double chi_star = 0.0;
    double u_bar = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
    double lambda1 = 0.0;
    double lambda2 = 0.0;
};

/// Throws Unsupported when two modes tie at the threshold and
/// InvalidArgument outside 0 < a < 1.
AmplitudeCoefficients amplitude_coefficients(double a, double L);

struct AmplitudeSeries {
    std::vector<double> t;
    std::vector<double> A;

    /// Linear interpolation; clamps outside the integrated range.
    double at(double time) const;
};

/// Classical fourth-order Runge-Kutta with fixed step dt_ode. Every step is
/// stored unless `stride` > 1.
AmplitudeSeries solve_amplitude_ode(const AmplitudeCoefficients& c, double eps, double A0,
                                    double t_end, double dt_ode = 1e-3, std::size_t stride = 1);

/// 0 for eps <= 0, else √(ε λ₂ / -λ₁). Throws Unsupported when λ₁ >= 0.
double steady_amplitude(const AmplitudeCoefficients& c, double eps);

/// Leading-order fields (ū, v̄) + A cos(w x) (1, -1) at the cell centres.
/// Throws InvalidArgument when a density would be nonpositive.
std::pair<Field, Field> reconstruct_solution(const AmplitudeCoefficients& c, double A,
                                             const Grid& grid);

struct PitchforkPoint {
    double a = 0.0;
    double L = 0.0;
    int k_star = 0;
    double lambda1 = 0.0;
    bool tie = false;  ///< skipped: two critical modes
};

struct PitchforkScan {
    std::vector<PitchforkPoint> points;
    std::size_t ties = 0;
    bool all_negative = true;  ///< λ₁ < 0 at every non-tie point
};

/// λ₁ on an n_a x n_L grid spanning [a_min, a_max] x [L_min, L_max], inclusive.
PitchforkScan pitchfork_scan(double a_min, double a_max, double L_min, double L_max,
                             std::size_t n_a, std::size_t n_L);

}  // namespace chemocomp
