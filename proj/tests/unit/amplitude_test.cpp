#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "chemocomp/amplitude.hpp"
#include "chemocomp/diagnostics.hpp"
#include "chemocomp/error.hpp"
#include "chemocomp/stability.hpp"

using namespace chemocomp;

namespace {

// Closed-form solution of dA/dt = α A + β A³ (a Bernoulli equation):
//   A(t)² = α A0² e^{2αt} / (α + β A0² (1 - e^{2αt})).
double bernoulli(double alpha, double beta, double A0, double t) {
    const double e = std::exp(2.0 * alpha * t);
    return A0 * std::sqrt(alpha * e / (alpha + beta * A0 * A0 * (1.0 - e)));
}

}  // namespace

TEST(AmplitudeCoefficients, ReferenceCase) {
    // 40-digit reference evaluation.
    const AmplitudeCoefficients c = amplitude_coefficients(0.2, 2.0);
    EXPECT_EQ(c.k_star, 1);
    EXPECT_NEAR(c.chi_star, 5.285109107982288, 1e-12);
    EXPECT_NEAR(c.u_bar, 5.0 / 6.0, 1e-15);
    EXPECT_NEAR(c.c1, 3.360881320326808, 1e-12);
    EXPECT_NEAR(c.c2, 0.2260377642369625, 1e-13);
    EXPECT_NEAR(c.lambda1, -1.626622967980595, 1e-12);
    EXPECT_NEAR(c.lambda2, 0.5929996340483325, 1e-13);
    EXPECT_GT(c.c1, 0.0);
    EXPECT_GT(c.c2, 0.0);
    EXPECT_GT(c.lambda2, 0.0);
}

TEST(AmplitudeCoefficients, WeakCompetitionLimit) {
    const AmplitudeCoefficients c = amplitude_coefficients(1.0 - 1e-9, 2.0);
    EXPECT_NEAR(c.c1, 2.0 * c.w * c.w, 1e-6);
}

TEST(AmplitudeCoefficients, Errors) {
    EXPECT_THROW(amplitude_coefficients(1.2, 2.0), InvalidArgument);
    const double L_tie = std::pow(4.0 * std::pow(std::numbers::pi, 4) * 1.2 / 0.8, 0.25);
    EXPECT_THROW(amplitude_coefficients(0.2, L_tie), Unsupported);
}

TEST(AmplitudeCoefficients, LinearRateMatchesStability) {
    for (double a : {0.1, 0.2, 0.6})
        for (double L : {1.0, 2.0, 3.3, 30.0}) {
            const AmplitudeCoefficients c = amplitude_coefficients(a, L);
            EXPECT_NEAR(0.05 * c.lambda2, growth_rate_sigma(0.05, a, L), 1e-12);
        }
}

TEST(AmplitudeOde, ZeroIsEquilibrium) {
    const AmplitudeSeries s = solve_amplitude_ode(amplitude_coefficients(0.2, 2.0), 0.05, 0.0, 10.0);
    for (double A : s.A) EXPECT_EQ(A, 0.0);
}

TEST(AmplitudeOde, DecaysBelowThreshold) {
    const AmplitudeSeries s = solve_amplitude_ode(amplitude_coefficients(0.2, 2.0), -0.05, 0.01, 200.0);
    for (std::size_t i = 1; i < s.A.size(); ++i) EXPECT_LT(s.A[i], s.A[i - 1]);
    EXPECT_LT(s.A.back(), 0.01 * std::exp(-0.05 * 0.59 * 200.0) * 1.01);
}

TEST(AmplitudeOde, MatchesBernoulliSolution) {
    const AmplitudeCoefficients c = amplitude_coefficients(0.2, 2.0);
    for (double eps : {0.05, 0.4, -0.05}) {
        const AmplitudeSeries s = solve_amplitude_ode(c, eps, 1e-2, 200.0);
        double err = 0.0;
        for (std::size_t i = 0; i < s.t.size(); ++i)
            err = std::max(err, std::abs(s.A[i] - bernoulli(eps * c.lambda2, c.lambda1, 1e-2, s.t[i])));
        EXPECT_LE(err, 1e-8) << "eps=" << eps;
    }
}

TEST(AmplitudeOde, MonotoneTowardPlateau) {
    const AmplitudeCoefficients c = amplitude_coefficients(0.2, 2.0);
    const AmplitudeSeries s = solve_amplitude_ode(c, 0.05, 1e-2, 200.0, 1e-3, 100);
    for (std::size_t i = 1; i < s.A.size(); ++i) EXPECT_GE(s.A[i], s.A[i - 1]);
    EXPECT_NEAR(s.A.back(), 0.1350108789772613, 1e-4);
    EXPECT_NEAR(s.t.back(), 200.0, 1e-9);
    EXPECT_NEAR(s.at(s.t[3] * 0.5 + s.t[4] * 0.5), 0.5 * (s.A[3] + s.A[4]), 1e-15);
}

TEST(SteadyAmplitude, Values) {
    const AmplitudeCoefficients c = amplitude_coefficients(0.2, 2.0);
    EXPECT_EQ(steady_amplitude(c, -0.05), 0.0);
    EXPECT_NEAR(steady_amplitude(c, 0.05), 0.1350108789772613, 1e-14);
    EXPECT_NEAR(steady_amplitude(c, 0.2), 2.0 * steady_amplitude(c, 0.05), 1e-15);
    const double A = steady_amplitude(c, 0.05);
    EXPECT_LE(std::abs(0.05 * c.lambda2 * A + c.lambda1 * A * A * A), 1e-14);
    AmplitudeCoefficients sub = c;
    sub.lambda1 = 0.3;
    EXPECT_THROW(steady_amplitude(sub, 0.05), Unsupported);
}

TEST(Reconstruct, Structure) {
    const AmplitudeCoefficients c = amplitude_coefficients(0.2, 2.0);
    const Grid g = build_grid(2.0, 40);
    const auto [u0, v0] = reconstruct_solution(c, 0.0, g);
    for (std::size_t j = 0; j < g.n(); ++j) {
        EXPECT_EQ(u0[j], c.u_bar);
        EXPECT_EQ(v0[j], c.u_bar);
    }
    const auto [u, v] = reconstruct_solution(c, 0.1, g);
    for (std::size_t j = 0; j < g.n(); ++j) EXPECT_NEAR(u[j] - c.u_bar, -(v[j] - c.u_bar), 1e-15);
    // Peak of |cos| over the cell centres sits at the first centre.
    EXPECT_NEAR(linf_amplitude(u, c.u_bar), 0.1 * std::cos(c.w * g.dx() / 2.0), 1e-15);
    EXPECT_THROW(reconstruct_solution(c, 0.9, g), InvalidArgument);
}

TEST(PitchforkScan, ReferencePointAndGrid) {
    EXPECT_LT(amplitude_coefficients(0.2, 2.0).lambda1, 0.0);
    const PitchforkScan s = pitchfork_scan(0.05, 0.95, 0.2, 4.0, 21, 21);
    EXPECT_EQ(s.points.size(), 441u);
    EXPECT_TRUE(s.all_negative);
    for (const auto& pt : s.points)
        if (!pt.tie) EXPECT_LT(pt.lambda1, 0.0);
    EXPECT_THROW(pitchfork_scan(0.0, 0.5, 1.0, 2.0, 3, 3), InvalidArgument);
}
