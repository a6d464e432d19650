#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "chemocomp/diagnostics.hpp"
#include "chemocomp/error.hpp"
#include "chemocomp/helmholtz.hpp"
#include "chemocomp/simulate.hpp"

using namespace chemocomp;

TEST(Mass, ConstantAndIndicator) {
    EXPECT_NEAR(mass(Field(build_grid(7.0, 13), 2.0)), 14.0, 1e-13);
    EXPECT_NEAR(mass(Field(build_grid(3.0, 10, 2), 0.5)), 4.5, 1e-13);
    const Grid g = build_grid(100.0, 1000);
    const Field f = project([](double x) { return x >= 45 && x <= 55 ? 0.1 : 0.0; }, g);
    EXPECT_NEAR(mass(f), 1.0, g.dx());
}

TEST(Mass, ChemicalHasSameMass) {
    const Grid g = build_grid(10.0, 50);
    const Field rho = project([](double x) { return std::exp(-(x - 3) * (x - 3)); }, g);
    EXPECT_NEAR(mass(solve_helmholtz(rho)), mass(rho), 1e-13);
}

TEST(Mass, LinearAndTranslationInvariant) {
    const Grid g = build_grid(10.0, 100);
    const Field a = project([](double x) { return x < 5 ? std::sin(x) + 1 : 0.0; }, g);
    Field shifted(g, 0.0), combo(g, 0.0);
    for (std::size_t j = 0; j + 20 < g.n(); ++j) shifted[j + 20] = a[j];
    for (std::size_t j = 0; j < g.n(); ++j) combo[j] = 3.0 * a[j];
    EXPECT_NEAR(mass(shifted), mass(a), 1e-12);
    EXPECT_NEAR(mass(combo), 3.0 * mass(a), 1e-12);
}

TEST(LinfAmplitude, Basics) {
    const Grid g = build_grid(2.0, 8);
    EXPECT_EQ(linf_amplitude(Field(g, 0.8), 0.8), 0.0);
    Field f(g, 0.8);
    f[3] = 0.75;
    EXPECT_NEAR(linf_amplitude(f, 0.8), 0.05, 1e-15);
}

TEST(FrontPosition, StepProfile) {
    const Grid g = build_grid(10.0, 100);
    const Field f = project([](double x) { return x < 5 ? 1.0 : 0.0; }, g);
    const auto x = front_position(f, 0.5, FrontSide::right);
    ASSERT_TRUE(x);
    EXPECT_NEAR(*x, 5.0, g.dx());
}

TEST(FrontPosition, LeftSideAndTranslation) {
    const Grid g = build_grid(20.0, 200);
    auto bump = [](double c) { return [c](double x) { return std::exp(-(x - c) * (x - c)); }; };
    const Field a = project(bump(8.0), g), b = project(bump(10.0), g);
    for (FrontSide side : {FrontSide::left, FrontSide::right}) {
        const auto xa = front_position(a, 0.5, side), xb = front_position(b, 0.5, side);
        ASSERT_TRUE(xa && xb);
        EXPECT_NEAR(*xb - *xa, 2.0, 1e-12);
    }
    EXPECT_LT(*front_position(a, 0.5, FrontSide::left), 8.0);
    EXPECT_GT(*front_position(a, 0.5, FrontSide::right), 8.0);
}

TEST(FrontPosition, UndefinedCases) {
    const Grid g = build_grid(10.0, 20);
    EXPECT_FALSE(front_position(Field(g, 1.0)));
    EXPECT_FALSE(front_position(Field(g, 0.0)));
    EXPECT_FALSE(front_position(Field(build_grid(10.0, 20, 2), 1.0)));
}

TEST(WaveSpeed, ExactLine) {
    std::vector<double> t, x;
    for (int i = 0; i < 40; ++i) {
        t.push_back(0.5 * i);
        x.push_back(50.0 - 0.3 * t.back());
    }
    const SpeedFit f = wave_speed(x, t);
    EXPECT_NEAR(f.speed, -0.3, 1e-12);
    EXPECT_NEAR(f.max_residual, 0.0, 1e-12);
    EXPECT_EQ(f.samples, 10u);
    const std::vector<double> few{1, 2, 3, 4};
    EXPECT_THROW(wave_speed(few, few), InvalidArgument);
}

TEST(Monitors, CoexistenceRunPasses) {
    // L ū < 1, so the floor reference min(M(1), 1) is M(1) itself.
    const Params p = Params::symmetric(0.2, 10.0, 1.0);
    const Coexistence s = coexistence_state(p);
    const Grid g = build_grid(1.0, 20);
    SchemeConfig cfg;
    cfg.dt = 0.1;
    cfg.t_end = 3.0;
    const Trajectory tr = simulate(p, Field(g, s.u), Field(g, s.v), cfg);
    const MonitorReport m = monitors(tr.series, p);
    EXPECT_TRUE(m.mass_bound_ok);
    EXPECT_TRUE(m.positivity_ok);
    EXPECT_NEAR(m.mass_bound, 2.0 * s.u + 2.0, 1e-12);
    EXPECT_NEAR(m.extinction_floor_u, 1.0, 1e-10);
    EXPECT_NEAR(m.extinction_floor_v, 1.0, 1e-10);
    EXPECT_FALSE(m.floor_warning);
}

TEST(Monitors, ShortRunHasNoFloor) {
    const Params p = Params::symmetric(0.2, 1.0, 2.0);
    const Grid g = build_grid(2.0, 8);
    SchemeConfig cfg;
    cfg.dt = 0.1;
    cfg.t_end = 0.5;
    const MonitorReport m = monitors(simulate(p, Field(g, 0.5), Field(g, 0.5), cfg).series, p);
    EXPECT_TRUE(std::isnan(m.extinction_floor_u));
}

TEST(Monitors, DetectsViolations) {
    const Params p = Params::symmetric(0.2, 1.0, 1.0);
    const Grid g = build_grid(1.0, 4);
    TimeSeries s;
    DiagnosticRecord r;
    r.mass_u = r.mass_v = 1.0;
    r.min_u = r.min_v = 0.1;
    s.records.push_back(r);
    r.t = 1.0;
    r.mass_u = 10.0;
    r.min_v = -1e-6;
    s.records.push_back(r);
    const MonitorReport m = monitors(s, p);
    EXPECT_FALSE(m.mass_bound_ok);
    EXPECT_FALSE(m.positivity_ok);
}

TEST(TimeSeries, FrontTrackSkipsUndefined) {
    TimeSeries s;
    for (int i = 0; i < 4; ++i) {
        DiagnosticRecord r;
        r.t = i;
        if (i != 2) r.front_u = 10.0 - i;
        s.records.push_back(r);
    }
    const auto [t, x] = s.front_track(true);
    EXPECT_EQ(t, (std::vector<double>{0, 1, 3}));
    EXPECT_EQ(x, (std::vector<double>{10, 9, 7}));
    EXPECT_TRUE(s.front_track(false).first.empty());
}
