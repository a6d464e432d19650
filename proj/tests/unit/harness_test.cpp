#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "chemocomp/config.hpp"
#include "chemocomp/csv.hpp"
#include "chemocomp/diagnostics.hpp"
#include "chemocomp/error.hpp"
#include "chemocomp/scenario.hpp"
#include "chemocomp/stability.hpp"

using namespace chemocomp;

namespace {

std::string config_error_key(const std::string& text) {
    try {
        load_config_text(text);
    } catch (const ConfigError& e) {
        return e.key();
    }
    return "<no error>";
}

ScenarioConfig small_amplitude_run() {
    ScenarioConfig cfg = preset("amplitude-verify");
    cfg.N = 40;
    cfg.scheme.dt = 0.05;
    cfg.scheme.t_end = 2.0;
    cfg.series_stride = 4;
    cfg.output.dir = (std::filesystem::temp_directory_path() / "chemocomp_harness_test").string();
    return cfg;
}

}  // namespace

TEST(Config, MinimalAmplitudeBlockKeepsPresetDefaults) {
    const ScenarioConfig c = load_config_text(
        "scenario = amplitude-verify\n"
        "[params]\n"
        "eps = 0.05\n");
    EXPECT_EQ(c.scenario, "amplitude-verify");
    EXPECT_DOUBLE_EQ(c.params.a1, 0.2);
    EXPECT_DOUBLE_EQ(c.params.a2, 0.2);
    EXPECT_DOUBLE_EQ(c.params.L, 2.0);
    EXPECT_EQ(c.N, 200u);
    EXPECT_DOUBLE_EQ(c.dx(), 0.01);
    EXPECT_DOUBLE_EQ(c.scheme.dt, 0.01);
    EXPECT_DOUBLE_EQ(c.scheme.t_end, 200.0);
    ASSERT_TRUE(c.eps.has_value());
    EXPECT_DOUBLE_EQ(*c.eps, 0.05);
    EXPECT_EQ(c.initial.kind, InitialKind::perturbed_mode);
    EXPECT_NEAR(c.effective_params().chi1, 5.285109107982288 + 0.05, 1e-12);
}

TEST(Config, ZeroTimeStepIsRejected) {
    EXPECT_EQ(config_error_key("scenario = amplitude-verify\n[scheme]\ndt = 0\n"), "dt");
}

TEST(Config, UnknownKeyIsNamed) {
    try {
        load_config_text("scenario = pattern-1d\n[params]\nchi3 = 4\n");
        FAIL() << "expected ConfigError";
    } catch (const ConfigError& e) {
        EXPECT_EQ(e.key(), "chi3");
        EXPECT_NE(std::string(e.what()).find("chi3"), std::string::npos);
    }
}

TEST(Config, UnknownSectionAndScenario) {
    EXPECT_NE(config_error_key("[physics]\nfoo = 1\n"), "<no error>");
    EXPECT_EQ(config_error_key("scenario = nope\n"), "scenario");
}

TEST(Config, ConflictingKeys) {
    EXPECT_NE(config_error_key("scenario = pattern-1d\n[params]\nchi = 4\nchi1 = 5\n"), "<no error>");
    EXPECT_NE(config_error_key("scenario = pattern-1d\n[params]\na = 0.2\na2 = 0.3\n"), "<no error>");
    EXPECT_NE(config_error_key("scenario = amplitude-verify\n[params]\nchi = 6\neps = 0.1\n"),
              "<no error>");
    EXPECT_NE(config_error_key("scenario = pattern-1d\n[grid]\nN = 100\ndx = 0.3\n"), "<no error>");
}

TEST(Config, ExplicitChiDropsPresetEps) {
    const ScenarioConfig c = load_config_text("scenario = amplitude-verify\n[params]\nchi = 6\n");
    EXPECT_FALSE(c.eps.has_value());
    EXPECT_DOUBLE_EQ(c.effective_params().chi1, 6.0);
}

TEST(Config, GridSpacing) {
    EXPECT_EQ(load_config_text("scenario = pattern-1d\n[grid]\ndx = 0.05\n").N, 600u);
    EXPECT_EQ(config_error_key("scenario = pattern-1d\n[grid]\ndx = 0.07\n"), "dx");
    EXPECT_EQ(config_error_key("scenario = pattern-1d\n[grid]\nN = 1\n"), "N");
}

TEST(Config, MalformedNumbers) {
    EXPECT_EQ(config_error_key("scenario = pattern-1d\n[params]\nL = 3O\n"), "L");
    EXPECT_EQ(config_error_key("scenario = pattern-1d\n[scheme]\nsnapshot_times = 1,,2\n"),
              "snapshot_times");
}

TEST(Config, CustomNeedsInitialKind) {
    EXPECT_EQ(config_error_key("[params]\na = 0.2\nchi = 5\nL = 2\n"), "kind");
    const ScenarioConfig c =
        load_config_text("[params]\na = 0.2\nchi = 5\nL = 2\n[initial]\nkind = constant\n");
    EXPECT_EQ(c.initial.kind, InitialKind::constant);
}

TEST(Config, EpsNeedsWeakCompetition) {
    EXPECT_EQ(config_error_key("scenario = amplitude-verify\n[params]\na = 2\n"), "eps");
}

TEST(Config, ExampleFilesLoad) {
    for (const char* name : {"amplitude-verify", "pattern-1d", "traveling-wave", "front-propagation",
                             "pattern-2d", "gaussian-2d"}) {
        SCOPED_TRACE(name);
        const std::string path = std::string(CHEMOCOMP_EXAMPLE_DIR) + "/" + name + ".ini";
        ScenarioConfig c;
        ASSERT_NO_THROW(c = load_config(path));
        EXPECT_EQ(c.scenario, name);
        EXPECT_NO_THROW(c.validate());
    }
    EXPECT_THROW(load_config("/nonexistent/x.ini"), ConfigError);
}

TEST(Initial, PerturbedModeFollowsCriticalMode) {
    ScenarioConfig cfg = preset("amplitude-verify");
    cfg.N = 20;
    const Params p = cfg.effective_params();
    const Grid g = scenario_grid(cfg);
    const auto [u, v] = make_initial(cfg, g, p);
    const double ubar = 1.0 / 1.2;
    for (std::size_t j = 0; j < g.n(); ++j) {
        const double mode = 0.01 * std::cos(std::numbers::pi * g.center(j) / 2.0);
        EXPECT_NEAR(u[j], ubar + mode, 1e-14);
        EXPECT_NEAR(v[j], ubar - mode, 1e-14);
    }
    EXPECT_NEAR(mass(u), 2.0 * ubar, 1e-13);
}

TEST(Initial, AmplitudeMustKeepDensitiesPositive) {
    ScenarioConfig cfg = preset("amplitude-verify");
    cfg.N = 20;
    cfg.initial.A0 = 0.9;
    const Params p = cfg.effective_params();
    EXPECT_THROW(make_initial(cfg, scenario_grid(cfg), p), InvalidArgument);
}

TEST(Initial, SegregatedHasUnitMasses) {
    const ScenarioConfig cfg = preset("traveling-wave");
    const Grid g = scenario_grid(cfg);
    const auto [u, v] = make_initial(cfg, g, cfg.effective_params());
    EXPECT_NEAR(u[g.n() - 1], 0.1, 1e-15);
    EXPECT_NEAR(u[0], 0.0, 0.0);
    EXPECT_NEAR(v[0], 0.1, 1e-15);
    EXPECT_NEAR(v[g.n() - 1], 0.0, 0.0);
    EXPECT_NEAR(mass(u), 1.0, 1e-12);
    EXPECT_NEAR(mass(v), 1.0, 1e-12);
}

TEST(Initial, GaussianIsCentredWithUnitMass) {
    ScenarioConfig cfg = preset("gaussian-2d");
    cfg.N = 60;
    const Grid g = scenario_grid(cfg);
    const auto [u, v] = make_initial(cfg, g, cfg.effective_params());
    EXPECT_NEAR(mass(u), 1.0, 1e-6);
    EXPECT_NEAR(mass(v), 1.0, 1e-3);
    // Cell centres closest to (15, 15) carry the maximum, symmetrically.
    EXPECT_DOUBLE_EQ(u(29, 29), u.max());
    EXPECT_DOUBLE_EQ(u(29, 30), u(30, 29));
    EXPECT_DOUBLE_EQ(u(29, 29), u(30, 30));
    EXPECT_NEAR(u(29, 29), std::exp(-0.125 / (2.0 * 0.25)) / (2.0 * std::numbers::pi * 0.25), 1e-14);
}

TEST(Initial, NoiseIsReproducible) {
    ScenarioConfig cfg = preset("pattern-1d");
    cfg.initial.kind = InitialKind::constant;
    cfg.initial.noise = 0.01;
    cfg.initial.seed = 7;
    const Grid g = scenario_grid(cfg);
    const auto a = make_initial(cfg, g, cfg.effective_params());
    const auto b = make_initial(cfg, g, cfg.effective_params());
    bool varied = false;
    for (std::size_t j = 0; j < g.size(); ++j) {
        EXPECT_EQ(a.first[j], b.first[j]);
        EXPECT_LE(std::abs(a.first[j] / (1.0 / 1.2) - 1.0), 0.01 + 1e-15);
        varied = varied || a.first[j] != a.first[0];
    }
    EXPECT_TRUE(varied);
}

TEST(Csv, TimeSeriesRoundTrip) {
    TimeSeries ts;
    DiagnosticRecord r;
    r.t = 0.5;
    r.mass_u = 1.0 / 3.0;
    r.mass_v = 2.0;
    r.amp_u = 1e-17;
    r.front_u = 12.25;
    ts.records.push_back(r);
    r.t = 1.0;
    r.front_u.reset();
    r.front_v = 3.0;
    ts.records.push_back(r);

    std::stringstream ss;
    write_time_series(ss, ts);
    const CsvTable t = read_csv(ss);
    ASSERT_EQ(t.rows.size(), 2u);
    EXPECT_EQ(t.header.front(), "t");
    EXPECT_EQ(t.numbers("mass_u")[0], 1.0 / 3.0);
    EXPECT_EQ(t.numbers("amp_u")[1], 1e-17);
    EXPECT_EQ(t.rows[0][t.column("front_u")], 12.25);
    EXPECT_FALSE(t.rows[1][t.column("front_u")].has_value());
    EXPECT_FALSE(t.rows[0][t.column("front_v")].has_value());
    EXPECT_THROW(t.column("A_ode"), InvalidArgument);
    EXPECT_THROW(t.numbers("front_u"), InvalidArgument);
}

TEST(Csv, RejectsMalformedInput) {
    std::stringstream ragged("a,b\n1,2\n3\n");
    EXPECT_THROW(read_csv(ragged), InvalidArgument);
    std::stringstream text("a,b\n1,x\n");
    EXPECT_THROW(read_csv(text), InvalidArgument);
}

TEST(Run, WritesFilesAndSummary) {
    ScenarioConfig cfg = small_amplitude_run();
    cfg.scheme.snapshot_times = {1.0};
    cfg.output.prefix = "files";
    const RunResult r = run_scenario(cfg);
    ASSERT_TRUE(r.ode.has_value());
    ASSERT_TRUE(r.summary.predicted_plateau.has_value());
    EXPECT_NEAR(*r.summary.predicted_plateau, 0.1350108789772613, 1e-12);
    EXPECT_NEAR(*r.summary.growth_rate, 0.02964998170241663, 1e-14);
    EXPECT_EQ(r.summary.steps, 40);
    EXPECT_EQ(r.summary.files.size(), 4u);
    for (const auto& f : r.summary.files) EXPECT_TRUE(std::filesystem::exists(f)) << f;

    const CsvTable series = read_csv_file(cfg.output.dir + "/files_series.csv");
    EXPECT_EQ(series.rows.size(), r.trajectory.series.size());
    EXPECT_NO_THROW(series.column("A_ode"));
    const CsvTable snap = read_csv_file(cfg.output.dir + "/files_final.csv");
    EXPECT_EQ(snap.rows.size(), 40u);
}

TEST(Run, RerunIsBitIdentical) {
    ScenarioConfig cfg = small_amplitude_run();
    const RunResult a = run_scenario(cfg, {false});
    const RunResult b = run_scenario(cfg, {false});
    ASSERT_EQ(a.trajectory.final.u.size(), b.trajectory.final.u.size());
    for (std::size_t i = 0; i < a.trajectory.final.u.size(); ++i) {
        EXPECT_EQ(a.trajectory.final.u[i], b.trajectory.final.u[i]);
        EXPECT_EQ(a.trajectory.final.v[i], b.trajectory.final.v[i]);
    }
}

TEST(Run, CoarseMeshWarnsAboutNumericalDiffusion) {
    const RunResult r = run_scenario(small_amplitude_run(), {false});
    EXPECT_NEAR(r.summary.numerical_diffusion, 0.05 * 0.05 / (2 * 0.05), 1e-15);
    bool warned = false;
    for (const auto& w : r.summary.warnings) warned = warned || w.find("Lax-Friedrichs") != std::string::npos;
    EXPECT_TRUE(warned);
}

TEST(Sweep, RecordsFailuresPerRow) {
    ScenarioConfig cfg = small_amplitude_run();
    const auto rows = sweep_epsilon(cfg, {0.05, -10.0, 0.1});
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_TRUE(rows[0].error.empty());
    EXPECT_TRUE(rows[0].plateau.has_value());
    EXPECT_FALSE(rows[1].error.empty());
    EXPECT_FALSE(rows[1].plateau.has_value());
    EXPECT_TRUE(rows[2].error.empty());
    EXPECT_NEAR(rows[2].predicted, std::sqrt(0.1 / 0.05) * rows[0].predicted, 1e-14);

    std::stringstream ss;
    write_sweep(ss, rows);
    std::string line;
    std::getline(ss, line);
    EXPECT_EQ(line, "eps,plateau,predicted,error");
    std::size_t rows_written = 0;
    while (std::getline(ss, line)) {
        EXPECT_EQ(std::count(line.begin(), line.end(), ','), 3) << line;
        ++rows_written;
    }
    EXPECT_EQ(rows_written, 3u);
}

TEST(Run, WeakCompetitionPatternHasCriticalPeriod) {
    ScenarioConfig cfg = preset("pattern-1d");
    const RunResult r = run_scenario(cfg, {false});
    const Field& u = r.trajectory.final.u;
    const Grid& g = u.grid();
    std::vector<double> peaks;
    for (std::size_t j = 1; j + 1 < g.n(); ++j)
        if (u[j] >= u[j - 1] && u[j] > u[j + 1]) peaks.push_back(g.center(j));
    ASSERT_GE(peaks.size(), 3u);
    const double spacing = (peaks.back() - peaks.front()) / static_cast<double>(peaks.size() - 1);
    const CriticalThreshold ct = chi_star(0.2, 30.0, 1);
    ASSERT_EQ(ct.modes.front().k, 9);
    EXPECT_NEAR(spacing, 2.0 * 30.0 / 9.0, 0.05 * 2.0 * 30.0 / 9.0);
    EXPECT_GT(u.max() - u.min(), 0.5);
}
