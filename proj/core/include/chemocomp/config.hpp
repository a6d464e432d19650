#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "chemocomp/diagnostics.hpp"
#include "chemocomp/params.hpp"
#include "chemocomp/scheme.hpp"

namespace chemocomp {

enum class InitialKind {
    perturbed_mode,  ///< coexistence state + A0 times the critical mode, (1, -1)
    segregated,      ///< u uniform on [s2, L], v uniform on [0, s1], unit masses
    compact,         ///< u uniform on I1, v uniform on I2, unit masses
    gaussian,        ///< isotropic normal densities centred at `center`
    constant,        ///< coexistence state
};

struct InitialSpec {
    InitialKind kind = InitialKind::perturbed_mode;
    double A0 = 1e-2;
    double s1 = 10.0;
    double s2 = 90.0;
    std::array<double, 2> I1{45.0, 55.0};
    std::array<double, 2> I2{48.0, 52.0};
    double sigma1_sq = 0.25;
    double sigma2_sq = 1.0 / 9.0;
    std::optional<std::array<double, 2>> center;  ///< default: domain centre
    double noise = 0.0;  ///< relative uniform noise on both densities
    std::uint64_t seed = 0;
};

struct OutputSpec {
    std::string dir = "out";
    std::string prefix;  ///< default: scenario name
};

struct ScenarioConfig {
    std::string scenario = "custom";
    Params params;
    /// Offset from the threshold: chi1 = chi2 = χ*(a, L, dim) + eps.
    std::optional<double> eps;
    std::size_t N = 100;
    SchemeConfig scheme;
    long series_stride = 1;
    InitialSpec initial;
    DiagnosticsOptions diagnostics;  ///< references are filled from params at run time
    OutputSpec output;

    /// Params with eps applied.
    Params effective_params() const;
    double dx() const { return params.L / static_cast<double>(N); }
    /// Throws ConfigError naming the first inconsistent key.
    void validate() const;
};

/// Defaults for a named scenario. Throws ConfigError for an unknown name.
ScenarioConfig preset(const std::string& name);

/// INI document: an optional top-level `scenario = <name>` followed by
/// [params], [grid], [scheme], [initial], [diagnostics] and [output]
/// sections. Keys absent from the document keep the preset defaults.
/// Unknown keys, malformed values and conflicting keys raise ConfigError.
ScenarioConfig load_config_text(const std::string& text);
ScenarioConfig load_config(const std::string& path);

std::string to_string(InitialKind kind);

}  // namespace chemocomp
