#include "chemocomp/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "chemocomp/error.hpp"
#include "chemocomp/stability.hpp"

namespace chemocomp {

namespace pt = boost::property_tree;

namespace {

const std::map<std::string, std::set<std::string>>& allowed_keys() {
    static const std::map<std::string, std::set<std::string>> keys{
        {"params", {"a", "a1", "a2", "b1", "b2", "d1", "d2", "chi", "chi1", "chi2", "eps", "L", "dim"}},
        {"grid", {"N", "dx"}},
        {"scheme", {"dt", "t_end", "tol_neg", "elliptic_tol", "snapshot_times", "series_stride"}},
        {"initial",
         {"kind", "A0", "s1", "s2", "I1", "I2", "sigma1_sq", "sigma2_sq", "center", "noise", "seed"}},
        {"diagnostics", {"front_level", "front_side_u", "front_side_v"}},
        {"output", {"dir", "prefix"}},
    };
    return keys;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& raw) {
    const std::string s = trim(raw);
    double x = 0.0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (s.empty() || ec != std::errc() || end != s.data() + s.size() || !std::isfinite(x)) {
        throw ConfigError(key, "expected a finite number, got '" + raw + "'");
    }
    return x;
}

long parse_integer(const std::string& key, const std::string& raw) {
    const std::string s = trim(raw);
    long x = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (s.empty() || ec != std::errc() || end != s.data() + s.size()) {
        throw ConfigError(key, "expected an integer, got '" + raw + "'");
    }
    return x;
}

std::vector<double> parse_list(const std::string& key, const std::string& raw) {
    std::vector<double> out;
    if (trim(raw).empty()) return out;
    std::stringstream ss(raw + ",");
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (trim(item).empty()) throw ConfigError(key, "empty item in list '" + trim(raw) + "'");
        out.push_back(parse_double(key, item));
    }
    return out;
}

std::array<double, 2> parse_pair(const std::string& key, const std::string& raw) {
    const auto v = parse_list(key, raw);
    if (v.size() != 2) throw ConfigError(key, "expected two comma-separated numbers");
    return {v[0], v[1]};
}

InitialKind parse_kind(const std::string& raw) {
    const std::string s = trim(raw);
    if (s == "perturbed-mode") return InitialKind::perturbed_mode;
    if (s == "segregated") return InitialKind::segregated;
    if (s == "compact") return InitialKind::compact;
    if (s == "gaussian") return InitialKind::gaussian;
    if (s == "constant") return InitialKind::constant;
    throw ConfigError("kind", "unknown initial kind '" + s + "'");
}

FrontSide parse_side(const std::string& key, const std::string& raw) {
    const std::string s = trim(raw);
    if (s == "left") return FrontSide::left;
    if (s == "right") return FrontSide::right;
    throw ConfigError(key, "expected 'left' or 'right', got '" + s + "'");
}

// Optional view of one INI section.
class Section {
public:
    Section(const pt::ptree* tree) : tree_(tree) {}

    std::optional<std::string> get(const std::string& key) const {
        if (!tree_) return std::nullopt;
        const auto it = tree_->find(key);
        if (it == tree_->not_found()) return std::nullopt;
        return it->second.data();
    }

    template <class F>
    void with(const std::string& key, F&& f) const {
        if (auto v = get(key)) f(*v);
    }

private:
    const pt::ptree* tree_;
};

void check_keys(const pt::ptree& root) {
    for (const auto& [name, node] : root) {
        if (node.empty()) {
            if (name != "scenario") throw ConfigError(name, "unknown top-level key");
            continue;
        }
        const auto sec = allowed_keys().find(name);
        if (sec == allowed_keys().end()) throw ConfigError(name, "unknown section [" + name + "]");
        for (const auto& [key, value] : node) {
            if (!sec->second.count(key)) {
                throw ConfigError(key, "unknown key '" + key + "' in section [" + name + "]");
            }
        }
    }
}

void exclusive(const Section& s, const std::string& a, const std::string& b) {
    if (s.get(a) && s.get(b)) throw ConfigError(b, "conflicts with '" + a + "'");
}

}  // namespace

std::string to_string(InitialKind kind) {
    switch (kind) {
        case InitialKind::perturbed_mode: return "perturbed-mode";
        case InitialKind::segregated: return "segregated";
        case InitialKind::compact: return "compact";
        case InitialKind::gaussian: return "gaussian";
        case InitialKind::constant: return "constant";
    }
    return "?";
}

Params ScenarioConfig::effective_params() const {
    Params p = params;
    if (eps) {
        const double threshold = chi_star(p.a1, p.L, p.dim).chi_star;
        p.chi1 = p.chi2 = threshold + *eps;
    }
    return p;
}

ScenarioConfig preset(const std::string& name) {
    ScenarioConfig c;
    c.scenario = name;
    c.output.prefix = name;
    auto symmetric = [&](double a, double chi, double L, int dim) {
        c.params = Params::symmetric(a, chi, L, dim);
    };
    if (name == "amplitude-verify") {
        symmetric(0.2, 0.0, 2.0, 1);
        c.eps = 0.05;
        c.N = 200;
        c.scheme.dt = 0.01;
        c.scheme.t_end = 200.0;
        c.series_stride = 10;
        c.initial.kind = InitialKind::perturbed_mode;
        c.initial.A0 = 1e-2;
    } else if (name == "pattern-1d") {
        symmetric(0.2, 20.0, 30.0, 1);
        c.N = 300;
        c.scheme.dt = 0.05;
        c.scheme.t_end = 200.0;
        c.series_stride = 20;
        c.initial.kind = InitialKind::perturbed_mode;
        c.initial.A0 = 1e-2;
    } else if (name == "traveling-wave") {
        symmetric(2.0, 20.0, 100.0, 1);
        c.params.chi2 = 80.0;
        c.N = 1000;
        c.scheme.dt = 0.05;
        c.scheme.t_end = 60.0;
        c.scheme.snapshot_times = {30.0, 50.0};
        c.series_stride = 4;
        c.initial.kind = InitialKind::segregated;
        c.diagnostics.front_side_u = FrontSide::left;
        c.diagnostics.front_side_v = FrontSide::right;
    } else if (name == "front-propagation") {
        symmetric(0.2, 20.0, 100.0, 1);
        c.N = 1000;
        c.scheme.dt = 0.05;
        c.scheme.t_end = 10.0;
        c.series_stride = 4;
        c.initial.kind = InitialKind::compact;
    } else if (name == "pattern-2d") {
        symmetric(0.5, 4.7, 30.0, 2);
        c.N = 300;
        c.scheme.dt = 0.05;
        c.scheme.t_end = 200.0;
        c.series_stride = 20;
        c.initial.kind = InitialKind::perturbed_mode;
        c.initial.A0 = 0.05;
    } else if (name == "gaussian-2d") {
        symmetric(2.0, 100.0, 30.0, 2);
        c.N = 300;
        c.scheme.dt = 0.05;
        c.scheme.t_end = 200.0;
        c.scheme.snapshot_times = {0.1, 1.0, 5.0, 10.0, 30.0, 60.0, 120.0, 200.0};
        c.series_stride = 20;
        c.initial.kind = InitialKind::gaussian;
    } else if (name != "custom") {
        throw ConfigError("scenario", "unknown scenario '" + name + "'");
    }
    return c;
}

void ScenarioConfig::validate() const {
    try {
        params.validate();
    } catch (const InvalidArgument& e) {
        throw ConfigError("params", e.what());
    }
    if (N < 2) throw ConfigError("N", "grid needs at least 2 cells per axis");
    if (!(scheme.dt > 0.0)) throw ConfigError("dt", "must be > 0");
    if (!(scheme.t_end >= scheme.dt)) throw ConfigError("t_end", "must be >= dt");
    if (!(scheme.tol_neg >= 0.0)) throw ConfigError("tol_neg", "must be >= 0");
    if (!(scheme.elliptic_tol > 0.0)) throw ConfigError("elliptic_tol", "must be > 0");
    if (series_stride < 1) throw ConfigError("series_stride", "must be >= 1");
    if (!(diagnostics.front_level > 0.0 && diagnostics.front_level < 1.0)) {
        throw ConfigError("front_level", "must lie in (0, 1)");
    }
    if (eps) {
        if (!params.is_symmetric()) throw ConfigError("eps", "needs symmetric coefficients");
        if (!(params.a1 > 0.0 && params.a1 < 1.0)) throw ConfigError("eps", "needs 0 < a < 1");
        if (effective_params().chi1 < 0.0) throw ConfigError("eps", "gives a negative chi");
    }

    const double L = params.L;
    const InitialSpec& in = initial;
    switch (in.kind) {
        case InitialKind::perturbed_mode:
            if (!params.is_symmetric() || !(params.a1 > 0.0 && params.a1 < 1.0)) {
                throw ConfigError("kind", "perturbed-mode needs symmetric coefficients with 0 < a < 1");
            }
            if (!(in.A0 >= 0.0)) throw ConfigError("A0", "must be >= 0");
            break;
        case InitialKind::segregated:
            if (params.dim != 1) throw ConfigError("kind", "segregated data is one-dimensional");
            if (!(0.0 < in.s1 && in.s1 < in.s2 && in.s2 < L)) {
                throw ConfigError("s1", "need 0 < s1 < s2 < L");
            }
            break;
        case InitialKind::compact:
            if (params.dim != 1) throw ConfigError("kind", "compact data is one-dimensional");
            for (auto [key, I] : {std::pair{"I1", in.I1}, std::pair{"I2", in.I2}}) {
                if (!(0.0 <= I[0] && I[0] < I[1] && I[1] <= L)) {
                    throw ConfigError(key, "interval must satisfy 0 <= lo < hi <= L");
                }
            }
            break;
        case InitialKind::gaussian:
            if (!(in.sigma1_sq > 0.0)) throw ConfigError("sigma1_sq", "must be > 0");
            if (!(in.sigma2_sq > 0.0)) throw ConfigError("sigma2_sq", "must be > 0");
            if (in.center) {
                for (double x : *in.center)
                    if (!(0.0 <= x && x <= L)) throw ConfigError("center", "must lie in the domain");
            }
            break;
        case InitialKind::constant:
            break;
    }
    if (!(in.noise >= 0.0 && in.noise < 1.0)) throw ConfigError("noise", "must lie in [0, 1)");
}

ScenarioConfig load_config_text(const std::string& text) {
    pt::ptree root;
    try {
        std::istringstream is(text);
        pt::read_ini(is, root);
    } catch (const pt::ini_parser_error& e) {
        throw ConfigError("", std::string("parse error: ") + e.message() + " (line " +
                                  std::to_string(e.line()) + ")");
    }
    check_keys(root);

    const std::string name = trim(root.get<std::string>("scenario", "custom"));
    ScenarioConfig c = preset(name);

    auto section = [&](const char* s) {
        const auto it = root.find(s);
        return Section(it == root.not_found() ? nullptr : &it->second);
    };

    const Section P = section("params");
    exclusive(P, "a", "a1");
    exclusive(P, "a", "a2");
    exclusive(P, "chi", "chi1");
    exclusive(P, "chi", "chi2");
    exclusive(P, "chi", "eps");
    exclusive(P, "chi1", "eps");
    exclusive(P, "chi2", "eps");
    P.with("a", [&](auto& v) { c.params.a1 = c.params.a2 = parse_double("a", v); });
    P.with("a1", [&](auto& v) { c.params.a1 = parse_double("a1", v); });
    P.with("a2", [&](auto& v) { c.params.a2 = parse_double("a2", v); });
    P.with("b1", [&](auto& v) { c.params.b1 = parse_double("b1", v); });
    P.with("b2", [&](auto& v) { c.params.b2 = parse_double("b2", v); });
    P.with("d1", [&](auto& v) { c.params.d1 = parse_double("d1", v); });
    P.with("d2", [&](auto& v) { c.params.d2 = parse_double("d2", v); });
    P.with("L", [&](auto& v) { c.params.L = parse_double("L", v); });
    P.with("dim", [&](auto& v) { c.params.dim = static_cast<int>(parse_integer("dim", v)); });
    const bool explicit_chi = P.get("chi") || P.get("chi1") || P.get("chi2");
    if (explicit_chi) c.eps.reset();
    P.with("chi", [&](auto& v) { c.params.chi1 = c.params.chi2 = parse_double("chi", v); });
    P.with("chi1", [&](auto& v) { c.params.chi1 = parse_double("chi1", v); });
    P.with("chi2", [&](auto& v) { c.params.chi2 = parse_double("chi2", v); });
    P.with("eps", [&](auto& v) { c.eps = parse_double("eps", v); });

    const Section G = section("grid");
    exclusive(G, "N", "dx");
    G.with("N", [&](auto& v) {
        const long n = parse_integer("N", v);
        if (n < 2) throw ConfigError("N", "grid needs at least 2 cells per axis");
        c.N = static_cast<std::size_t>(n);
    });
    G.with("dx", [&](auto& v) {
        const double dx = parse_double("dx", v);
        if (!(dx > 0.0)) throw ConfigError("dx", "must be > 0");
        const double cells = c.params.L / dx;
        const double rounded = std::round(cells);
        if (std::abs(cells - rounded) > 1e-9 * cells || rounded < 2.0) {
            throw ConfigError("dx", "must divide L into at least 2 equal cells");
        }
        c.N = static_cast<std::size_t>(rounded);
    });

    const Section S = section("scheme");
    S.with("dt", [&](auto& v) { c.scheme.dt = parse_double("dt", v); });
    S.with("t_end", [&](auto& v) { c.scheme.t_end = parse_double("t_end", v); });
    S.with("tol_neg", [&](auto& v) { c.scheme.tol_neg = parse_double("tol_neg", v); });
    S.with("elliptic_tol", [&](auto& v) { c.scheme.elliptic_tol = parse_double("elliptic_tol", v); });
    S.with("snapshot_times", [&](auto& v) { c.scheme.snapshot_times = parse_list("snapshot_times", v); });
    S.with("series_stride", [&](auto& v) { c.series_stride = parse_integer("series_stride", v); });

    const Section I = section("initial");
    if (name == "custom" && !I.get("kind")) {
        throw ConfigError("kind", "custom scenarios must set [initial] kind");
    }
    I.with("kind", [&](auto& v) { c.initial.kind = parse_kind(v); });
    I.with("A0", [&](auto& v) { c.initial.A0 = parse_double("A0", v); });
    I.with("s1", [&](auto& v) { c.initial.s1 = parse_double("s1", v); });
    I.with("s2", [&](auto& v) { c.initial.s2 = parse_double("s2", v); });
    I.with("I1", [&](auto& v) { c.initial.I1 = parse_pair("I1", v); });
    I.with("I2", [&](auto& v) { c.initial.I2 = parse_pair("I2", v); });
    I.with("sigma1_sq", [&](auto& v) { c.initial.sigma1_sq = parse_double("sigma1_sq", v); });
    I.with("sigma2_sq", [&](auto& v) { c.initial.sigma2_sq = parse_double("sigma2_sq", v); });
    I.with("center", [&](auto& v) { c.initial.center = parse_pair("center", v); });
    I.with("noise", [&](auto& v) { c.initial.noise = parse_double("noise", v); });
    I.with("seed", [&](auto& v) {
        const long s = parse_integer("seed", v);
        if (s < 0) throw ConfigError("seed", "must be >= 0");
        c.initial.seed = static_cast<std::uint64_t>(s);
    });

    const Section D = section("diagnostics");
    D.with("front_level", [&](auto& v) { c.diagnostics.front_level = parse_double("front_level", v); });
    D.with("front_side_u", [&](auto& v) { c.diagnostics.front_side_u = parse_side("front_side_u", v); });
    D.with("front_side_v", [&](auto& v) { c.diagnostics.front_side_v = parse_side("front_side_v", v); });

    const Section O = section("output");
    O.with("dir", [&](auto& v) { c.output.dir = trim(v); });
    O.with("prefix", [&](auto& v) { c.output.prefix = trim(v); });

    c.validate();
    return c;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("", "cannot open config file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return load_config_text(buf.str());
}

}  // namespace chemocomp
