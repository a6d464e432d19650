#include "chemocomp/params.hpp"

#include <cmath>
#include <string>

#include "chemocomp/error.hpp"

namespace chemocomp {

Params Params::symmetric(double a, double chi, double L, int dim) {
    Params p;
    p.d1 = p.d2 = 1.0;
    p.b1 = p.b2 = 1.0;
    p.a1 = p.a2 = a;
    p.chi1 = p.chi2 = chi;
    p.L = L;
    p.dim = dim;
    return p;
}

void Params::validate() const {
    auto positive = [](const char* name, double x) {
        if (!std::isfinite(x) || x <= 0.0) {
            throw InvalidArgument(std::string(name) + " must be finite and > 0");
        }
    };
    positive("d1", d1);
    positive("d2", d2);
    positive("a1", a1);
    positive("a2", a2);
    positive("b1", b1);
    positive("b2", b2);
    positive("L", L);
    for (auto [name, chi] : {std::pair{"chi1", chi1}, std::pair{"chi2", chi2}}) {
        if (!std::isfinite(chi) || chi < 0.0) {
            throw InvalidArgument(std::string(name) + " must be finite and >= 0");
        }
    }
    if (dim != 1 && dim != 2) {
        throw InvalidArgument("dim must be 1 or 2");
    }
}

bool Params::is_symmetric() const noexcept {
    return d1 == 1.0 && d2 == 1.0 && b1 == 1.0 && b2 == 1.0 && a1 == a2 && chi1 == chi2;
}

Coexistence coexistence_state(const Params& p) {
    const double det = 1.0 - p.a1 * p.a2;
    if (det == 0.0) {
        throw NoCoexistence("a1*a2 == 1: coexistence state is degenerate");
    }
    const Coexistence s{(1.0 - p.a1) / det, (1.0 - p.a2) / det};
    if (!(s.u > 0.0) || !(s.v > 0.0)) {
        throw NoCoexistence("no positive coexistence state for a1 = " + std::to_string(p.a1) +
                            ", a2 = " + std::to_string(p.a2));
    }
    return s;
}

}  // namespace chemocomp
