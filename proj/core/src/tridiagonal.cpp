#include "chemocomp/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "chemocomp/error.hpp"

namespace chemocomp {

namespace {

// margin < 0: violated somewhere; == 0: weak; > 0: strict.
double row_margin(std::span<const double> sub, std::span<const double> diag,
                  std::span<const double> sup) {
    const std::size_t n = diag.size();
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        double off = 0.0;
        if (i > 0) off += std::abs(sub[i]);
        if (i + 1 < n) off += std::abs(sup[i]);
        m = std::min(m, std::abs(diag[i]) - off);
    }
    return m;
}

double column_margin(std::span<const double> sub, std::span<const double> diag,
                     std::span<const double> sup) {
    const std::size_t n = diag.size();
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
        double off = 0.0;
        if (j > 0) off += std::abs(sup[j - 1]);
        if (j + 1 < n) off += std::abs(sub[j + 1]);
        m = std::min(m, std::abs(diag[j]) - off);
    }
    return m;
}

}  // namespace

Dominance diagonal_dominance(std::span<const double> sub, std::span<const double> diag,
                             std::span<const double> sup) {
    const double m = std::max(row_margin(sub, diag, sup), column_margin(sub, diag, sup));
    if (m > 0.0) return Dominance::strict;
    if (m == 0.0) return Dominance::weak;
    return Dominance::none;
}

Dominance TridiagonalSystem::assess() {
    dominance = diagonal_dominance(sub, diag, sup);
    return dominance;
}

void thomas_solve(std::span<const double> sub, std::span<const double> diag,
                  std::span<const double> sup, std::span<const double> rhs, std::span<double> x,
                  std::span<double> scratch) {
    const std::size_t n = diag.size();
    if (n == 0) throw InvalidArgument("empty tridiagonal system");
    if (sub.size() != n || sup.size() != n || rhs.size() != n || x.size() != n ||
        scratch.size() < n) {
        throw InvalidArgument("tridiagonal coefficient lengths disagree");
    }

    double dmax = 0.0;
    for (double d : diag) dmax = std::max(dmax, std::abs(d));
    const double tiny = 1e-14 * dmax;

    double pivot = diag[0];
    if (!(std::abs(pivot) > tiny)) throw SingularSystem("zero pivot in row 0");
    scratch[0] = sup[0] / pivot;
    x[0] = rhs[0] / pivot;
    for (std::size_t i = 1; i < n; ++i) {
        pivot = diag[i] - sub[i] * scratch[i - 1];
        if (!(std::abs(pivot) > tiny)) {
            throw SingularSystem("zero pivot in row " + std::to_string(i));
        }
        scratch[i] = (i + 1 < n) ? sup[i] / pivot : 0.0;
        x[i] = (rhs[i] - sub[i] * x[i - 1]) / pivot;
    }
    for (std::size_t i = n - 1; i-- > 0;) x[i] -= scratch[i] * x[i + 1];
}

std::vector<double> thomas_solve(const TridiagonalSystem& sys) {
    std::vector<double> x(sys.size());
    std::vector<double> scratch(sys.size());
    thomas_solve(sys.sub, sys.diag, sys.sup, sys.rhs, x, scratch);
    return x;
}

}  // namespace chemocomp
