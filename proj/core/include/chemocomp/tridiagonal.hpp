#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace chemocomp {

enum class Dominance { none, weak, strict };

/// Row i reads sub[i] x[i-1] + diag[i] x[i] + sup[i] x[i+1] = rhs[i].
/// sub[0] and sup[N-1] are ignored.
struct TridiagonalSystem {
    std::vector<double> sub;
    std::vector<double> diag;
    std::vector<double> sup;
    std::vector<double> rhs;
    Dominance dominance = Dominance::none;

    TridiagonalSystem() = default;
    explicit TridiagonalSystem(std::size_t n) : sub(n, 0.0), diag(n, 0.0), sup(n, 0.0), rhs(n, 0.0) {}

    std::size_t size() const noexcept { return diag.size(); }

    /// Records the dominance class of the coefficients in `dominance` and returns it.
    Dominance assess();
};

/// Diagonal dominance by rows or by columns, whichever is stronger. Column
/// dominance is the natural property of conservative (flux-form) operators.
Dominance diagonal_dominance(std::span<const double> sub, std::span<const double> diag,
                             std::span<const double> sup);

/// Thomas algorithm. Throws SingularSystem when a pivot falls below
/// 1e-14 * max|diag|.
std::vector<double> thomas_solve(const TridiagonalSystem& sys);

/// Allocation-free variant for the sweep loops: `x` receives the solution and
/// `scratch` (length N) holds the modified super-diagonal. `rhs` may alias `x`.
void thomas_solve(std::span<const double> sub, std::span<const double> diag,
                  std::span<const double> sup, std::span<const double> rhs, std::span<double> x,
                  std::span<double> scratch);

}  // namespace chemocomp
