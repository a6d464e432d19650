#pragma once

#include <cstddef>
#include <vector>

namespace chemocomp {

/// Uniform cell-centred mesh on [0, L] (dim = 1) or the square [0, L]^2 (dim = 2)
/// with N cells per axis. Cell j (0-based) spans [j dx, (j + 1) dx] and is
/// centred at (j + 1/2) dx. In 2D, cell (j, k) is stored at index k * N + j,
/// so x varies fastest.
class Grid {
public:
    Grid() = default;

    int dim() const noexcept { return dim_; }
    std::size_t n() const noexcept { return n_; }
    double length() const noexcept { return length_; }
    double dx() const noexcept { return dx_; }
    double dy() const noexcept { return dx_; }

    std::size_t size() const noexcept { return dim_ == 1 ? n_ : n_ * n_; }
    double cell_volume() const noexcept { return dim_ == 1 ? dx_ : dx_ * dx_; }

    double center(std::size_t j) const noexcept { return (static_cast<double>(j) + 0.5) * dx_; }
    /// Position of face j - 1/2, j = 0..N; faces 0 and N lie on the boundary.
    double face(std::size_t j) const noexcept { return static_cast<double>(j) * dx_; }
    std::vector<double> centers() const;

    std::size_t index(std::size_t j, std::size_t k) const noexcept { return k * n_ + j; }

    friend bool operator==(const Grid&, const Grid&) = default;

private:
    friend Grid build_grid(double L, std::size_t N, int dim);
    Grid(int dim, std::size_t n, double length)
        : dim_(dim), n_(n), length_(length), dx_(length / static_cast<double>(n)) {}

    int dim_ = 1;
    std::size_t n_ = 0;
    double length_ = 0.0;
    double dx_ = 0.0;
};

/// Throws InvalidArgument when N < 2, L <= 0 or dim is not 1 or 2.
Grid build_grid(double L, std::size_t N, int dim = 1);

}  // namespace chemocomp
