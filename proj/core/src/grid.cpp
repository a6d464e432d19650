#include "chemocomp/grid.hpp"

#include <cmath>

#include "chemocomp/error.hpp"

namespace chemocomp {

std::vector<double> Grid::centers() const {
    std::vector<double> xs(n_);
    for (std::size_t j = 0; j < n_; ++j) xs[j] = center(j);
    return xs;
}

Grid build_grid(double L, std::size_t N, int dim) {
    if (N < 2) throw InvalidArgument("grid needs at least 2 cells per axis");
    if (!std::isfinite(L) || L <= 0.0) throw InvalidArgument("domain length must be > 0");
    if (dim != 1 && dim != 2) throw InvalidArgument("dim must be 1 or 2");
    return Grid(dim, N, L);
}

}  // namespace chemocomp
