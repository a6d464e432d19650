#include "chemocomp/field.hpp"

#include <algorithm>
#include <cmath>

#include "chemocomp/error.hpp"

namespace chemocomp {

Field::Field(Grid grid, std::vector<double> data) : grid_(grid), data_(std::move(data)) {
    if (data_.size() != grid_.size()) {
        throw InvalidArgument("field length does not match grid");
    }
}

double Field::min() const { return *std::min_element(data_.begin(), data_.end()); }

double Field::max() const { return *std::max_element(data_.begin(), data_.end()); }

bool Field::all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](double x) { return std::isfinite(x); });
}

Field project(const std::function<double(double)>& f, const Grid& grid) {
    if (grid.dim() != 1) throw InvalidArgument("one-argument projection needs a 1D grid");
    Field out(grid);
    for (std::size_t j = 0; j < grid.n(); ++j) out[j] = f(grid.center(j));
    return out;
}

Field project(const std::function<double(double, double)>& f, const Grid& grid) {
    if (grid.dim() != 2) throw InvalidArgument("two-argument projection needs a 2D grid");
    Field out(grid);
    for (std::size_t k = 0; k < grid.n(); ++k) {
        const double y = grid.center(k);
        for (std::size_t j = 0; j < grid.n(); ++j) out(j, k) = f(grid.center(j), y);
    }
    return out;
}

}  // namespace chemocomp
