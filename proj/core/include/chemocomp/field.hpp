#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "chemocomp/grid.hpp"

namespace chemocomp {

/// Cell averages of one scalar density on a Grid.
class Field {
public:
    Field() = default;
    explicit Field(Grid grid, double value = 0.0) : grid_(grid), data_(grid.size(), value) {}
    Field(Grid grid, std::vector<double> data);

    const Grid& grid() const noexcept { return grid_; }
    std::size_t size() const noexcept { return data_.size(); }

    double& operator[](std::size_t i) noexcept { return data_[i]; }
    double operator[](std::size_t i) const noexcept { return data_[i]; }
    double& operator()(std::size_t j, std::size_t k) noexcept { return data_[grid_.index(j, k)]; }
    double operator()(std::size_t j, std::size_t k) const noexcept { return data_[grid_.index(j, k)]; }

    std::span<double> values() noexcept { return data_; }
    std::span<const double> values() const noexcept { return data_; }

    double min() const;
    double max() const;
    bool all_finite() const;

private:
    Grid grid_;
    std::vector<double> data_;
};

/// Densities and their chemicals at time t. `cu` is c[u], `cv` is c[v].
struct State {
    Field u;
    Field v;
    Field cu;
    Field cv;
    double t = 0.0;
};

/// Midpoint-rule cell averages: each entry is f evaluated at the cell centre.
Field project(const std::function<double(double)>& f, const Grid& grid);
Field project(const std::function<double(double, double)>& f, const Grid& grid);

}  // namespace chemocomp
