#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "chemocomp/amplitude.hpp"
#include "chemocomp/diagnostics.hpp"
#include "chemocomp/field.hpp"

namespace chemocomp {

/// Writes one row per record:
///   t,mass_u,mass_v,amp_u,amp_v,min_u,min_v,max_u,max_v,front_u,front_v[,A_ode]
/// An undefined front is an empty cell. When `ode` is given, its value at each
/// record time fills the A_ode column.
void write_time_series(std::ostream& os, const TimeSeries& series,
                       const AmplitudeSeries* ode = nullptr);

/// Header `x,u,v,cu,cv` (1D) or `x,y,u,v,cu,cv` (2D), one row per cell centre,
/// every value with 17 significant digits.
void write_snapshot(std::ostream& os, const State& s);

/// Parsed numeric CSV. Empty cells read as nullopt.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::optional<double>>> rows;

    /// Throws InvalidArgument when the column is absent.
    std::size_t column(const std::string& name) const;
    /// Entries of one column; throws InvalidArgument on an empty cell.
    std::vector<double> numbers(const std::string& name) const;
};

/// Throws InvalidArgument on ragged rows or non-numeric cells.
CsvTable read_csv(std::istream& is);
CsvTable read_csv_file(const std::string& path);

}  // namespace chemocomp
