#include "chemocomp/csv.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "chemocomp/error.hpp"

namespace chemocomp {

namespace {

std::string number(double x) { return fmt::format("{:.16e}", x); }

std::string optional_number(const std::optional<double>& x) { return x ? number(*x) : std::string(); }

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

std::string trim(std::string s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && s[i] == ' ') ++i;
    return s.substr(i);
}

}  // namespace

void write_time_series(std::ostream& os, const TimeSeries& series, const AmplitudeSeries* ode) {
    os << "t,mass_u,mass_v,amp_u,amp_v,min_u,min_v,max_u,max_v,front_u,front_v";
    if (ode) os << ",A_ode";
    os << '\n';
    for (const DiagnosticRecord& r : series.records) {
        fmt::print(os, "{},{},{},{},{},{},{},{},{},{},{}", number(r.t), number(r.mass_u),
                   number(r.mass_v), number(r.amp_u), number(r.amp_v), number(r.min_u),
                   number(r.min_v), number(r.max_u), number(r.max_v), optional_number(r.front_u),
                   optional_number(r.front_v));
        if (ode) os << ',' << number(ode->at(r.t));
        os << '\n';
    }
}

void write_snapshot(std::ostream& os, const State& s) {
    const Grid& g = s.u.grid();
    if (g.dim() == 1) {
        os << "x,u,v,cu,cv\n";
        for (std::size_t j = 0; j < g.n(); ++j) {
            fmt::print(os, "{},{},{},{},{}\n", number(g.center(j)), number(s.u[j]), number(s.v[j]),
                       number(s.cu[j]), number(s.cv[j]));
        }
        return;
    }
    os << "x,y,u,v,cu,cv\n";
    for (std::size_t k = 0; k < g.n(); ++k) {
        for (std::size_t j = 0; j < g.n(); ++j) {
            const std::size_t i = g.index(j, k);
            fmt::print(os, "{},{},{},{},{},{}\n", number(g.center(j)), number(g.center(k)),
                       number(s.u[i]), number(s.v[i]), number(s.cu[i]), number(s.cv[i]));
        }
    }
}

std::size_t CsvTable::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return i;
    throw InvalidArgument("no CSV column named '" + name + "'");
}

std::vector<double> CsvTable::numbers(const std::string& name) const {
    const std::size_t c = column(name);
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        if (!row[c]) throw InvalidArgument("empty cell in CSV column '" + name + "'");
        out.push_back(*row[c]);
    }
    return out;
}

CsvTable read_csv(std::istream& is) {
    CsvTable t;
    std::string line;
    if (!std::getline(is, line)) throw InvalidArgument("CSV input is empty");
    for (auto& h : split(trim(line))) t.header.push_back(trim(h));

    std::size_t line_no = 1;
    while (std::getline(is, line)) {
        ++line_no;
        line = trim(line);
        if (line.empty()) continue;
        const auto cells = split(line);
        if (cells.size() != t.header.size()) {
            throw InvalidArgument(fmt::format("CSV line {} has {} cells, expected {}", line_no,
                                              cells.size(), t.header.size()));
        }
        std::vector<std::optional<double>> row;
        row.reserve(cells.size());
        for (const auto& raw : cells) {
            const std::string cell = trim(raw);
            if (cell.empty()) {
                row.emplace_back();
                continue;
            }
            double x = 0.0;
            const auto [end, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), x);
            if (ec != std::errc() || end != cell.data() + cell.size()) {
                throw InvalidArgument(fmt::format("CSV line {}: '{}' is not a number", line_no, cell));
            }
            row.emplace_back(x);
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

CsvTable read_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open '" + path + "'");
    return read_csv(in);
}

}  // namespace chemocomp
