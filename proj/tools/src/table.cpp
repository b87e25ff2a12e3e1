/**
 * @file table.cpp
 * @brief Strict CSV parsing and deterministic 12-significant-digit
 *        serialization for point tables.
 */

#include "table.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hsdepth::cli {

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            cells.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    cells.push_back(cur);
    return cells;
}

double parse_cell(const std::string& cell, std::size_t line_no) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(cell, &used);
    } catch (const std::exception&) {
        throw CsvError(CsvErrorCode::NonNumeric,
                       "NONNUMERIC: cell '" + cell + "' at line " +
                           std::to_string(line_no));
    }
    if (used != cell.size())
        throw CsvError(CsvErrorCode::NonNumeric,
                       "NONNUMERIC: trailing characters in '" + cell +
                           "' at line " + std::to_string(line_no));
    if (!std::isfinite(v))
        throw CsvError(CsvErrorCode::NonFinite,
                       "NONFINITE: value '" + cell + "' at line " +
                           std::to_string(line_no));
    return v;
}

}  // namespace

PointTable parse_points_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw CsvError(CsvErrorCode::Io, "IO: cannot open '" + path + "'");
    PointTable table;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1 && !line.empty() && line.back() == '\r')
            line.pop_back();
        const std::vector<std::string> cells = split_line(line);
        if (line_no == 1) {
            table.header = cells;
            continue;
        }
        if (cells.size() != table.header.size())
            throw CsvError(CsvErrorCode::Ragged,
                           "RAGGED: line " + std::to_string(line_no) +
                               " has " + std::to_string(cells.size()) +
                               " cells, expected " +
                               std::to_string(table.header.size()));
        std::vector<double> row;
        const std::size_t ncols = table.cols();
        row.reserve(ncols);
        for (std::size_t i = 0; i < ncols; ++i)
            row.push_back(parse_cell(cells[i], line_no));
        table.rows.push_back(std::move(row));
        if (table.has_labels()) table.labels.push_back(cells.back());
    }
    if (table.header.empty() || table.cols() == 0)
        throw CsvError(CsvErrorCode::Empty, "EMPTY: no header in '" + path + "'");
    if (table.rows.empty())
        throw CsvError(CsvErrorCode::Empty,
                       "EMPTY: no data rows in '" + path + "'");
    return table;
}

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string emit_points_csv(const PointTable& table) {
    std::ostringstream out;
    for (std::size_t i = 0; i < table.header.size(); ++i)
        out << (i ? "," : "") << table.header[i];
    out << "\n";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        for (std::size_t i = 0; i < table.rows[r].size(); ++i)
            out << (i ? "," : "") << fmt12(table.rows[r][i]);
        if (table.has_labels()) out << "," << table.labels[r];
        out << "\n";
    }
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw CsvError(CsvErrorCode::Io, "IO: cannot write '" + path + "'");
    out << content;
    if (!out)
        throw CsvError(CsvErrorCode::Io, "IO: short write to '" + path + "'");
}

}  // namespace hsdepth::cli
