/**
 * @file table.hpp
 * @brief Strict CSV point tables: comma-separated, header row, decimal
 *        point, finite numeric cells; distinct error codes per defect.
 */

#ifndef HSDEPTH_CLI_TABLE_HPP
#define HSDEPTH_CLI_TABLE_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace hsdepth::cli {

/// Rectangular table of finite doubles with a header row. An optional
/// trailing label column (non-numeric header "label") is kept as strings.
struct PointTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
    std::vector<std::string> labels;  // empty or one per row

    std::size_t cols() const { return header.size() - (has_labels() ? 1 : 0); }
    bool has_labels() const {
        return !header.empty() && header.back() == "label";
    }
};

enum class CsvErrorCode { Io, Empty, Ragged, NonNumeric, NonFinite };

class CsvError : public std::runtime_error {
  public:
    CsvError(CsvErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    CsvErrorCode code() const { return code_; }

  private:
    CsvErrorCode code_;
};

/// Strict parse; throws CsvError with a distinct code per defect kind.
PointTable parse_points_csv(const std::string& path);

/// Serialize with 12 significant digits; parse(emit(t)) == t for values
/// exactly representable at that precision.
std::string emit_points_csv(const PointTable& table);

void write_file(const std::string& path, const std::string& content);

/// printf "%.12g" formatting used for every numeric cell the CLI emits.
std::string fmt12(double v);

}  // namespace hsdepth::cli

#endif  // HSDEPTH_CLI_TABLE_HPP
