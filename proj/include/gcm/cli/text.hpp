#pragma once

// Text helpers for the command-line tool: angle literals, value lists,
// number formatting and a reader for the tool's own CSV output.

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace gcm::cli {

/// Decimal ("0.19635", "-1e-3") or pi fraction ("pi", "-pi/2", "3*pi/4",
/// "3pi/4", "pi/256"). Throws std::invalid_argument.
double parse_angle(std::string_view text);

/// Comma-separated values or an inclusive "start:stop:step" range; each item
/// goes through `parse_angle`, so plain decimals work too.
std::vector<double> parse_angle_list(std::string_view text);

/// Shortest round-trip decimal, always with a '.' or exponent ("3.0", "1.25", "2.5e-61").
std::string format_number(double value);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  /// "# key=value" comment lines.
  std::map<std::string, std::string> comments;

  std::size_t column(std::string_view name) const;
  double number(std::size_t row, std::string_view name) const;
};

/// Throws std::invalid_argument on ragged rows or a missing header.
CsvTable parse_csv(std::string_view text);

}  // namespace gcm::cli
