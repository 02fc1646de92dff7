#include "gcm/cli/text.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gcm::cli {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

double parse_decimal(std::string_view s, std::string_view whole) {
  double value = 0.0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || end != s.data() + s.size() || !std::isfinite(value))
    throw std::invalid_argument("not a number: '" + std::string(whole) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

}  // namespace

double parse_angle(std::string_view text) {
  const std::string_view s = trim(text);
  const auto pi_at = s.find("pi");
  if (pi_at == std::string_view::npos) return parse_decimal(s, text);

  // [sign][factor[*]]pi[/divisor]
  std::string_view head = s.substr(0, pi_at);
  std::string_view tail = s.substr(pi_at + 2);
  double sign = 1.0;
  if (!head.empty() && (head.front() == '-' || head.front() == '+')) {
    sign = head.front() == '-' ? -1.0 : 1.0;
    head.remove_prefix(1);
  }
  if (!head.empty() && head.back() == '*') head.remove_suffix(1);
  const double factor = head.empty() ? 1.0 : parse_decimal(head, text);
  double divisor = 1.0;
  if (!tail.empty()) {
    if (tail.front() != '/') throw std::invalid_argument("bad angle literal: '" + std::string(text) + "'");
    divisor = parse_decimal(tail.substr(1), text);
    if (divisor == 0.0) throw std::invalid_argument("zero divisor in angle: '" + std::string(text) + "'");
  }
  return sign * factor * std::numbers::pi / divisor;
}

std::vector<double> parse_angle_list(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) return {};
  if (s.find(':') != std::string_view::npos) {
    const auto parts = split(s, ':');
    if (parts.size() != 3) throw std::invalid_argument("range must be start:stop:step");
    const double start = parse_angle(parts[0]);
    const double stop = parse_angle(parts[1]);
    const double step = parse_angle(parts[2]);
    if (!(step > 0.0) || stop < start) throw std::invalid_argument("range needs step > 0 and stop >= start");
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> values;
    for (std::size_t i = 0; i < count; ++i) values.push_back(start + static_cast<double>(i) * step);
    return values;
  }
  std::vector<double> values;
  for (auto part : split(s, ',')) values.push_back(parse_angle(part));
  return values;
}

std::string format_number(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  std::string out(buf, end);
  if (std::isfinite(value) && out.find_first_of(".e") == std::string::npos) out += ".0";
  return out;
}

std::size_t CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return i;
  throw std::invalid_argument("no CSV column '" + std::string(name) + "'");
}

double CsvTable::number(std::size_t row, std::string_view name) const {
  const auto& cell = rows.at(row).at(column(name));
  if (cell == "inf") return INFINITY;
  return parse_decimal(cell, cell);
}

CsvTable parse_csv(std::string_view text) {
  CsvTable table;
  bool have_header = false;
  for (auto raw : split(text, '\n')) {
    const auto line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto body = trim(line.substr(1));
      const auto eq = body.find('=');
      if (eq != std::string_view::npos)
        table.comments[std::string(trim(body.substr(0, eq)))] = std::string(trim(body.substr(eq + 1)));
      continue;
    }
    std::vector<std::string> cells;
    for (auto cell : split(line, ',')) cells.emplace_back(trim(cell));
    if (!have_header) {
      table.header = std::move(cells);
      have_header = true;
    } else {
      if (cells.size() != table.header.size()) throw std::invalid_argument("ragged CSV row");
      table.rows.push_back(std::move(cells));
    }
  }
  if (!have_header) throw std::invalid_argument("CSV has no header");
  return table;
}

}  // namespace gcm::cli
