#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace phononet {

/// Format a value with 12 significant digits: fixed-point inside
/// [1e-6, 1e6), scientific outside, trailing zeros trimmed.  Deterministic
/// across platforms (snprintf, C locale digits).
inline std::string format_number(double value) {
  if (value == 0.0) return "0";

  char buf[64];
  const double mag = std::abs(value);
  if (mag >= 1e6 || mag < 1e-6) {
    std::snprintf(buf, sizeof buf, "%.11e", value);
    std::string s(buf);
    // trim zeros in the mantissa: 1.50000000000e+07 -> 1.5e+07
    const auto e = s.find('e');
    auto last = s.find_last_not_of('0', e - 1);
    if (s[last] == '.') --last;
    return s.substr(0, last + 1) + s.substr(e);
  }

  // digits before the decimal point; <= 0 for magnitudes below one, in which
  // case extra decimals are needed to keep twelve significant digits
  const int int_digits = static_cast<int>(std::floor(std::log10(mag))) + 1;
  const int decimals = std::max(0, 12 - int_digits);
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  std::string s(buf);
  if (s.find('.') != std::string::npos) {
    auto last = s.find_last_not_of('0');
    if (s[last] == '.') --last;
    s.erase(last + 1);
  }
  return s;
}

/// Write a numeric table as CSV: header row, then one row per entry,
/// LF line endings, values through format_number.
inline void write_csv(std::ostream& out, std::span<const std::string> header,
                      std::span<const std::vector<double>> rows) {
  for (size_t i = 0; i < header.size(); ++i) {
    if (i) out << ',';
    out << header[i];
  }
  out << '\n';
  for (const auto& row : rows) {
    if (row.size() != header.size())
      throw std::invalid_argument("csv row width does not match header");
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << format_number(row[i]);
    }
    out << '\n';
  }
}

inline void write_csv_file(const std::string& path, std::span<const std::string> header,
                           std::span<const std::vector<double>> rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_csv(out, header, rows);
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace phononet
