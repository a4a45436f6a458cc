// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

namespace mtf::cli {

/// Shortest form with at most 17 significant digits; independent of the global locale.
std::string format_double(double x);

/// Row writer with LF line endings.
class CsvWriter
{
public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  CsvWriter& field(std::string_view s);
  CsvWriter& field(double x);
  CsvWriter& field(long long x);
  CsvWriter& field(int x) { return field(static_cast<long long>(x)); }
  void end_row();

private:
  std::ostream& out_;
  bool first_ = true;
};

}  // namespace mtf::cli
