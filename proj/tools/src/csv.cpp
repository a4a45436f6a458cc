// SPDX-License-Identifier: Apache-2.0
#include "mtf_cli/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <ostream>

namespace mtf::cli {

std::string format_double(double x)
{
  if (std::isnan(x)) {
    return "nan";
  }
  if (std::isinf(x)) {
    return x > 0 ? "inf" : "-inf";
  }
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return {buf.data(), res.ptr};
}

CsvWriter& CsvWriter::field(std::string_view s)
{
  if (!first_) {
    out_ << ',';
  }
  out_ << s;
  first_ = false;
  return *this;
}

CsvWriter& CsvWriter::field(double x)
{
  return field(std::string_view(format_double(x)));
}

CsvWriter& CsvWriter::field(long long x)
{
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return field(std::string_view(buf.data(), static_cast<std::size_t>(res.ptr - buf.data())));
}

void CsvWriter::end_row()
{
  out_ << '\n';
  first_ = true;
}

}  // namespace mtf::cli
