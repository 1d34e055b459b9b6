#pragma once

#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "graduation/gini_estimators.hpp"

namespace graduation::cli {

// Malformed input row; line is 1-based.
class input_error : public std::runtime_error {
 public:
  input_error(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(',', start);
    fields.push_back(trim(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return fields;
}

template <class T>
bool parse_number(std::string_view text, T& out) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return false;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc{} && ptr == text.data() + text.size();
}

// Calls row(fields, line_number) for every non-blank data line. The first
// non-blank line is a header when its first field does not parse as a number.
template <class RowFn>
void for_each_row(std::istream& in, RowFn&& row) {
  std::string line;
  std::size_t line_no = 0;
  bool seen_first = false;
  while (std::getline(in, line)) {
    ++line_no;
    const auto content = trim(line);
    if (content.empty()) continue;
    const auto fields = split_fields(content);
    if (!seen_first) {
      seen_first = true;
      double probe = 0.0;
      if (!parse_number(fields.front(), probe)) continue;
    }
    row(fields, line_no);
  }
}

}  // namespace detail

// One nonnegative income per line.
inline std::vector<double> read_incomes(std::istream& in) {
  std::vector<double> values;
  detail::for_each_row(in, [&](const std::vector<std::string_view>& fields, std::size_t line) {
    if (fields.size() != 1) throw input_error(line, "expected one income per row");
    double v = 0.0;
    if (!detail::parse_number(fields[0], v) || !std::isfinite(v)) {
      throw input_error(line, "not a number: '" + std::string(fields[0]) + "'");
    }
    if (v < 0.0) throw input_error(line, "negative income");
    values.push_back(v);
  });
  return values;
}

// `count,mean` per line, means ascending.
inline std::vector<GroupedBin> read_grouped(std::istream& in) {
  std::vector<GroupedBin> bins;
  detail::for_each_row(in, [&](const std::vector<std::string_view>& fields, std::size_t line) {
    if (fields.size() != 2) throw input_error(line, "expected 'count,mean'");
    GroupedBin bin{};
    if (!detail::parse_number(fields[0], bin.count) || bin.count < 0) {
      throw input_error(line, "count must be a nonnegative integer");
    }
    if (!detail::parse_number(fields[1], bin.mean) || !std::isfinite(bin.mean) || bin.mean < 0.0) {
      throw input_error(line, "mean must be a nonnegative number");
    }
    if (!bins.empty() && bin.mean < bins.back().mean) throw input_error(line, "bin means are not ascending");
    bins.push_back(bin);
  });
  return bins;
}

}  // namespace graduation::cli
