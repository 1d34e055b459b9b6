#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace graduation {

struct CountryRecord {
  std::string name;
  double gini;
  std::optional<int> year;
  std::optional<double> published_degree;  // degree quoted alongside the Gini in the source, if any
  std::string note;

  void validate() const {
    if (!(gini > 0.0 && gini < 1.0)) throw std::domain_error(name + ": Gini must lie in (0, 1)");
    if (year && (*year < 1900 || *year > 2100)) throw std::domain_error(name + ": year out of range");
  }
};

// CIA-sourced national Gini values (comma decimals converted), plus Moscow and Bolivia.
inline std::span<const CountryRecord> bundled_countries() {
  static const std::vector<CountryRecord> table = [] {
    std::vector<CountryRecord> t{
        {"Norway", 0.25, 2008, std::nullopt, ""},
        {"France", 0.32, 2008, std::nullopt, "also quoted as 0.327"},
        {"Russia", 0.423, 2008, std::nullopt, ""},
        {"Nigeria", 0.437, 2003, std::nullopt, ""},
        {"USA", 0.45, 2007, std::nullopt, ""},
        {"Mexico", 0.482, 2008, std::nullopt, ""},
        {"Haiti", 0.538, 2001, std::nullopt, ""},
        {"Sierra Leone", 0.629, 1989, std::nullopt, ""},
        {"South Africa", 0.65, 2005, std::nullopt, ""},
        {"Namibia", 0.707, 2003, std::nullopt, "sources range from 0.707 to 0.75"},
        {"Moscow", 0.521, 2009, 2.742,
         "published m = 2.742 is inconsistent with m = 2G/(1-G), which gives 2.175"},
        {"Bolivia", 0.592, std::nullopt, std::nullopt, "decile ratio reported as 168.1; year not given"},
    };
    for (const auto& r : t) r.validate();
    return t;
  }();
  return table;
}

inline const CountryRecord* find_country(std::string_view name) {
  for (const auto& r : bundled_countries()) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

}  // namespace graduation
