#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "graduation/cli/csv.hpp"
#include "graduation/cli/report.hpp"
#include "graduation/countries.hpp"
#include "graduation/gini_estimators.hpp"
#include "graduation/graduation_model.hpp"
#include "graduation/reference_distributions.hpp"

namespace graduation::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_usage = 2,
  exit_unreadable = 3,
  exit_malformed = 4,
  exit_undefined = 5,
};

// A command failure with the process exit code it maps to.
class command_error : public std::runtime_error {
 public:
  command_error(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int exit_code() const { return code_; }

 private:
  int code_;
};

inline std::string_view to_string(Convention c) { return c == Convention::sample ? "sample" : "population"; }

namespace detail {

// Non-finite values are not representable in JSON; emit a marker string.
inline Json number(double v) {
  if (std::isinf(v)) return v > 0 ? "infinity" : "-infinity";
  if (std::isnan(v)) return "nan";
  return v;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw command_error(exit_unreadable, "cannot read '" + path + "'");
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw command_error(exit_unreadable, "error reading '" + path + "'");
  return bytes;
}

inline Json degree_summary(double gini) {
  Json j = Json::object();
  if (!(gini >= 0.0 && gini < 1.0)) {
    j["m"] = "infinity";
    j["classification"] = "unbounded";
    return j;
  }
  const auto g = graduate(gini);
  j["m"] = g.degree;
  j["classification"] = g.classification;
  j["bracket"] = bracket(g.degree);
  return j;
}

inline Json match_row(DistributionKind kind, double gini) {
  Json row;
  row["kind"] = std::string(to_string(kind));
  if (!(gini > 0.0)) {
    row["shape"] = "degenerate";
    row["m_equivalent"] = 0.0;
    row["variance_finite"] = true;
  } else {
    const auto m = match_to_gini(kind, gini);
    row["shape"] = m.spec.shape;
    row["m_equivalent"] = m.m_equivalent;
    row["variance_finite"] = m.variance_finite;
  }
  row["variance_threshold_m"] = number(variance_threshold_in_m(kind));
  return row;
}

}  // namespace detail

// Exact finite-n Gini of the power model with integral degree.
inline ReportDocument cmd_exact(const std::string& degree_text, std::int64_t population) {
  std::uint64_t degree = 0;
  if (!cli::detail::parse_number(cli::detail::trim(degree_text), degree) || degree > 100000) {
    throw command_error(exit_usage, "exact: m must be a nonnegative integer (use `model` for fractional degrees)");
  }
  if (population < 2) throw command_error(exit_usage, "exact: n must be >= 2");
  const auto m = static_cast<unsigned>(degree);
  const Rational g = exact_gini(m, static_cast<std::uint64_t>(population));
  const Rational limit = asymptotic_gini_exact(m);
  ReportDocument doc{"exact"};
  doc.inputs["m"] = degree;
  doc.inputs["n"] = population;
  doc.results["gini_exact"] = g.to_string();
  doc.results["gini"] = g.to_double();
  doc.results["asymptotic_exact"] = limit.to_string();
  doc.results["asymptotic"] = limit.to_double();
  doc.results["gap"] = (g - limit).to_double();
  return doc;
}

// Power model with real degree, evaluated on the generated incomes.
inline ReportDocument cmd_model(double degree, std::int64_t population, double scale) {
  ReportDocument doc{"model"};
  doc.inputs["m"] = degree;
  doc.inputs["n"] = population;
  doc.inputs["scale"] = scale;
  double gini = 0.0;
  try {
    gini = gini_numeric(degree, population, scale);
  } catch (const std::range_error& e) {
    throw command_error(exit_usage, std::string("model: ") + e.what());
  } catch (const std::domain_error& e) {
    throw command_error(exit_usage, std::string("model: ") + e.what());
  }
  doc.results["gini"] = gini;
  if (degree == std::floor(degree) && degree <= 1000.0) {
    doc.results["gini_exact"] = exact_gini(static_cast<unsigned>(degree), static_cast<std::uint64_t>(population)).to_string();
  }
  doc.results["asymptotic"] = asymptotic_gini(degree);
  doc.results["classification"] = classify(degree);
  doc.results["bracket"] = bracket(degree);
  return doc;
}

inline ReportDocument cmd_graduate(double gini) {
  if (!(gini >= 0.0 && gini < 1.0)) throw command_error(exit_usage, "graduate: Gini must lie in [0, 1)");
  const auto g = graduate(gini);
  ReportDocument doc{"graduate"};
  doc.inputs["gini"] = gini;
  doc.results["m"] = g.degree;
  doc.results["classification"] = g.classification;
  doc.results["bracket"] = bracket(g.degree);
  doc.results["asymptotic_check"] = asymptotic_gini(g.degree);
  if (g.exact) doc.results["asymptotic_exact"] = g.exact->to_string();
  Json matches = Json::array();
  for (auto kind : all_distribution_kinds) matches.push_back(detail::match_row(kind, gini));
  doc.results["matches"] = matches;
  for (const auto& rec : bundled_countries()) {
    if (rec.gini == gini && rec.published_degree) {
      std::ostringstream note;
      note << rec.name << ": published m = " << *rec.published_degree
           << " does not follow from m = 2G/(1-G); computed m = ";
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", g.degree);
      note << buf;
      doc.results["note"] = note.str();
    }
  }
  return doc;
}

inline ReportDocument cmd_sample_gini(const std::string& path, Convention convention,
                                      const std::optional<std::string>& lorenz_path = std::nullopt) {
  const std::string bytes = detail::read_file(path);
  std::istringstream in(bytes);
  std::vector<double> values;
  try {
    values = read_incomes(in);
  } catch (const input_error& e) {
    throw command_error(exit_malformed, path + ": " + e.what());
  }
  if (values.size() < 2) throw command_error(exit_malformed, path + ": need at least 2 incomes");
  const IncomeSample sample(std::move(values));
  const double total = sample.total();
  if (total == 0.0) throw command_error(exit_undefined, path + ": all incomes are zero; Gini undefined");

  const double g = gini_sorted(sample);
  ReportDocument doc{"sample-gini"};
  doc.digest_extra = bytes;
  doc.inputs["file"] = path;
  doc.inputs["convention"] = std::string(to_string(convention));
  doc.results["n"] = sample.size();
  doc.results["mean"] = sample.mean();
  doc.results["mean_difference"] = 2.0 * sample.mean() * g;
  doc.results["gini"] = to_convention(g, sample.size(), convention);
  doc.results["gini_sample"] = g;
  doc.results["gini_population"] = to_convention(g, sample.size(), Convention::population);
  doc.results["graduation"] = detail::degree_summary(to_convention(g, sample.size(), convention));

  if (lorenz_path) {
    std::ofstream out(*lorenz_path, std::ios::binary);
    if (!out) throw command_error(exit_unreadable, "cannot write '" + *lorenz_path + "'");
    out << "p,L\n";
    char buf[64];
    const auto curve = lorenz_curve(sample);
    for (const auto& pt : curve.points()) {
      std::snprintf(buf, sizeof buf, "%.12g,%.12g\n", pt.population_share, pt.income_share);
      out << buf;
    }
    doc.results["lorenz_file"] = *lorenz_path;
  }
  return doc;
}

inline ReportDocument cmd_grouped(const std::string& path, Convention convention) {
  const std::string bytes = detail::read_file(path);
  std::istringstream in(bytes);
  std::vector<GroupedBin> bins;
  try {
    bins = read_grouped(in);
  } catch (const input_error& e) {
    throw command_error(exit_malformed, path + ": " + e.what());
  }
  std::int64_t total_count = 0;
  double total_income = 0.0;
  for (const auto& b : bins) {
    total_count += b.count;
    total_income += static_cast<double>(b.count) * b.mean;
  }
  if (total_count < 2) throw command_error(exit_malformed, path + ": need a total count of at least 2");
  if (total_income == 0.0) throw command_error(exit_undefined, path + ": total income is zero; Gini undefined");
  const GroupedData data(std::move(bins));
  const auto bounds = grouped_gini_bounds(data);
  const auto n = static_cast<std::size_t>(data.total_count());
  const double lower = to_convention(bounds.lower, n, convention);
  const double upper = to_convention(bounds.upper, n, convention);

  ReportDocument doc{"grouped"};
  doc.digest_extra = bytes;
  doc.inputs["file"] = path;
  doc.inputs["convention"] = std::string(to_string(convention));
  doc.results["bins"] = data.bins().size();
  doc.results["n"] = data.total_count();
  doc.results["lower"] = lower;
  doc.results["upper"] = upper;
  doc.results["m_lower"] = detail::degree_summary(lower)["m"];
  doc.results["m_upper"] = detail::degree_summary(upper)["m"];
  return doc;
}

inline ReportDocument cmd_countries() {
  ReportDocument doc{"countries"};
  Json rows = Json::array();
  for (const auto& rec : bundled_countries()) {
    const auto g = graduate(rec.gini);
    Json row;
    row["name"] = rec.name;
    row["year"] = rec.year ? Json(*rec.year) : Json("n/a");
    row["gini"] = rec.gini;
    row["m"] = std::round(g.degree * 1000.0) / 1000.0;
    row["classification"] = g.classification;
    row["bracket"] = bracket(g.degree);
    row["note"] = rec.note;
    rows.push_back(row);
  }
  doc.results["countries"] = rows;
  return doc;
}

// Asymptotic Gini m/(m+2) for m = 1..max_m.
inline ReportDocument cmd_table(std::int64_t max_m) {
  if (max_m < 1 || max_m > 100000) throw command_error(exit_usage, "table: max-m must be in 1..100000");
  ReportDocument doc{"table"};
  doc.inputs["max_m"] = max_m;
  Json rows = Json::array();
  for (unsigned m = 1; m <= static_cast<unsigned>(max_m); ++m) {
    const Rational g = asymptotic_gini_exact(m);
    Json row;
    row["m"] = m;
    row["gini_exact"] = g.to_string();
    row["gini"] = g.to_double();
    rows.push_back(row);
  }
  doc.results["rows"] = rows;
  return doc;
}

inline ReportDocument cmd_match(double gini, std::optional<DistributionKind> kind) {
  if (!(gini > 0.0 && gini < 1.0)) throw command_error(exit_usage, "match: Gini must lie in (0, 1)");
  ReportDocument doc{"match"};
  doc.inputs["gini"] = gini;
  doc.inputs["kind"] = kind ? std::string(to_string(*kind)) : std::string("all");
  Json rows = Json::array();
  for (auto k : all_distribution_kinds) {
    if (!kind || *kind == k) rows.push_back(detail::match_row(k, gini));
  }
  doc.results["matches"] = rows;
  return doc;
}

// Monte Carlo check of a closed-form Gini.
inline ReportDocument cmd_simulate(const DistributionSpec& spec, std::size_t count, std::uint64_t seed,
                                   Convention convention, const std::optional<std::string>& out_path = std::nullopt) {
  if (count < 2) throw command_error(exit_usage, "simulate: count must be >= 2");
  double closed = 0.0;
  try {
    closed = gini_of(spec);
  } catch (const std::domain_error& e) {
    throw command_error(exit_usage, std::string("simulate: ") + e.what());
  }
  const auto s = sample(spec, count, seed);
  const double empirical = gini_sorted(s, convention);
  ReportDocument doc{"simulate"};
  doc.inputs["kind"] = std::string(to_string(spec.kind));
  doc.inputs["shape"] = spec.shape;
  doc.inputs["scale"] = spec.scale;
  doc.inputs["count"] = count;
  doc.inputs["seed"] = seed;
  doc.inputs["convention"] = std::string(to_string(convention));
  doc.results["gini_closed_form"] = closed;
  doc.results["gini_empirical"] = empirical;
  doc.results["abs_error"] = std::abs(empirical - closed);
  doc.results["variance_finite"] = has_finite_variance(spec);
  doc.results["m_equivalent"] = 2.0 * closed / (1.0 - closed);
  if (out_path) {
    std::ofstream out(*out_path, std::ios::binary);
    if (!out) throw command_error(exit_unreadable, "cannot write '" + *out_path + "'");
    char buf[40];
    for (double v : s.values()) {
      std::snprintf(buf, sizeof buf, "%.17g\n", v);
      out << buf;
    }
    doc.results["sample_file"] = *out_path;
  }
  return doc;
}

}  // namespace graduation::cli
