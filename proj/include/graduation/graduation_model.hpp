#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "graduation/faulhaber.hpp"
#include "graduation/gini_estimators.hpp"
#include "graduation/rational.hpp"

namespace graduation {

// Power-rank ("graduation") income model: the unit at rank i earns scale * i^degree.
struct PowerModel {
  double degree = 1.0;
  std::int64_t population = 2;
  double scale = 1.0;

  void validate() const {
    if (!(degree > 0.0) || !std::isfinite(degree)) throw std::domain_error("power model: degree must be > 0");
    if (population < 2) throw std::domain_error("power model: population must be >= 2");
    if (!(scale > 0.0) || !std::isfinite(scale)) throw std::domain_error("power model: scale must be > 0");
  }
};

// (C 1^m, C 2^m, ..., C n^m), ascending. Throws std::range_error when a value
// leaves the double range.
inline IncomeSample generate_incomes(const PowerModel& model) {
  model.validate();
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(model.population));
  for (std::int64_t i = 1; i <= model.population; ++i) {
    const double x = model.scale * std::pow(static_cast<double>(i), model.degree);
    if (!std::isfinite(x)) {
      throw std::range_error("power model incomes overflow double at rank " + std::to_string(i));
    }
    values.push_back(x);
  }
  return IncomeSample(std::move(values));
}

// Exact integer incomes (1^m, ..., n^m) for integral degree.
inline std::vector<Rational> generate_incomes_exact(unsigned degree, std::int64_t population) {
  if (population < 2) throw std::domain_error("power model: population must be >= 2");
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(population));
  for (std::int64_t i = 1; i <= population; ++i) {
    values.emplace_back(boost::multiprecision::pow(BigInt(i), degree));
  }
  return values;
}

// Finite-n Gini of the power model with integral degree, exact:
//   G'_m(n) = (2/(n-1)) (S_{m+1}(n)/S_m(n) - (n+1)/2),  S_m(n) = sum_{k=1}^n k^m.
inline Rational exact_gini(unsigned degree, std::uint64_t population) {
  if (population < 2) throw std::domain_error("exact_gini: population must be >= 2");
  const Rational n{BigInt(population)};
  const Rational ratio = faulhaber_sum(degree + 1, population) / faulhaber_sum(degree, population);
  return Rational(2) / (n - Rational(1)) * (ratio - (n + Rational(1)) / Rational(2));
}

// Sorted-data Gini of the generated vector; works for fractional degree.
inline double gini_numeric(double degree, std::int64_t population, double scale = 1.0) {
  const auto incomes = generate_incomes(PowerModel{degree, population, scale});
  return gini_presorted<double>(incomes.values());
}

// Limit of G'_m(n) as n -> infinity.
inline double asymptotic_gini(double degree) {
  if (!(degree >= 0.0)) throw std::domain_error("asymptotic_gini: degree must be >= 0");
  return degree / (degree + 2.0);
}

inline Rational asymptotic_gini_exact(unsigned degree) { return Rational(BigInt(degree), BigInt(degree + 2)); }

// Degree bucket label: nearest integer, half-up; below 0.5 is "sub-linear".
inline std::string degree_label(long k) {
  switch (k) {
    case 0: return "sub-linear";
    case 1: return "linear";
    case 2: return "quadratic";
    case 3: return "cubic";
    case 4: return "tetradic";
    case 5: return "pentagonal-power";
    case 6: return "hexal";
    default: return "degree-" + std::to_string(k);
  }
}

inline std::string classify(double degree) {
  if (!(degree >= 0.0) || !std::isfinite(degree)) throw std::domain_error("classify: degree must be finite and >= 0");
  if (degree < 0.5) return degree_label(0);
  return degree_label(static_cast<long>(std::floor(degree + 0.5)));
}

// Integer interval containing the degree, e.g. "between linear and quadratic";
// the label itself when the degree is integral.
inline std::string bracket(double degree) {
  if (!(degree >= 0.0) || !std::isfinite(degree)) throw std::domain_error("bracket: degree must be finite and >= 0");
  const double lo = std::floor(degree);
  if (lo == degree) return degree == 0.0 ? "equality" : degree_label(static_cast<long>(lo));
  return "between " + degree_label(static_cast<long>(lo)) + " and " + degree_label(static_cast<long>(lo) + 1);
}

struct GraduationResult {
  double gini;
  double degree;
  std::string classification;
  std::optional<Rational> exact;  // m/(m+2) when the degree is integral
};

// Inverts the asymptote: m = 2G / (1 - G).
inline GraduationResult graduate(double gini) {
  if (!(gini >= 0.0 && gini < 1.0)) throw std::domain_error("graduate: Gini must lie in [0, 1)");
  const double m = 2.0 * gini / (1.0 - gini);
  GraduationResult r{gini, m, classify(m), std::nullopt};
  if (m == std::floor(m) && m < 1e9) r.exact = asymptotic_gini_exact(static_cast<unsigned>(m));
  return r;
}

}  // namespace graduation
