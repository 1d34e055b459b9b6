#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <string_view>
#include <vector>

#include <boost/math/special_functions/erf.hpp>

#include "graduation/gini_estimators.hpp"

namespace graduation {

inline double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

inline double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("normal_quantile: p must lie in (0, 1)");
  return -std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * p);
}

enum class DistributionKind { pareto, loglogistic, lognormal };

inline constexpr DistributionKind all_distribution_kinds[] = {
    DistributionKind::pareto, DistributionKind::loglogistic, DistributionKind::lognormal};

inline std::string_view to_string(DistributionKind kind) {
  switch (kind) {
    case DistributionKind::pareto: return "pareto";
    case DistributionKind::loglogistic: return "loglogistic";
    case DistributionKind::lognormal: return "lognormal";
  }
  return "unknown";
}

inline std::optional<DistributionKind> parse_distribution_kind(std::string_view name) {
  for (auto k : all_distribution_kinds) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

// shape: Pareto alpha, log-logistic beta, log-normal sigma.
// scale: Pareto minimum, log-logistic median, log-normal median exp(mu).
struct DistributionSpec {
  DistributionKind kind = DistributionKind::pareto;
  double shape = 2.0;
  double scale = 1.0;

  void validate() const {
    if (!(scale > 0.0) || !std::isfinite(scale)) throw std::domain_error("distribution scale must be > 0");
    if (!std::isfinite(shape)) throw std::domain_error("distribution shape must be finite");
    switch (kind) {
      case DistributionKind::pareto:
        if (!(shape > 1.0)) throw std::domain_error("pareto: alpha must be > 1 (finite mean)");
        break;
      case DistributionKind::loglogistic:
        if (!(shape > 1.0)) throw std::domain_error("loglogistic: beta must be > 1 (finite mean)");
        break;
      case DistributionKind::lognormal:
        if (!(shape > 0.0)) throw std::domain_error("lognormal: sigma must be > 0");
        break;
    }
  }
};

inline double gini_of(const DistributionSpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case DistributionKind::pareto: return 1.0 / (2.0 * spec.shape - 1.0);
    case DistributionKind::loglogistic: return 1.0 / spec.shape;
    case DistributionKind::lognormal: return 2.0 * normal_cdf(spec.shape / std::numbers::sqrt2) - 1.0;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

// Pareto needs alpha > 2, log-logistic beta > 2; log-normal always has one.
inline bool has_finite_variance(const DistributionSpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case DistributionKind::pareto:
    case DistributionKind::loglogistic: return spec.shape > 2.0;
    case DistributionKind::lognormal: return true;
  }
  return false;
}

// +infinity when the variance diverges.
inline double variance_of(const DistributionSpec& spec) {
  if (!has_finite_variance(spec)) return std::numeric_limits<double>::infinity();
  const double s = spec.shape;
  const double c2 = spec.scale * spec.scale;
  switch (spec.kind) {
    case DistributionKind::pareto: return c2 * s / ((s - 1.0) * (s - 1.0) * (s - 2.0));
    case DistributionKind::loglogistic: {
      const double b = std::numbers::pi / s;
      return c2 * (2.0 * b / std::sin(2.0 * b) - b * b / (std::sin(b) * std::sin(b)));
    }
    case DistributionKind::lognormal: return c2 * std::expm1(s * s) * std::exp(s * s);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

// Supremum of the equivalent degree m = 2G/(1-G) at which the Gini-matched
// distribution still has finite variance.
inline double variance_threshold_in_m(DistributionKind kind) {
  switch (kind) {
    case DistributionKind::pareto: return 1.0;
    case DistributionKind::loglogistic: return 2.0;
    case DistributionKind::lognormal: return std::numeric_limits<double>::infinity();
  }
  return std::numeric_limits<double>::quiet_NaN();
}

struct MatchResult {
  DistributionSpec spec;
  double gini;
  double m_equivalent;
  bool variance_finite;
};

// Shape parameter whose closed-form Gini equals g.
inline MatchResult match_to_gini(DistributionKind kind, double g, double scale = 1.0) {
  if (!(g > 0.0 && g < 1.0)) throw std::domain_error("match_to_gini: Gini must lie in (0, 1)");
  DistributionSpec spec{kind, 0.0, scale};
  switch (kind) {
    case DistributionKind::pareto: spec.shape = (1.0 / g + 1.0) / 2.0; break;
    case DistributionKind::loglogistic: spec.shape = 1.0 / g; break;
    case DistributionKind::lognormal: spec.shape = std::numbers::sqrt2 * normal_quantile((g + 1.0) / 2.0); break;
  }
  spec.validate();
  return {spec, g, 2.0 * g / (1.0 - g), has_finite_variance(spec)};
}

// Seeded uniform source on the open interval (0, 1): 53-bit grid shifted by half a step.
class UniformSource {
 public:
  explicit UniformSource(std::uint64_t seed) : engine_(seed) {}

  double next() {
    constexpr double step = 0x1.0p-53;
    return (static_cast<double>(engine_() >> 11) + 0.5) * step;
  }

 private:
  std::mt19937_64 engine_;
};

// Inverse-CDF transform of one uniform draw.
inline double quantile(const DistributionSpec& spec, double u) {
  switch (spec.kind) {
    case DistributionKind::pareto: return spec.scale * std::pow(u, -1.0 / spec.shape);
    case DistributionKind::loglogistic: return spec.scale * std::pow(u / (1.0 - u), 1.0 / spec.shape);
    case DistributionKind::lognormal: return spec.scale * std::exp(spec.shape * normal_quantile(u));
  }
  return std::numeric_limits<double>::quiet_NaN();
}

// Deterministic for a fixed (spec, count, seed): one mt19937_64 stream, in order.
inline IncomeSample sample(const DistributionSpec& spec, std::size_t count, std::uint64_t seed) {
  spec.validate();
  if (count < 2) throw std::invalid_argument("sample: count must be >= 2");
  UniformSource uniform(seed);
  std::vector<double> values;
  values.reserve(count);
  for (std::size_t i = 0; i < count; ++i) values.push_back(quantile(spec, uniform.next()));
  return IncomeSample(std::move(values));
}

}  // namespace graduation
