#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace graduation {

// Raised when the Gini index or Lorenz curve has no meaning (zero total income).
class undefined_gini_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Sample convention divides the pairwise sum by n(n-1); population by n^2.
enum class Convention { sample, population };

inline double to_convention(double sample_gini, std::size_t n, Convention convention) {
  if (convention == Convention::sample) return sample_gini;
  return sample_gini * static_cast<double>(n - 1) / static_cast<double>(n);
}

// Nonnegative income microdata, n >= 2.
class IncomeSample {
 public:
  explicit IncomeSample(std::vector<double> values) : values_(std::move(values)) {
    if (values_.size() < 2) throw std::invalid_argument("income sample needs at least 2 values");
    for (double v : values_) {
      if (!std::isfinite(v) || v < 0.0) {
        throw std::invalid_argument("income values must be finite and nonnegative");
      }
    }
  }

  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double total() const;
  double mean() const { return total() / static_cast<double>(values_.size()); }

 private:
  std::vector<double> values_;
};

namespace detail {

// Neumaier-compensated accumulator for floating types; plain sum otherwise.
template <class T>
class Accumulator {
 public:
  void add(const T& x) {
    if constexpr (std::is_floating_point_v<T>) {
      const T t = sum_ + x;
      if (std::abs(sum_) >= std::abs(x)) {
        comp_ += (sum_ - t) + x;
      } else {
        comp_ += (x - t) + sum_;
      }
      sum_ = t;
    } else {
      sum_ += x;
    }
  }

  T value() const {
    if constexpr (std::is_floating_point_v<T>) {
      return sum_ + comp_;
    } else {
      return sum_;
    }
  }

 private:
  T sum_{};
  T comp_{};
};

template <class T>
T abs_diff(const T& a, const T& b) {
  return a < b ? T(b - a) : T(a - b);
}

template <class T>
bool is_zero(const T& x) {
  return x == T(0);
}

}  // namespace detail

inline double IncomeSample::total() const {
  detail::Accumulator<double> acc;
  for (double v : values_) acc.add(v);
  return acc.value();
}

// Gini mean difference, (1/(n(n-1))) sum_{i != j} |x_i - x_j|, by the literal
// quadratic loop. Each unordered pair is visited once (i < j, row-major) and
// counted twice, so the summation order is fixed.
template <class T>
T mean_difference_pairwise(std::span<const T> values) {
  const std::size_t n = values.size();
  if (n < 2) throw std::invalid_argument("mean difference needs at least 2 values");
  detail::Accumulator<T> acc;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) acc.add(detail::abs_diff(values[i], values[j]));
  }
  const T pairs = T(static_cast<std::int64_t>(n)) * T(static_cast<std::int64_t>(n - 1));
  return T(2) * acc.value() / pairs;
}

inline double mean_difference_pairwise(const IncomeSample& sample) {
  return mean_difference_pairwise<double>(sample.values());
}

// Delta / (2 mu) from the pairwise mean difference. Reference path for the
// sorted estimator; exact when T is a rational type.
template <class T>
T gini_pairwise(std::span<const T> values) {
  detail::Accumulator<T> total;
  for (const auto& v : values) total.add(v);
  if (detail::is_zero(total.value())) throw undefined_gini_error("Gini undefined: total income is zero");
  const T mean = total.value() / T(static_cast<std::int64_t>(values.size()));
  return mean_difference_pairwise(values) / (T(2) * mean);
}

// Order-statistic form over values already in ascending order:
//   G = (2 sum i x_(i) - (n+1) sum x_(i)) / ((n-1) sum x_(i)).
template <class T>
T gini_presorted(std::span<const T> ascending) {
  const std::size_t n = ascending.size();
  if (n < 2) throw std::invalid_argument("Gini needs at least 2 values");
  detail::Accumulator<T> weighted;
  detail::Accumulator<T> total;
  for (std::size_t i = 0; i < n; ++i) {
    weighted.add(T(static_cast<std::int64_t>(i + 1)) * ascending[i]);
    total.add(ascending[i]);
  }
  const T sum = total.value();
  if (detail::is_zero(sum)) throw undefined_gini_error("Gini undefined: total income is zero");
  const T n1 = T(static_cast<std::int64_t>(n + 1));
  const T nm1 = T(static_cast<std::int64_t>(n - 1));
  return (T(2) * weighted.value() - n1 * sum) / (nm1 * sum);
}

// O(n log n): stable sort, then the order-statistic form.
template <class T>
T gini_sorted(std::span<const T> values) {
  std::vector<T> sorted(values.begin(), values.end());
  std::stable_sort(sorted.begin(), sorted.end());
  return gini_presorted<T>(sorted);
}

inline double gini_sorted(const IncomeSample& sample, Convention convention = Convention::sample) {
  return to_convention(gini_sorted<double>(sample.values()), sample.size(), convention);
}

struct LorenzPoint {
  double population_share;
  double income_share;

  friend bool operator==(const LorenzPoint&, const LorenzPoint&) = default;
};

// Polyline from (0,0) to (1,1); nondecreasing, convex, on or below the diagonal.
class LorenzCurve {
 public:
  static constexpr double tolerance = 1e-12;

  explicit LorenzCurve(std::vector<LorenzPoint> points) : points_(std::move(points)) {
    if (auto err = check(points_); !err.empty()) throw std::invalid_argument("invalid Lorenz curve: " + err);
  }

  std::span<const LorenzPoint> points() const { return points_; }
  std::size_t size() const { return points_.size(); }

  // Empty string when valid, otherwise the first violated invariant.
  static std::string check(std::span<const LorenzPoint> pts) {
    if (pts.size() < 2) return "fewer than 2 vertices";
    const auto& first = pts.front();
    const auto& last = pts.back();
    if (first.population_share != 0.0 || first.income_share != 0.0) return "does not start at (0,0)";
    if (std::abs(last.population_share - 1.0) > tolerance || std::abs(last.income_share - 1.0) > tolerance) {
      return "does not end at (1,1)";
    }
    // Convexity: consecutive segment slopes nondecreasing, compared by cross
    // product with a relative tolerance so tied incomes do not trip rounding.
    double prev_dp = 0.0;
    double prev_dl = 0.0;
    for (std::size_t k = 1; k < pts.size(); ++k) {
      const double dp = pts[k].population_share - pts[k - 1].population_share;
      const double dl = pts[k].income_share - pts[k - 1].income_share;
      if (dp < 0.0 || dl < -tolerance) return "coordinates decrease";
      if (pts[k].income_share > pts[k].population_share + tolerance) return "above the diagonal";
      if (dp > 0.0) {
        const double lhs = dl * prev_dp;
        const double rhs = prev_dl * dp;
        if (lhs < rhs - 1e-9 * std::max(std::abs(lhs), std::abs(rhs)) - tolerance * dp * prev_dp) return "not convex";
        prev_dp = dp;
        prev_dl = dl;
      }
    }
    return {};
  }

 private:
  std::vector<LorenzPoint> points_;
};

// Vertices (k/n, cumulative share of the k smallest incomes), k = 0..n.
inline LorenzCurve lorenz_curve(const IncomeSample& sample) {
  std::vector<double> sorted(sample.values().begin(), sample.values().end());
  std::stable_sort(sorted.begin(), sorted.end());
  const double total = sample.total();
  if (total == 0.0) throw undefined_gini_error("Lorenz curve undefined: total income is zero");
  const std::size_t n = sorted.size();
  std::vector<LorenzPoint> points;
  points.reserve(n + 1);
  points.push_back({0.0, 0.0});
  detail::Accumulator<double> running;
  for (std::size_t k = 1; k <= n; ++k) {
    running.add(sorted[k - 1]);
    const double p = k == n ? 1.0 : static_cast<double>(k) / static_cast<double>(n);
    const double l = k == n ? 1.0 : std::min(running.value() / total, p);
    points.push_back({p, l});
  }
  return LorenzCurve(std::move(points));
}

// 1 - sum (p_k - p_{k-1})(L_k + L_{k-1}): twice the area between diagonal and curve.
inline double lorenz_area_gini(const LorenzCurve& curve) {
  const auto pts = curve.points();
  detail::Accumulator<double> acc;
  for (std::size_t k = 1; k < pts.size(); ++k) {
    acc.add((pts[k].population_share - pts[k - 1].population_share) *
            (pts[k].income_share + pts[k - 1].income_share));
  }
  return 1.0 - acc.value();
}

// Lorenz-area Gini rescaled by n/(n-1) to the sample convention.
inline double gini_from_lorenz(const LorenzCurve& curve, std::size_t n) {
  if (n < 2) throw std::invalid_argument("gini_from_lorenz needs n >= 2");
  return lorenz_area_gini(curve) * static_cast<double>(n) / static_cast<double>(n - 1);
}

// Share of total income held by units with income <= x.
inline double dissipation_point(const IncomeSample& sample, double x) {
  const double total = sample.total();
  if (total == 0.0) throw undefined_gini_error("dissipation curve undefined: total income is zero");
  detail::Accumulator<double> below;
  for (double v : sample.values()) {
    if (v <= x) below.add(v);
  }
  return below.value() / total;
}

struct GroupedBin {
  std::int64_t count;
  double mean;
};

// Contiguous rank groups: bin means ascending, total count >= 2.
class GroupedData {
 public:
  explicit GroupedData(std::vector<GroupedBin> bins) : bins_(std::move(bins)) {
    std::int64_t total = 0;
    for (std::size_t k = 0; k < bins_.size(); ++k) {
      const auto& b = bins_[k];
      if (b.count < 0) throw std::invalid_argument("bin count must be nonnegative");
      if (!std::isfinite(b.mean) || b.mean < 0.0) throw std::invalid_argument("bin mean must be finite and nonnegative");
      if (k > 0 && b.mean < bins_[k - 1].mean) throw std::invalid_argument("bin means must be ascending");
      total += b.count;
    }
    if (total < 2) throw std::invalid_argument("grouped data needs a total count of at least 2");
    total_count_ = total;
  }

  std::span<const GroupedBin> bins() const { return bins_; }
  std::int64_t total_count() const { return total_count_; }

 private:
  std::vector<GroupedBin> bins_;
  std::int64_t total_count_ = 0;
};

struct GiniBounds {
  double lower;
  double upper;
};

namespace detail {

// A mass point: population weight and the income it carries. A zero-weight
// atom at +infinity models income pushed arbitrarily far into the top tail.
struct MassPoint {
  double value;
  double weight;
  double income;
};

// Sample-convention Gini of a weighted point distribution via its Lorenz polygon.
inline double weighted_gini(std::vector<MassPoint> pts, double population) {
  std::stable_sort(pts.begin(), pts.end(), [](const MassPoint& a, const MassPoint& b) { return a.value < b.value; });
  Accumulator<double> total;
  for (const auto& p : pts) total.add(p.income);
  const double income = total.value();
  if (income <= 0.0) throw undefined_gini_error("Gini undefined: total income is zero");
  Accumulator<double> area;
  Accumulator<double> cum_weight;
  Accumulator<double> cum_income;
  double prev_p = 0.0;
  double prev_l = 0.0;
  for (const auto& pt : pts) {
    cum_weight.add(pt.weight);
    cum_income.add(pt.income);
    const double p = cum_weight.value() / population;
    const double l = cum_income.value() / income;
    area.add((p - prev_p) * (l + prev_l));
    prev_p = p;
    prev_l = l;
  }
  return (1.0 - area.value()) * population / (population - 1.0);
}

}  // namespace detail

// Bounds on the microdata Gini (sample convention) from bin counts and means.
//
// lower: every unit in a bin holds the bin mean (Lorenz polygon through the
// bin vertices).
// upper: each bin with more than one unit is replaced by the mean-preserving
// two-point spread over its feasible support. For rank-contiguous bins that
// support is [previous bin mean, next bin mean]; the first bin is floored at 0
// and the last bin is unbounded above, which puts a zero-population atom at
// +infinity. Capped at 1.
//
// A single nonempty bin carries no between-bin information and yields (0, 0).
inline GiniBounds grouped_gini_bounds(const GroupedData& data) {
  std::vector<GroupedBin> bins;
  for (const auto& b : data.bins()) {
    if (b.count > 0) bins.push_back(b);
  }
  if (bins.size() < 2) return {0.0, 0.0};

  const double population = static_cast<double>(data.total_count());
  std::vector<detail::MassPoint> even;
  std::vector<detail::MassPoint> spread;
  const std::size_t k_last = bins.size() - 1;
  for (std::size_t k = 0; k < bins.size(); ++k) {
    const double c = static_cast<double>(bins[k].count);
    const double mu = bins[k].mean;
    even.push_back({mu, c, c * mu});
    if (bins[k].count == 1) {
      spread.push_back({mu, c, c * mu});
      continue;
    }
    const double lo = k == 0 ? 0.0 : bins[k - 1].mean;
    if (k == k_last) {
      spread.push_back({lo, c, c * lo});
      spread.push_back({std::numeric_limits<double>::infinity(), 0.0, c * (mu - lo)});
      continue;
    }
    const double hi = bins[k + 1].mean;
    if (hi <= lo) {
      spread.push_back({mu, c, c * mu});
      continue;
    }
    const double w_hi = c * (mu - lo) / (hi - lo);
    spread.push_back({lo, c - w_hi, (c - w_hi) * lo});
    spread.push_back({hi, w_hi, w_hi * hi});
  }
  const double lower = detail::weighted_gini(std::move(even), population);
  const double upper = std::min(1.0, detail::weighted_gini(std::move(spread), population));
  return {lower, std::max(lower, upper)};
}

}  // namespace graduation
