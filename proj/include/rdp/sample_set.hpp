#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace rdp {

/// Immutable collection of input points (one row per sample, 1 or 2 columns)
/// paired with output vectors (one row per sample, >= 1 columns).
///
/// One-dimensional sets are always sorted ascending with strictly unique x.
/// A set produced by `subset` (and therefore by a split) may be empty; the
/// public constructors require at least one sample.
class SampleSet {
 public:
  SampleSet(Eigen::MatrixXd points, Eigen::MatrixXd values);

  static SampleSet from_1d(std::span<const double> x, std::span<const double> y);

  std::size_t size() const { return static_cast<std::size_t>(points_.rows()); }
  bool empty() const { return size() == 0; }
  int input_dim() const { return static_cast<int>(points_.cols()); }
  int output_dim() const { return static_cast<int>(values_.cols()); }

  const Eigen::MatrixXd& points() const { return points_; }
  const Eigen::MatrixXd& values() const { return values_; }

  // Rows selected by `indices`, in the given order.
  SampleSet subset(std::span<const std::size_t> indices) const;

  // Sum of squares over every output component.
  double value_energy() const { return values_.squaredNorm(); }

  friend bool operator==(const SampleSet& a, const SampleSet& b) {
    return a.points_ == b.points_ && a.values_ == b.values_;
  }

 private:
  struct Unchecked {};
  SampleSet(Eigen::MatrixXd points, Eigen::MatrixXd values, Unchecked);

  Eigen::MatrixXd points_;
  Eigen::MatrixXd values_;
};

}  // namespace rdp
