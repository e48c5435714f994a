#include "rdp/sample_set.hpp"

#include <cmath>
#include <string>

#include "rdp/error.hpp"

namespace rdp {

SampleSet::SampleSet(Eigen::MatrixXd points, Eigen::MatrixXd values)
    : points_(std::move(points)), values_(std::move(values)) {
  if (points_.rows() < 1) throw DataError("sample set needs at least one sample");
  if (points_.rows() != values_.rows()) {
    throw DataError("sample set has " + std::to_string(points_.rows()) + " points but " +
                    std::to_string(values_.rows()) + " values");
  }
  if (points_.cols() != 1 && points_.cols() != 2) {
    throw DataError("input dimension must be 1 or 2, got " + std::to_string(points_.cols()));
  }
  if (values_.cols() < 1) throw DataError("output dimension must be at least 1");
  if (!points_.allFinite() || !values_.allFinite()) {
    throw DataError("sample set contains non-finite values");
  }
  if (points_.cols() == 1) {
    for (Eigen::Index i = 1; i < points_.rows(); ++i) {
      if (!(points_(i - 1, 0) < points_(i, 0))) {
        throw DataError("1D points must be strictly ascending (row " + std::to_string(i) + ")");
      }
    }
  }
}

SampleSet::SampleSet(Eigen::MatrixXd points, Eigen::MatrixXd values, Unchecked)
    : points_(std::move(points)), values_(std::move(values)) {}

SampleSet SampleSet::from_1d(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw DataError("x and y lengths differ");
  Eigen::MatrixXd points(static_cast<Eigen::Index>(x.size()), 1);
  Eigen::MatrixXd values(static_cast<Eigen::Index>(y.size()), 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    points(static_cast<Eigen::Index>(i), 0) = x[i];
    values(static_cast<Eigen::Index>(i), 0) = y[i];
  }
  return SampleSet(std::move(points), std::move(values));
}

SampleSet SampleSet::subset(std::span<const std::size_t> indices) const {
  const auto n = static_cast<Eigen::Index>(indices.size());
  Eigen::MatrixXd points(n, points_.cols());
  Eigen::MatrixXd values(n, values_.cols());
  for (Eigen::Index r = 0; r < n; ++r) {
    const auto src = static_cast<Eigen::Index>(indices[static_cast<std::size_t>(r)]);
    points.row(r) = points_.row(src);
    values.row(r) = values_.row(src);
  }
  return SampleSet(std::move(points), std::move(values), Unchecked{});
}

}  // namespace rdp
