#include "rdp/power_series.hpp"

#include <string>

#include "rdp/error.hpp"

namespace rdp {

PowerSeriesModel::PowerSeriesModel(BasisSpec basis, Eigen::MatrixXd coefficients)
    : basis_(std::move(basis)), coefficients_(std::move(coefficients)) {
  if (coefficients_.rows() != static_cast<Eigen::Index>(basis_.term_count()) ||
      coefficients_.cols() < 1) {
    throw DataError("coefficient matrix shape does not match " + basis_.describe());
  }
  if (!coefficients_.allFinite()) throw NumericalError("non-finite coefficients");
}

Eigen::MatrixXd PowerSeriesModel::predict(const Eigen::MatrixXd& points) const {
  return build_design_matrix(points, basis_) * coefficients_;
}

PowerSeriesModel fit(const SampleSet& data, const BasisSpec& basis) {
  if (data.input_dim() != basis.input_dim()) {
    throw DataError("data dimension " + std::to_string(data.input_dim()) + " does not match " +
                    basis.describe());
  }
  const auto terms = basis.term_count();
  if (data.size() < terms) {
    throw RankDeficientError("underdetermined fit: " + std::to_string(data.size()) +
                             " samples for " + std::to_string(terms) + " terms (" +
                             basis.describe() + ")");
  }
  const Eigen::MatrixXd a = build_design_matrix(data.points(), basis);
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
  if (qr.rank() < static_cast<Eigen::Index>(terms)) {
    throw RankDeficientError("rank-deficient design matrix: rank " + std::to_string(qr.rank()) +
                             " < " + std::to_string(terms) + " terms (" + basis.describe() +
                             ", " + std::to_string(data.size()) + " samples)");
  }
  Eigen::MatrixXd coeffs = qr.solve(data.values());
  if (!coeffs.allFinite()) throw NumericalError("least squares produced non-finite coefficients");
  return PowerSeriesModel(basis, std::move(coeffs));
}

Eigen::VectorXd evaluate(const PowerSeriesModel& model, std::span<const double> point) {
  const int d = model.basis().input_dim();
  if (static_cast<int>(point.size()) != d) {
    throw DataError("point has dimension " + std::to_string(point.size()) + ", model expects " +
                    std::to_string(d));
  }
  Eigen::MatrixXd p(1, d);
  for (int i = 0; i < d; ++i) p(0, i) = point[static_cast<std::size_t>(i)];
  return model.predict(p).row(0).transpose();
}

}  // namespace rdp
