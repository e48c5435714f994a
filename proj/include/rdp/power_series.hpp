#pragma once

#include <span>

#include <Eigen/Dense>

#include "rdp/basis.hpp"
#include "rdp/sample_set.hpp"

namespace rdp {

/// Fitted power series: coefficient matrix of shape (term_count x outputs).
class PowerSeriesModel {
 public:
  PowerSeriesModel(BasisSpec basis, Eigen::MatrixXd coefficients);

  const BasisSpec& basis() const { return basis_; }
  const Eigen::MatrixXd& coefficients() const { return coefficients_; }
  int output_dim() const { return static_cast<int>(coefficients_.cols()); }

  // Predictions for every row of `points`, shape (n x outputs).
  Eigen::MatrixXd predict(const Eigen::MatrixXd& points) const;

 private:
  BasisSpec basis_;
  Eigen::MatrixXd coefficients_;
};

/// Least-squares fit of every output column over the basis, using a
/// column-pivoted Householder QR of the design matrix.
///
/// Throws RankDeficientError when there are fewer samples than terms or the
/// design matrix does not have full column rank.
PowerSeriesModel fit(const SampleSet& data, const BasisSpec& basis);

Eigen::VectorXd evaluate(const PowerSeriesModel& model, std::span<const double> point);

}  // namespace rdp
