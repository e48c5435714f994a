#include "rdp/basis.hpp"

#include <string>

#include "rdp/error.hpp"

namespace rdp {

BasisSpec::BasisSpec(int input_dim, int degree_x, int degree_y)
    : input_dim_(input_dim), degree_x_(degree_x), degree_y_(degree_y) {
  if (degree_x < 0 || degree_y < 0) throw ConfigError("basis degrees must be non-negative");
  for (int k = 0; k <= degree_x; ++k) {
    for (int j = 0; j <= degree_y; ++j) terms_.push_back({k, j});
  }
}

BasisSpec BasisSpec::univariate(int degree) { return BasisSpec(1, degree, 0); }

BasisSpec BasisSpec::bivariate(int degree_x, int degree_y) {
  return BasisSpec(2, degree_x, degree_y);
}

std::string BasisSpec::describe() const {
  if (input_dim_ == 1) return "1D basis K=" + std::to_string(degree_x_);
  return "2D basis K=" + std::to_string(degree_x_) + " J=" + std::to_string(degree_y_);
}

namespace {

double ipow(double base, int exponent) {
  double r = 1.0;
  for (int e = 0; e < exponent; ++e) r *= base;
  return r;
}

}  // namespace

Eigen::MatrixXd build_design_matrix(const Eigen::MatrixXd& points, const BasisSpec& basis) {
  if (points.cols() != basis.input_dim()) {
    throw DataError("points have dimension " + std::to_string(points.cols()) + ", " +
                    basis.describe() + " expects " + std::to_string(basis.input_dim()));
  }
  const auto& terms = basis.terms();
  Eigen::MatrixXd a(points.rows(), static_cast<Eigen::Index>(terms.size()));
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    const double x = points(i, 0);
    const double y = basis.input_dim() == 2 ? points(i, 1) : 0.0;
    for (std::size_t t = 0; t < terms.size(); ++t) {
      a(i, static_cast<Eigen::Index>(t)) = ipow(x, terms[t].x_power) * ipow(y, terms[t].y_power);
    }
  }
  return a;
}

}  // namespace rdp
