#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace rdp {

struct Monomial {
  int x_power = 0;
  int y_power = 0;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Monomial basis with per-axis degree caps.
///
/// 1D: terms x^0 .. x^K in ascending order.
/// 2D: terms x^k y^j for 0 <= k <= K, 0 <= j <= J in lexicographic (k, j)
/// order, i.e. 1, y, y^2, .., x, xy, .. . The constant term is always present.
class BasisSpec {
 public:
  static BasisSpec univariate(int degree);
  static BasisSpec bivariate(int degree_x, int degree_y);

  int input_dim() const { return input_dim_; }
  int degree_x() const { return degree_x_; }
  int degree_y() const { return degree_y_; }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Monomial>& terms() const { return terms_; }

  // Complexity used by the penalty: the largest per-axis degree cap.
  int complexity() const { return degree_x_ > degree_y_ ? degree_x_ : degree_y_; }

  std::string describe() const;

  friend bool operator==(const BasisSpec& a, const BasisSpec& b) {
    return a.input_dim_ == b.input_dim_ && a.degree_x_ == b.degree_x_ && a.degree_y_ == b.degree_y_;
  }

 private:
  BasisSpec(int input_dim, int degree_x, int degree_y);

  int input_dim_;
  int degree_x_;
  int degree_y_;
  std::vector<Monomial> terms_;
};

// Row i, column t holds monomial t evaluated at point i.
Eigen::MatrixXd build_design_matrix(const Eigen::MatrixXd& points, const BasisSpec& basis);

}  // namespace rdp
