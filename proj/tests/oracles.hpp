#pragma once

// Test-only reference implementations. Nothing here calls into the library's
// fitting or enumeration code.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rdp::testing {

using Matrix = std::vector<std::vector<long double>>;

// Solves the normal equations (A^T A) c = A^T y by Gaussian elimination with
// partial pivoting in extended precision. `rows` are design-matrix rows.
inline std::vector<double> normal_equations_solve(const std::vector<std::vector<double>>& rows,
                                                  const std::vector<double>& y) {
  const std::size_t t = rows.front().size();
  Matrix m(t, std::vector<long double>(t + 1, 0.0L));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t j = 0; j < t; ++j) m[i][j] += static_cast<long double>(rows[r][i]) * rows[r][j];
      m[i][t] += static_cast<long double>(rows[r][i]) * y[r];
    }
  }
  for (std::size_t col = 0; col < t; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < t; ++r) {
      if (std::fabs(m[r][col]) > std::fabs(m[piv][col])) piv = r;
    }
    if (m[piv][col] == 0.0L) throw std::runtime_error("singular normal equations");
    std::swap(m[piv], m[col]);
    for (std::size_t r = 0; r < t; ++r) {
      if (r == col) continue;
      const long double f = m[r][col] / m[col][col];
      for (std::size_t c = col; c <= t; ++c) m[r][c] -= f * m[col][c];
    }
  }
  std::vector<double> out(t);
  for (std::size_t i = 0; i < t; ++i) out[i] = static_cast<double>(m[i][t] / m[i][i]);
  return out;
}

// Monomial row written out by hand: 1D ascending powers, 2D (k, j)-lex order.
inline std::vector<double> monomial_row_1d(double x, int degree) {
  std::vector<double> row;
  for (int k = 0; k <= degree; ++k) row.push_back(std::pow(x, k));
  return row;
}

inline std::vector<double> monomial_row_2d(double x, double y, int kx, int ky) {
  std::vector<double> row;
  for (int k = 0; k <= kx; ++k) {
    for (int j = 0; j <= ky; ++j) row.push_back(std::pow(x, k) * std::pow(y, j));
  }
  return row;
}

struct PerimeterCounts {
  std::size_t points = 0;
  std::size_t lines = 0;
};

// Walks every grid node, keeps the boundary ones, tags them (corners go to
// bottom/top) and counts cross-edge pairs.
inline PerimeterCounts brute_force_perimeter(int nx, int ny) {
  std::vector<int> edges;
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      int edge = 0;
      if (j == 0) edge = 1;
      else if (j == ny - 1) edge = 3;
      else if (i == 0) edge = 2;
      else if (i == nx - 1) edge = 4;
      if (edge) edges.push_back(edge);
    }
  }
  PerimeterCounts c;
  c.points = edges.size();
  for (std::size_t a = 0; a < edges.size(); ++a) {
    for (std::size_t b = a + 1; b < edges.size(); ++b) {
      if (edges[a] != edges[b]) ++c.lines;
    }
  }
  return c;
}

// Determinant by cofactor expansion of the full 3x3 matrix with a ones column.
inline double orientation_det(double ax, double ay, double bx, double by, double cx, double cy) {
  return ax * (by - cy) - ay * (bx - cx) + (bx * cy - by * cx);
}

}  // namespace rdp::testing
