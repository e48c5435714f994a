#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rdp/sample_set.hpp"

namespace rdp {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point2&, const Point2&) = default;
};

// 1 = bottom, 2 = left, 3 = top, 4 = right.
enum class Edge : int { kBottom = 1, kLeft = 2, kTop = 3, kRight = 4 };

// Splits x < t (first side) from x >= t (second side).
struct Threshold1D {
  double t = 0.0;
  friend bool operator==(const Threshold1D&, const Threshold1D&) = default;
};

// Splits orient(a, b, c) >= 0 (first side) from orient(a, b, c) < 0 (second side).
struct Line2D {
  Point2 a;
  Point2 b;
  friend bool operator==(const Line2D&, const Line2D&) = default;
};

using Hyperplane = std::variant<Threshold1D, Line2D>;

int hyperplane_dim(const Hyperplane& h);
std::string describe(const Hyperplane& h);

/// Sign of det[[ax, ay, 1], [bx, by, 1], [cx, cy, 1]].
///
/// Values within 1e-12 * s^2 of zero are reported as collinear, where s is the
/// largest coordinate difference among the three points. Throws DataError if a == b.
int orient(Point2 a, Point2 b, Point2 c);

/// Uniform rectangular grid, nx * ny points.
struct GridSpec {
  double x_min = 0.0;
  double x_max = 1.0;
  double y_min = 0.0;
  double y_max = 1.0;
  int nx = 11;
  int ny = 11;

  void validate() const;
  double x_at(int i) const;
  double y_at(int j) const;

  // Smallest grid covering a 2D sample set; throws DataError when the
  // distinct coordinates are not uniformly spaced.
  static GridSpec infer(const SampleSet& data);

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

// True when p lies (within tolerance) on the geometric edge; corners lie on two edges.
bool lies_on_edge(const GridSpec& grid, Point2 p, Edge edge);

struct PerimeterPoint {
  Point2 point;
  Edge edge;  // owning edge; corners belong to bottom/top
};

using PerimeterIndex = std::vector<PerimeterPoint>;

/// Boundary grid points: bottom left-to-right, right bottom-to-top, top
/// right-to-left, left top-to-bottom. Count is 2*nx + 2*ny - 4.
PerimeterIndex perimeter_points(const GridSpec& grid);

struct CandidateLine {
  std::size_t first = 0;
  std::size_t second = 0;
  Line2D line;
};

// All pairs (i < j) whose owning edges differ, ordered by (i, j).
std::vector<CandidateLine> candidate_lines_2d(const PerimeterIndex& perimeter);

// Thresholds at distinct x values leaving >= min_points on each side, ascending.
std::vector<Threshold1D> candidates_1d(const SampleSet& data, std::size_t min_points);

struct SplitIndices {
  std::vector<std::size_t> first;
  std::vector<std::size_t> second;
};

SplitIndices partition_indices(const SampleSet& data, const Hyperplane& h);
std::pair<SampleSet, SampleSet> split(const SampleSet& data, const Hyperplane& h);

}  // namespace rdp
