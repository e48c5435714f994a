#include "rdp/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rdp/error.hpp"
#include "rdp/csv.hpp"

namespace rdp {

int hyperplane_dim(const Hyperplane& h) { return std::holds_alternative<Threshold1D>(h) ? 1 : 2; }

std::string describe(const Hyperplane& h) {
  if (const auto* t = std::get_if<Threshold1D>(&h)) return "threshold x=" + format_double(t->t);
  const auto& l = std::get<Line2D>(h);
  return "line (" + format_double(l.a.x) + "," + format_double(l.a.y) + ")-(" +
         format_double(l.b.x) + "," + format_double(l.b.y) + ")";
}

int orient(Point2 a, Point2 b, Point2 c) {
  if (a == b) throw DataError("orientation needs two distinct line points");
  const double det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  const double s = std::max({std::abs(b.x - a.x), std::abs(b.y - a.y), std::abs(c.x - a.x),
                             std::abs(c.y - a.y), std::abs(c.x - b.x), std::abs(c.y - b.y)});
  if (std::abs(det) <= 1e-12 * s * s) return 0;
  return det > 0.0 ? 1 : -1;
}

void GridSpec::validate() const {
  if (!(x_min < x_max) || !(y_min < y_max) || !std::isfinite(x_min) || !std::isfinite(x_max) ||
      !std::isfinite(y_min) || !std::isfinite(y_max)) {
    throw ConfigError("grid extents must be finite with min < max");
  }
  if (nx < 2 || ny < 2) throw ConfigError("grid needs at least 2 points per axis");
}

double GridSpec::x_at(int i) const {
  if (i == nx - 1) return x_max;
  return x_min + (x_max - x_min) * static_cast<double>(i) / static_cast<double>(nx - 1);
}

double GridSpec::y_at(int j) const {
  if (j == ny - 1) return y_max;
  return y_min + (y_max - y_min) * static_cast<double>(j) / static_cast<double>(ny - 1);
}

namespace {

std::vector<double> distinct_sorted(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void check_uniform(const std::vector<double>& v, const char* axis) {
  const double step = (v.back() - v.front()) / static_cast<double>(v.size() - 1);
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (std::abs((v[i] - v[i - 1]) - step) > 1e-6 * step) {
      throw DataError(std::string("2D data is not on a uniform grid along ") + axis);
    }
  }
}

}  // namespace

GridSpec GridSpec::infer(const SampleSet& data) {
  if (data.input_dim() != 2) throw DataError("grid inference needs 2D data");
  std::vector<double> xs(data.size()), ys(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    xs[i] = data.points()(static_cast<Eigen::Index>(i), 0);
    ys[i] = data.points()(static_cast<Eigen::Index>(i), 1);
  }
  xs = distinct_sorted(std::move(xs));
  ys = distinct_sorted(std::move(ys));
  if (xs.size() < 2 || ys.size() < 2) throw DataError("2D data spans fewer than 2 values per axis");
  check_uniform(xs, "x");
  check_uniform(ys, "y");
  GridSpec g{xs.front(), xs.back(), ys.front(), ys.back(), static_cast<int>(xs.size()),
             static_cast<int>(ys.size())};
  return g;
}

bool lies_on_edge(const GridSpec& grid, Point2 p, Edge edge) {
  const double tx = 1e-9 * (grid.x_max - grid.x_min);
  const double ty = 1e-9 * (grid.y_max - grid.y_min);
  const bool in_x = p.x >= grid.x_min - tx && p.x <= grid.x_max + tx;
  const bool in_y = p.y >= grid.y_min - ty && p.y <= grid.y_max + ty;
  switch (edge) {
    case Edge::kBottom: return in_x && std::abs(p.y - grid.y_min) <= ty;
    case Edge::kTop: return in_x && std::abs(p.y - grid.y_max) <= ty;
    case Edge::kLeft: return in_y && std::abs(p.x - grid.x_min) <= tx;
    case Edge::kRight: return in_y && std::abs(p.x - grid.x_max) <= tx;
  }
  return false;
}

PerimeterIndex perimeter_points(const GridSpec& grid) {
  grid.validate();
  PerimeterIndex out;
  out.reserve(static_cast<std::size_t>(2 * grid.nx + 2 * grid.ny - 4));
  for (int i = 0; i < grid.nx; ++i) out.push_back({{grid.x_at(i), grid.y_min}, Edge::kBottom});
  for (int j = 1; j < grid.ny - 1; ++j) out.push_back({{grid.x_max, grid.y_at(j)}, Edge::kRight});
  for (int i = grid.nx - 1; i >= 0; --i) out.push_back({{grid.x_at(i), grid.y_max}, Edge::kTop});
  for (int j = grid.ny - 2; j >= 1; --j) out.push_back({{grid.x_min, grid.y_at(j)}, Edge::kLeft});
  return out;
}

std::vector<CandidateLine> candidate_lines_2d(const PerimeterIndex& perimeter) {
  std::vector<CandidateLine> out;
  for (std::size_t i = 0; i < perimeter.size(); ++i) {
    for (std::size_t j = i + 1; j < perimeter.size(); ++j) {
      if (perimeter[i].edge == perimeter[j].edge) continue;
      out.push_back({i, j, Line2D{perimeter[i].point, perimeter[j].point}});
    }
  }
  return out;
}

std::vector<Threshold1D> candidates_1d(const SampleSet& data, std::size_t min_points) {
  if (data.input_dim() != 1) throw DataError("1D candidates need 1D data");
  std::vector<Threshold1D> out;
  const std::size_t n = data.size();
  // Points are strictly ascending, so threshold x[i] leaves i samples on the left.
  for (std::size_t i = std::max<std::size_t>(min_points, 1); i + min_points <= n && i < n; ++i) {
    out.push_back({data.points()(static_cast<Eigen::Index>(i), 0)});
  }
  return out;
}

SplitIndices partition_indices(const SampleSet& data, const Hyperplane& h) {
  if (hyperplane_dim(h) != data.input_dim()) {
    throw DataError("hyperplane dimension does not match data dimension");
  }
  SplitIndices s;
  const auto& p = data.points();
  if (const auto* t = std::get_if<Threshold1D>(&h)) {
    for (std::size_t i = 0; i < data.size(); ++i) {
      (p(static_cast<Eigen::Index>(i), 0) < t->t ? s.first : s.second).push_back(i);
    }
    return s;
  }
  const auto& line = std::get<Line2D>(h);
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto r = static_cast<Eigen::Index>(i);
    (orient(line.a, line.b, {p(r, 0), p(r, 1)}) >= 0 ? s.first : s.second).push_back(i);
  }
  return s;
}

std::pair<SampleSet, SampleSet> split(const SampleSet& data, const Hyperplane& h) {
  const auto s = partition_indices(data, h);
  return {data.subset(s.first), data.subset(s.second)};
}

}  // namespace rdp
