#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "rdp/error.hpp"
#include "rdp/geometry.hpp"
#include "rdp/synth.hpp"

using namespace rdp;

namespace {

SampleSet grid_data(const GridSpec& g) {
  Eigen::MatrixXd p(g.nx * g.ny, 2);
  Eigen::Index r = 0;
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i, ++r) p.row(r) << g.x_at(i), g.y_at(j);
  }
  return SampleSet(p, Eigen::MatrixXd::Zero(r, 1));
}

SampleSet line_1d(int n, double step) {
  std::vector<double> x, y;
  for (int i = 0; i < n; ++i) {
    x.push_back(i * step);
    y.push_back(0.0);
  }
  return SampleSet::from_1d(x, y);
}

}  // namespace

TEST_CASE("orientation signs") {
  CHECK(orient({0, 0}, {1, 0}, {0, 1}) == 1);
  CHECK(orient({0, 0}, {1, 0}, {0, -1}) == -1);
  CHECK(orient({0, 0}, {1, 0}, {0.5, 0}) == 0);
  // Collinear grid points whose floating coordinates are not exact.
  CHECK(orient({0.0, 0.1 * 3}, {1.0, 0.7}, {0.5, 0.5}) == 0);
  CHECK_THROWS_AS(orient({1, 1}, {1, 1}, {0, 0}), DataError);
}

TEST_CASE("1D candidate thresholds") {
  auto ts = candidates_1d(line_1d(5, 1.0), 2);
  REQUIRE(ts.size() == 2);
  CHECK(ts[0].t == 2.0);
  CHECK(ts[1].t == 3.0);

  ts = candidates_1d(line_1d(2, 1.0), 1);
  REQUIRE(ts.size() == 1);
  CHECK(ts[0].t == 1.0);

  CHECK(candidates_1d(gen_two_domain(0.01), 3).size() == 1996);
  CHECK(candidates_1d(line_1d(5, 1.0), 3).empty());
}

TEST_CASE("perimeter points") {
  CHECK(perimeter_points(unit_grid()).size() == 40);
  CHECK(perimeter_points({0, 1, 0, 1, 3, 3}).size() == 8);

  const auto corners = perimeter_points({0, 1, 0, 1, 2, 2});
  REQUIRE(corners.size() == 4);
  CHECK(corners[0].point == Point2{0, 0});
  CHECK(corners[0].edge == Edge::kBottom);
  CHECK(corners[1].point == Point2{1, 0});
  CHECK(corners[2].point == Point2{1, 1});
  CHECK(corners[2].edge == Edge::kTop);
  CHECK(corners[3].point == Point2{0, 1});

  // Walk order: bottom L->R, right B->T, top R->L, left T->B.
  const auto p = perimeter_points(unit_grid());
  CHECK(p[10].point == Point2{1, 0});
  CHECK(p[11].point == Point2{1, 0.1});
  CHECK(p[11].edge == Edge::kRight);
  CHECK(p[20].point == Point2{1, 1});
  CHECK(p[30].point == Point2{0, 1});
  CHECK(p[31].point == Point2{0, 0.9});
  CHECK(p[31].edge == Edge::kLeft);
  CHECK(p[39].point == Point2{0, 0.1});

  CHECK_THROWS_AS(perimeter_points({0, 1, 0, 1, 1, 3}), ConfigError);
  CHECK_THROWS_AS(perimeter_points({1, 0, 0, 1, 3, 3}), ConfigError);
}

TEST_CASE("candidate lines") {
  CHECK(candidate_lines_2d(perimeter_points({0, 1, 0, 1, 3, 3})).size() == 22);
  CHECK(candidate_lines_2d(perimeter_points({0, 1, 0, 1, 2, 2})).size() == 4);
  const auto lines = candidate_lines_2d(perimeter_points(unit_grid()));
  CHECK(lines.size() == 598);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    CHECK(std::make_pair(lines[i - 1].first, lines[i - 1].second) <
          std::make_pair(lines[i].first, lines[i].second));
  }
}

TEST_CASE("split rules") {
  const auto data = gen_two_domain(1.0);  // x = 0..20
  const auto [left, right] = split(data, Threshold1D{10.0});
  CHECK(left.size() == 10);
  CHECK(right.size() == 11);
  CHECK(left.points().maxCoeff() == 9.0);
  CHECK(right.points().minCoeff() == 10.0);

  const auto [none, all] = split(data, Threshold1D{-1.0});
  CHECK(none.empty());
  CHECK(all == data);

  const auto grid = grid_data({0, 1, 0, 1, 3, 3});
  const auto [pos, neg] = split(grid, Line2D{{0, 0}, {1, 1}});
  CHECK(pos.size() == 6);  // diagonal joins the non-negative side
  CHECK(neg.size() == 3);

  CHECK_THROWS_AS(split(grid, Threshold1D{0.5}), DataError);
  CHECK_THROWS_AS(split(data, Line2D{{0, 0}, {1, 1}}), DataError);
}

TEST_CASE("grid inference") {
  const auto g = GridSpec::infer(grid_data({-1, 2, 0, 0.5, 7, 4}));
  CHECK(g.nx == 7);
  CHECK(g.ny == 4);
  CHECK(g.x_min == -1);
  CHECK(g.y_max == 0.5);

  Eigen::MatrixXd p(4, 2);
  p << 0, 0, 1, 0, 3, 0, 0, 1;
  CHECK_THROWS_AS(GridSpec::infer(SampleSet(p, Eigen::MatrixXd::Zero(4, 1))), DataError);
}

TEST_CASE("geometric edge membership counts corners on both edges") {
  const auto g = unit_grid();
  CHECK(lies_on_edge(g, {1, 0}, Edge::kBottom));
  CHECK(lies_on_edge(g, {1, 0}, Edge::kRight));
  CHECK_FALSE(lies_on_edge(g, {1, 0}, Edge::kTop));
  CHECK(lies_on_edge(g, {0.3, 1}, Edge::kTop));
  CHECK_FALSE(lies_on_edge(g, {0.3, 1}, Edge::kLeft));
}

// ---- properties -------------------------------------------------------------

TEST_CASE("property: orientation is antisymmetric and matches the cofactor determinant") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < 10000; ++i) {
    const Point2 a{u(rng), u(rng)}, b{u(rng), u(rng)}, c{u(rng), u(rng)};
    CHECK(orient(a, b, c) == -orient(b, a, c));
    const double det = testing::orientation_det(a.x, a.y, b.x, b.y, c.x, c.y);
    if (std::abs(det) > 1e-9) CHECK(orient(a, b, c) == (det > 0 ? 1 : -1));
  }
}

TEST_CASE("property: perimeter and line counts match brute force") {
  for (int nx = 2; nx <= 20; ++nx) {
    for (int ny = 2; ny <= 20; ++ny) {
      const auto per = perimeter_points({0, 1, 0, 2, nx, ny});
      const auto brute = testing::brute_force_perimeter(nx, ny);
      CHECK(per.size() == brute.points);
      CHECK(per.size() == static_cast<std::size_t>(2 * nx + 2 * ny - 4));
      CHECK(candidate_lines_2d(per).size() == brute.lines);
      std::set<std::pair<double, double>> unique;
      for (const auto& p : per) unique.insert({p.point.x, p.point.y});
      CHECK(unique.size() == per.size());
    }
  }
}

TEST_CASE("property: splits are exhaustive, disjoint and order preserving") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-0.2, 1.2);
  const auto grid = grid_data({0, 1, 0, 1, 9, 7});
  for (int trial = 0; trial < 200; ++trial) {
    Point2 a{u(rng), u(rng)}, b{u(rng), u(rng)};
    if (a == b) continue;
    const auto s = partition_indices(grid, Line2D{a, b});
    CHECK(s.first.size() + s.second.size() == grid.size());
    std::vector<int> seen(grid.size(), 0);
    for (auto i : s.first) ++seen[i];
    for (auto i : s.second) ++seen[i];
    for (int v : seen) CHECK(v == 1);
    CHECK(std::is_sorted(s.first.begin(), s.first.end()));
    CHECK(std::is_sorted(s.second.begin(), s.second.end()));
  }

  const auto data = gen_two_domain(0.1);
  for (double t : {-3.0, 0.0, 0.05, 7.3, 10.0, 19.95, 20.0, 25.0}) {
    const auto [l, r] = split(data, Threshold1D{t});
    CHECK(l.size() + r.size() == data.size());
    if (!l.empty()) CHECK(l.points().maxCoeff() < t);
    if (!r.empty()) CHECK(r.points().minCoeff() >= t);
  }
}

TEST_CASE("property: candidate enumeration is deterministic") {
  const auto a = candidate_lines_2d(perimeter_points(unit_grid()));
  const auto b = candidate_lines_2d(perimeter_points(unit_grid()));
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].first == b[i].first);
    CHECK(a[i].second == b[i].second);
    CHECK(a[i].line == b[i].line);
  }
}
