#include "rdp/synth.hpp"

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "rdp/error.hpp"

namespace rdp {

double two_domain_value(double x) {
  if (x < 10.0) return 50.0 * x * x - 100.0 * x + 250.0;
  return -50.0 * x - 500.0;
}

double three_domain_value(double x) {
  if (x < 10.0) return 50.0 * x * x - 100.0 * x + 250.0;
  if (x < 20.0) return -30.0 * x * x + 150.0 * x - 100.0;
  return -50.0 * x - 500.0;
}

double quad_2d_value(double x, double y) {
  if (x + y <= 1.05) return -15.0 * x * x + 3.0 * x + 4.0 * y * y;
  return -10.0 * x + 12.0 * y * y * y;
}

namespace {

// 0, step, 2*step, ... up to `length` inclusive. When step divides the length
// the samples are length * i / count, so the breaks land exactly on the grid.
std::vector<double> axis(double length, double step) {
  if (!(step > 0.0 && step <= 1.0)) throw ConfigError("step must lie in (0, 1]");
  const double ratio = length / step;
  const auto count = static_cast<long long>(std::floor(ratio + 1e-9));
  std::vector<double> xs(static_cast<std::size_t>(count) + 1);
  const bool divides = std::abs(ratio - std::round(ratio)) <= 1e-9 * ratio;
  for (long long i = 0; i <= count; ++i) {
    xs[static_cast<std::size_t>(i)] =
        divides ? length * static_cast<double>(i) / static_cast<double>(count)
                : static_cast<double>(i) * step;
  }
  return xs;
}

template <typename F>
SampleSet sample_1d(double length, double step, F f) {
  const auto xs = axis(length, step);
  std::vector<double> ys(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) ys[i] = f(xs[i]);
  return SampleSet::from_1d(xs, ys);
}

}  // namespace

SampleSet gen_two_domain(double step) { return sample_1d(20.0, step, two_domain_value); }

SampleSet gen_three_domain(double step) { return sample_1d(30.0, step, three_domain_value); }

GridSpec unit_grid() { return GridSpec{0.0, 1.0, 0.0, 1.0, 11, 11}; }

namespace {

// Row-major with x varying fastest.
template <typename F>
SampleSet sample_grid(const GridSpec& grid, int outputs, F f) {
  grid.validate();
  const Eigen::Index n = static_cast<Eigen::Index>(grid.nx) * grid.ny;
  Eigen::MatrixXd points(n, 2);
  Eigen::MatrixXd values(n, outputs);
  Eigen::Index r = 0;
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i, ++r) {
      const double x = grid.x_at(i);
      const double y = grid.y_at(j);
      points(r, 0) = x;
      points(r, 1) = y;
      f(x, y, values.row(r));
    }
  }
  return SampleSet(std::move(points), std::move(values));
}

}  // namespace

SampleSet gen_quad_2d(const GridSpec& grid) {
  return sample_grid(grid, 1, [](double x, double y, auto row) { row(0) = quad_2d_value(x, y); });
}

bool vector_2d_is_free_stream(const GridSpec& grid, double x, double y) {
  const double s = (x - grid.x_min) / (grid.x_max - grid.x_min);
  const double t = (y - grid.y_min) / (grid.y_max - grid.y_min);
  const double line_t =
      VectorFieldSpec::kLeftT + (VectorFieldSpec::kRightT - VectorFieldSpec::kLeftT) * s;
  return t - line_t > 1e-12;
}

SampleSet gen_vector_2d(const GridSpec& grid) {
  return sample_grid(grid, 2, [&grid](double x, double y, auto row) {
    if (vector_2d_is_free_stream(grid, x, y)) {
      row(0) = 1.0;
      row(1) = 0.0;
    } else {
      row(0) = 3.0 * y - 2.5 * y * y + 0.2 * x * y;
      row(1) = 0.05 * x * y * y - 0.02 * y;
    }
  });
}

SampleSet add_noise(const SampleSet& clean, const NoiseSpec& spec) {
  if (!std::isfinite(spec.snr_db)) throw ConfigError("SNR must be finite");
  const double signal = clean.value_energy();
  if (!(signal > 0.0)) throw DataError("cannot add noise at a fixed SNR to an all-zero signal");

  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto& v = clean.values();
  Eigen::MatrixXd noise(v.rows(), v.cols());
  for (Eigen::Index i = 0; i < noise.rows(); ++i) {
    for (Eigen::Index c = 0; c < noise.cols(); ++c) noise(i, c) = normal(rng);
  }
  const double target = signal / std::pow(10.0, spec.snr_db / 10.0);
  noise *= std::sqrt(target / noise.squaredNorm());
  return SampleSet(clean.points(), v + noise);
}

double achieved_snr(const SampleSet& clean, const SampleSet& noisy) {
  if (clean.points() != noisy.points() || clean.output_dim() != noisy.output_dim()) {
    throw DataError("clean and noisy sets have different shapes");
  }
  const double signal = clean.value_energy();
  const double noise = (noisy.values() - clean.values()).squaredNorm();
  if (!(signal > 0.0)) throw DataError("SNR undefined for an all-zero signal");
  if (!(noise > 0.0)) throw DataError("SNR is infinite: noisy data equals clean data");
  return 10.0 * std::log10(signal / noise);
}

}  // namespace rdp
