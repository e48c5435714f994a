#pragma once

#include <cstdint>

#include "rdp/geometry.hpp"
#include "rdp/sample_set.hpp"

namespace rdp {

// Clean piecewise systems. Points exactly on a break take the right-hand branch.
double two_domain_value(double x);
double three_domain_value(double x);
double quad_2d_value(double x, double y);

SampleSet gen_two_domain(double step = 0.01);
SampleSet gen_three_domain(double step = 0.01);

// 11 x 11 grid on [0, 1]^2.
GridSpec unit_grid();

SampleSet gen_quad_2d(const GridSpec& grid = unit_grid());

/// Synthetic two-regime vector field (not a physical flow simulation).
///
/// With s, t the grid-normalized coordinates, the separating line runs from
/// (s, t) = (0, 0.3) on the left edge to (1, 0.7) on the right edge. Strictly
/// above it the field is the uniform stream (u, v) = (1, 0); on or below it
///   u = 3y - 2.5y^2 + 0.2xy,   v = 0.05xy^2 - 0.02y.
struct VectorFieldSpec {
  static constexpr double kLeftT = 0.3;
  static constexpr double kRightT = 0.7;
};

bool vector_2d_is_free_stream(const GridSpec& grid, double x, double y);
SampleSet gen_vector_2d(const GridSpec& grid = unit_grid());

struct NoiseSpec {
  double snr_db = 10.0;
  std::uint64_t seed = 0;
};

/// Adds seeded Gaussian noise rescaled so the realized SNR equals snr_db.
/// Throws DataError for an all-zero signal or a non-finite target.
SampleSet add_noise(const SampleSet& clean, const NoiseSpec& spec);

/// 10 log10(|clean|^2 / |noisy - clean|^2) over all output components.
double achieved_snr(const SampleSet& clean, const SampleSet& noisy);

}  // namespace rdp
