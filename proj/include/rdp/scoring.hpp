#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "rdp/basis.hpp"
#include "rdp/power_series.hpp"
#include "rdp/sample_set.hpp"

namespace rdp {

/// Summed squared residual over all samples and all output components.
double reconstruction_loss(const PowerSeriesModel& model, const SampleSet& data);

/// Complexity penalty p(K), a multiplier in (0, 1] applied to the raw loss.
///
/// Affine: p(K) = 1 - alpha * (k_max - K) for 0 <= K <= k_max.
/// Table:  explicit K -> multiplier map.
/// Unit:   p = 1 for every K (single-candidate families).
class PenaltySpec {
 public:
  enum class Kind { kAffine, kTable, kUnit };

  static PenaltySpec affine(double alpha, int k_max);
  static PenaltySpec table(std::map<int, double> multipliers);
  static PenaltySpec unit();

  Kind kind() const { return kind_; }
  double alpha() const { return alpha_; }
  int k_max() const { return k_max_; }
  const std::map<int, double>& entries() const { return table_; }

  double multiplier(int complexity) const;

 private:
  PenaltySpec() = default;

  Kind kind_ = Kind::kUnit;
  double alpha_ = 0.0;
  int k_max_ = 0;
  std::map<int, double> table_;
};

double penalty_multiplier(const PenaltySpec& spec, int complexity);

/// Candidate bases ordered by strictly increasing complexity.
class ModelFamily {
 public:
  explicit ModelFamily(std::vector<BasisSpec> candidates);

  // Univariate family with degrees 0..max_degree.
  static ModelFamily up_to_degree(int max_degree);
  static ModelFamily single(BasisSpec basis);

  const std::vector<BasisSpec>& candidates() const { return candidates_; }
  int input_dim() const { return candidates_.front().input_dim(); }
  std::size_t largest_term_count() const;

 private:
  std::vector<BasisSpec> candidates_;
};

struct ScoredModel {
  PowerSeriesModel model;
  double raw_loss = 0.0;
  double effective_loss = 0.0;

  int complexity() const { return model.basis().complexity(); }
};

// Index minimizing multiplier[i] * raw[i]; exact ties go to the lowest index.
// Entries whose raw loss is NaN are skipped. Returns raw.size() if none qualify.
std::size_t argmin_effective(std::span<const double> raw, std::span<const double> multipliers);

/// Fits every candidate and returns the one with the smallest effective loss.
/// Rank-deficient candidates are skipped; if all are, RankDeficientError.
ScoredModel select_model(const SampleSet& data, const ModelFamily& family, const PenaltySpec& spec);

}  // namespace rdp
