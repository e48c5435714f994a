#include "rdp/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "rdp/error.hpp"

namespace rdp {

double reconstruction_loss(const PowerSeriesModel& model, const SampleSet& data) {
  if (data.input_dim() != model.basis().input_dim() || data.output_dim() != model.output_dim()) {
    throw DataError("model and data dimensions are incompatible");
  }
  if (data.empty()) return 0.0;
  return (data.values() - model.predict(data.points())).squaredNorm();
}

PenaltySpec PenaltySpec::affine(double alpha, int k_max) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw ConfigError("penalty alpha must be >= 0");
  if (k_max < 0) throw ConfigError("penalty k_max must be >= 0");
  if (1.0 - alpha * k_max <= 0.0) {
    throw ConfigError("affine penalty is non-positive at K=0 (alpha=" + std::to_string(alpha) +
                      ", k_max=" + std::to_string(k_max) + ")");
  }
  PenaltySpec p;
  p.kind_ = Kind::kAffine;
  p.alpha_ = alpha;
  p.k_max_ = k_max;
  return p;
}

PenaltySpec PenaltySpec::table(std::map<int, double> multipliers) {
  if (multipliers.empty()) throw ConfigError("penalty table is empty");
  for (const auto& [k, m] : multipliers) {
    if (!(m > 0.0 && m <= 1.0)) {
      throw ConfigError("penalty multiplier for K=" + std::to_string(k) + " is outside (0, 1]");
    }
  }
  PenaltySpec p;
  p.kind_ = Kind::kTable;
  p.table_ = std::move(multipliers);
  return p;
}

PenaltySpec PenaltySpec::unit() { return PenaltySpec{}; }

double PenaltySpec::multiplier(int complexity) const {
  switch (kind_) {
    case Kind::kUnit:
      return 1.0;
    case Kind::kAffine:
      if (complexity < 0 || complexity > k_max_) {
        throw ConfigError("K=" + std::to_string(complexity) + " outside affine penalty range [0, " +
                          std::to_string(k_max_) + "]");
      }
      return 1.0 - alpha_ * static_cast<double>(k_max_ - complexity);
    case Kind::kTable: {
      const auto it = table_.find(complexity);
      if (it == table_.end()) {
        throw ConfigError("no penalty table entry for K=" + std::to_string(complexity));
      }
      return it->second;
    }
  }
  return 1.0;
}

double penalty_multiplier(const PenaltySpec& spec, int complexity) {
  return spec.multiplier(complexity);
}

ModelFamily::ModelFamily(std::vector<BasisSpec> candidates) : candidates_(std::move(candidates)) {
  if (candidates_.empty()) throw ConfigError("model family is empty");
  for (std::size_t i = 1; i < candidates_.size(); ++i) {
    if (candidates_[i].input_dim() != candidates_[0].input_dim()) {
      throw ConfigError("model family mixes input dimensions");
    }
    if (candidates_[i].complexity() <= candidates_[i - 1].complexity()) {
      throw ConfigError("model family complexities must be strictly increasing");
    }
  }
}

ModelFamily ModelFamily::up_to_degree(int max_degree) {
  if (max_degree < 0) throw ConfigError("max degree must be >= 0");
  std::vector<BasisSpec> c;
  for (int k = 0; k <= max_degree; ++k) c.push_back(BasisSpec::univariate(k));
  return ModelFamily(std::move(c));
}

ModelFamily ModelFamily::single(BasisSpec basis) { return ModelFamily({std::move(basis)}); }

std::size_t ModelFamily::largest_term_count() const {
  std::size_t n = 0;
  for (const auto& b : candidates_) n = std::max(n, b.term_count());
  return n;
}

std::size_t argmin_effective(std::span<const double> raw, std::span<const double> multipliers) {
  std::size_t best = raw.size();
  double best_value = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (std::isnan(raw[i])) continue;
    const double e = multipliers[i] * raw[i];
    if (best == raw.size() || e < best_value) {
      best = i;
      best_value = e;
    }
  }
  return best;
}

// Residual energy this far below the signal energy is round-off; such fits are
// recorded as exact so that the penalty alone orders them.
constexpr double kRoundoffFloor = 1e-20;

ScoredModel select_model(const SampleSet& data, const ModelFamily& family, const PenaltySpec& spec) {
  const double roundoff = kRoundoffFloor * data.value_energy();
  const auto& candidates = family.candidates();
  std::vector<std::optional<PowerSeriesModel>> models(candidates.size());
  std::vector<double> raw(candidates.size(), std::numeric_limits<double>::quiet_NaN());
  std::vector<double> mult(candidates.size(), 1.0);
  std::string last_failure;

  for (std::size_t i = 0; i < candidates.size(); ++i) {
    mult[i] = spec.multiplier(candidates[i].complexity());
    try {
      models[i] = fit(data, candidates[i]);
    } catch (const RankDeficientError& e) {
      last_failure = e.what();
      continue;
    }
    raw[i] = reconstruction_loss(*models[i], data);
    if (raw[i] <= roundoff) raw[i] = 0.0;
  }

  const std::size_t best = argmin_effective(raw, mult);
  if (best == candidates.size()) {
    throw RankDeficientError("no candidate model could be fitted: " + last_failure);
  }
  return ScoredModel{std::move(*models[best]), raw[best], mult[best] * raw[best]};
}

}  // namespace rdp
