#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rdp/geometry.hpp"
#include "rdp/sample_set.hpp"
#include "rdp/scoring.hpp"

namespace rdp {

// Which losses the q test compares. Both use the penalized model choice.
enum class SplitTest {
  kRawLoss,        // reconstruction losses of the selected models
  kEffectiveLoss,  // penalized losses, the same quantity the boundary search minimizes
};

struct RdpConfig {
  double q = 0.10;
  ModelFamily family;
  PenaltySpec penalty;
  std::size_t min_points = 0;
  int max_depth = 16;
  // 2D only: grid whose perimeter seeds the candidate lines. Inferred from the
  // root data when absent.
  std::optional<GridSpec> grid;
  SplitTest split_test = SplitTest::kRawLoss;
  // Worker threads for candidate scoring; 0 picks hardware concurrency.
  unsigned threads = 1;

  // min_points = largest term count + 1, other fields at their defaults.
  static RdpConfig defaults(ModelFamily family, PenaltySpec penalty);

  void validate() const;
};

struct BoundaryScore {
  Hyperplane hyperplane;
  ScoredModel first;
  ScoredModel second;

  double e1() const { return first.effective_loss; }
  double e2() const { return second.effective_loss; }
  double total() const { return e1() + e2(); }
};

/// Two-model effective loss per candidate boundary.
///
/// In 1D `candidates` are thresholds. In 2D they are perimeter lines and
/// `pairs` holds their perimeter indices; `at(i, j)` gives the symmetric
/// matrix view. Inadmissible candidates hold no value.
struct LossSurface {
  int dim = 1;
  std::vector<Hyperplane> candidates;
  std::vector<std::optional<double>> totals;
  PerimeterIndex perimeter;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  std::optional<double> at(std::size_t i, std::size_t j) const;
  // Index of the smallest admissible total, lowest index on ties.
  std::optional<std::size_t> argmin() const;
};

struct BoundarySearch {
  std::optional<BoundaryScore> best;
  LossSurface surface;
};

/// Splits `data` by `h` and selects the optimal model on each side.
/// Returns nullopt if either side has fewer than cfg.min_points samples.
/// Regression failures are rethrown as RankDeficientError naming the boundary.
std::optional<BoundaryScore> score_boundary(const SampleSet& data, const Hyperplane& h,
                                            const RdpConfig& cfg);

/// Exhaustive search over every candidate boundary. Rank-deficient splits are
/// treated as inadmissible. Ties resolve to the lowest canonical index.
BoundarySearch best_boundary(const SampleSet& data, const RdpConfig& cfg);

bool accept_split(double e0, double e1, double e2, double q);

// accept_split applied to the losses selected by cfg.split_test.
bool accept_split(const ScoredModel& node, const BoundaryScore& split, const RdpConfig& cfg);

struct PartitionNode {
  int id = 0;
  int depth = 0;
  std::vector<std::size_t> samples;  // indices into the root sample set
  ScoredModel model;
  std::optional<Hyperplane> boundary;
  // q-test operands for internal nodes, in the units of cfg.split_test.
  double test_loss = 0.0;   // e0
  double split_loss = 0.0;  // e1 + e2
  int left = -1;
  int right = -1;
  std::string diagnostic;

  bool is_leaf() const { return left < 0; }
};

/// Binary partition tree stored in depth-first pre-order (left child first);
/// node ids equal their position.
class PartitionTree {
 public:
  explicit PartitionTree(std::vector<PartitionNode> nodes) : nodes_(std::move(nodes)) {}

  const std::vector<PartitionNode>& nodes() const { return nodes_; }
  const PartitionNode& root() const { return nodes_.front(); }
  const PartitionNode& node(int id) const { return nodes_.at(static_cast<std::size_t>(id)); }

  std::vector<const PartitionNode*> leaves() const;
  // Accepted boundaries in discovery (pre-)order.
  std::vector<Hyperplane> boundaries() const;

 private:
  std::vector<PartitionNode> nodes_;
};

PartitionTree partition(const SampleSet& data, const RdpConfig& cfg);

}  // namespace rdp
