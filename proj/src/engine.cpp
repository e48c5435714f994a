#include "rdp/engine.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>

#include "rdp/error.hpp"

namespace rdp {

RdpConfig RdpConfig::defaults(ModelFamily family, PenaltySpec penalty) {
  const std::size_t min_points = family.largest_term_count() + 1;
  return RdpConfig{0.10, std::move(family), std::move(penalty), min_points, 16, std::nullopt,
                   SplitTest::kRawLoss, 1};
}

void RdpConfig::validate() const {
  if (!(q >= 0.0 && q < 1.0)) throw ConfigError("q must lie in [0, 1)");
  if (min_points < family.largest_term_count()) {
    throw ConfigError("min_points (" + std::to_string(min_points) +
                      ") is below the largest basis term count (" +
                      std::to_string(family.largest_term_count()) + ")");
  }
  if (max_depth < 0) throw ConfigError("max_depth must be >= 0");
  for (const auto& b : family.candidates()) penalty.multiplier(b.complexity());
  if (grid) grid->validate();
}

std::optional<double> LossSurface::at(std::size_t i, std::size_t j) const {
  if (dim != 2) return std::nullopt;
  if (i > j) std::swap(i, j);
  const auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(i, j));
  if (it == pairs.end() || *it != std::make_pair(i, j)) return std::nullopt;
  return totals[static_cast<std::size_t>(it - pairs.begin())];
}

std::optional<std::size_t> LossSurface::argmin() const {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < totals.size(); ++i) {
    if (!totals[i]) continue;
    if (!best || *totals[i] < *totals[*best]) best = i;
  }
  return best;
}

std::optional<BoundaryScore> score_boundary(const SampleSet& data, const Hyperplane& h,
                                            const RdpConfig& cfg) {
  auto [first, second] = split(data, h);
  if (first.size() < cfg.min_points || second.size() < cfg.min_points) return std::nullopt;
  try {
    auto m1 = select_model(first, cfg.family, cfg.penalty);
    auto m2 = select_model(second, cfg.family, cfg.penalty);
    return BoundaryScore{h, std::move(m1), std::move(m2)};
  } catch (const RankDeficientError& e) {
    throw RankDeficientError("boundary " + describe(h) + ": " + e.what());
  }
}

namespace {

// Runs body(i) for i in [0, n) on up to `threads` workers. Every index is
// independent, so the outcome does not depend on scheduling.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

BoundarySearch best_boundary(const SampleSet& data, const RdpConfig& cfg) {
  BoundarySearch result;
  LossSurface& surface = result.surface;
  surface.dim = data.input_dim();

  if (surface.dim == 1) {
    for (const auto& t : candidates_1d(data, cfg.min_points)) surface.candidates.emplace_back(t);
  } else {
    const GridSpec grid = cfg.grid ? *cfg.grid : GridSpec::infer(data);
    surface.perimeter = perimeter_points(grid);
    for (const auto& c : candidate_lines_2d(surface.perimeter)) {
      surface.candidates.emplace_back(c.line);
      surface.pairs.emplace_back(c.first, c.second);
    }
  }

  surface.totals.assign(surface.candidates.size(), std::nullopt);
  parallel_for(surface.candidates.size(), cfg.threads, [&](std::size_t i) {
    try {
      if (auto s = score_boundary(data, surface.candidates[i], cfg)) surface.totals[i] = s->total();
    } catch (const RankDeficientError&) {
      // inadmissible
    }
  });

  if (const auto best = surface.argmin()) {
    result.best = score_boundary(data, surface.candidates[*best], cfg);
  }
  return result;
}

bool accept_split(double e0, double e1, double e2, double q) { return e1 + e2 <= (1.0 - q) * e0; }

namespace {

double test_value(const ScoredModel& m, SplitTest t) {
  return t == SplitTest::kRawLoss ? m.raw_loss : m.effective_loss;
}

}  // namespace

bool accept_split(const ScoredModel& node, const BoundaryScore& split, const RdpConfig& cfg) {
  return accept_split(test_value(node, cfg.split_test), test_value(split.first, cfg.split_test),
                      test_value(split.second, cfg.split_test), cfg.q);
}

namespace {

class Partitioner {
 public:
  Partitioner(const SampleSet& root, const RdpConfig& cfg) : root_(root), cfg_(cfg) {}

  void grow(std::vector<std::size_t> samples, ScoredModel model, int depth) {
    const int id = static_cast<int>(nodes_.size());
    nodes_.push_back(PartitionNode{id, depth, std::move(samples), std::move(model), std::nullopt,
                                   0.0, 0.0, -1, -1, {}});

    if (depth >= cfg_.max_depth || nodes_[id].samples.size() < 2 * cfg_.min_points) return;
    // An exact fit cannot be improved upon; the q test would pass trivially (0 <= 0).
    if (nodes_[id].model.raw_loss == 0.0) return;

    const SampleSet data = root_.subset(nodes_[id].samples);
    std::optional<BoundaryScore> best;
    try {
      best = best_boundary(data, cfg_).best;
    } catch (const Error& e) {
      nodes_[id].diagnostic = e.what();
      return;
    }
    if (!best) return;

    if (!accept_split(nodes_[id].model, *best, cfg_)) return;

    const auto sides = partition_indices(data, best->hyperplane);
    std::vector<std::size_t> left, right;
    left.reserve(sides.first.size());
    right.reserve(sides.second.size());
    for (auto i : sides.first) left.push_back(nodes_[id].samples[i]);
    for (auto i : sides.second) right.push_back(nodes_[id].samples[i]);

    nodes_[id].boundary = best->hyperplane;
    nodes_[id].test_loss = test_value(nodes_[id].model, cfg_.split_test);
    nodes_[id].split_loss =
        test_value(best->first, cfg_.split_test) + test_value(best->second, cfg_.split_test);
    nodes_[id].left = static_cast<int>(nodes_.size());
    grow(std::move(left), std::move(best->first), depth + 1);
    nodes_[id].right = static_cast<int>(nodes_.size());
    grow(std::move(right), std::move(best->second), depth + 1);
  }

  std::vector<PartitionNode> take() { return std::move(nodes_); }

 private:
  const SampleSet& root_;
  const RdpConfig& cfg_;
  std::vector<PartitionNode> nodes_;
};

}  // namespace

PartitionTree partition(const SampleSet& data, const RdpConfig& cfg) {
  cfg.validate();
  if (data.input_dim() != cfg.family.input_dim()) {
    throw DataError("data dimension does not match the model family");
  }
  if (data.size() < cfg.min_points) {
    throw DataError("dataset has " + std::to_string(data.size()) + " samples, fewer than min_points " +
                    std::to_string(cfg.min_points));
  }

  RdpConfig effective = cfg;
  if (data.input_dim() == 2 && !effective.grid) effective.grid = GridSpec::infer(data);

  ScoredModel root_model = select_model(data, cfg.family, cfg.penalty);
  std::vector<std::size_t> all(data.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;

  Partitioner p(data, effective);
  p.grow(std::move(all), std::move(root_model), 0);
  return PartitionTree(p.take());
}

std::vector<const PartitionNode*> PartitionTree::leaves() const {
  std::vector<const PartitionNode*> out;
  for (const auto& n : nodes_) {
    if (n.is_leaf()) out.push_back(&n);
  }
  return out;
}

std::vector<Hyperplane> PartitionTree::boundaries() const {
  std::vector<Hyperplane> out;
  for (const auto& n : nodes_) {
    if (n.boundary) out.push_back(*n.boundary);
  }
  return out;
}

}  // namespace rdp
