#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rdp/engine.hpp"

namespace rdp {

// Serialized boundary: kind "threshold" with params {t}, or kind "line" with
// params {a: [x, y], b: [x, y]}.
struct ReportBoundary {
  std::string kind;
  std::vector<double> params;  // threshold: [t]; line: [ax, ay, bx, by]
  friend bool operator==(const ReportBoundary&, const ReportBoundary&) = default;
};

struct ReportNode {
  int id = 0;
  std::size_t n = 0;
  std::vector<int> degrees;
  std::vector<std::vector<int>> terms;
  std::vector<std::vector<double>> coeffs;  // one row per term, one column per output
  double raw_loss = 0.0;
  double effective_loss = 0.0;
  std::optional<ReportBoundary> boundary;
  std::optional<double> test_loss;   // e0 in the units of the split test
  std::optional<double> split_loss;  // e1 + e2, same units
  std::string diagnostic;
  std::vector<ReportNode> children;
  friend bool operator==(const ReportNode&, const ReportNode&) = default;
};

struct ReportConfig {
  int input_dim = 1;
  double q = 0.10;
  std::string penalty_kind;
  double alpha = 0.0;
  int k_max = 0;
  std::vector<std::vector<int>> family;  // per candidate: degrees
  std::size_t min_points = 0;
  int max_depth = 16;
  std::string split_test = "raw";
  friend bool operator==(const ReportConfig&, const ReportConfig&) = default;
};

struct RunReport {
  ReportConfig config;
  ReportNode tree;
  std::vector<int> leaf_ids;
  std::vector<ReportBoundary> boundaries;  // discovery order
  double seconds = 0.0;
  friend bool operator==(const RunReport&, const RunReport&) = default;
};

RunReport make_report(const PartitionTree& tree, const RdpConfig& cfg, int input_dim, double seconds);
ReportBoundary to_report(const Hyperplane& h);

nlohmann::json to_json(const RunReport& report);
RunReport report_from_json(const nlohmann::json& j);

}  // namespace rdp
