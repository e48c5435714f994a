#include "rdp/report.hpp"

#include "rdp/error.hpp"

namespace rdp {

using nlohmann::json;

ReportBoundary to_report(const Hyperplane& h) {
  if (const auto* t = std::get_if<Threshold1D>(&h)) return {"threshold", {t->t}};
  const auto& l = std::get<Line2D>(h);
  return {"line", {l.a.x, l.a.y, l.b.x, l.b.y}};
}

namespace {

ReportNode make_node(const PartitionTree& tree, int id) {
  const auto& src = tree.node(id);
  const auto& basis = src.model.model.basis();
  ReportNode n;
  n.id = src.id;
  n.n = src.samples.size();
  n.degrees = basis.input_dim() == 1 ? std::vector<int>{basis.degree_x()}
                                     : std::vector<int>{basis.degree_x(), basis.degree_y()};
  for (const auto& t : basis.terms()) {
    n.terms.push_back(basis.input_dim() == 1 ? std::vector<int>{t.x_power}
                                             : std::vector<int>{t.x_power, t.y_power});
  }
  const auto& c = src.model.model.coefficients();
  for (Eigen::Index r = 0; r < c.rows(); ++r) {
    std::vector<double> row(static_cast<std::size_t>(c.cols()));
    for (Eigen::Index k = 0; k < c.cols(); ++k) row[static_cast<std::size_t>(k)] = c(r, k);
    n.coeffs.push_back(std::move(row));
  }
  n.raw_loss = src.model.raw_loss;
  n.effective_loss = src.model.effective_loss;
  n.diagnostic = src.diagnostic;
  if (src.boundary) {
    n.boundary = to_report(*src.boundary);
    n.test_loss = src.test_loss;
    n.split_loss = src.split_loss;
    n.children.push_back(make_node(tree, src.left));
    n.children.push_back(make_node(tree, src.right));
  }
  return n;
}

json boundary_json(const ReportBoundary& b) {
  json params;
  if (b.kind == "threshold") {
    params = {{"t", b.params.at(0)}};
  } else {
    params = {{"a", {b.params.at(0), b.params.at(1)}}, {"b", {b.params.at(2), b.params.at(3)}}};
  }
  return {{"kind", b.kind}, {"params", params}};
}

ReportBoundary boundary_from_json(const json& j) {
  ReportBoundary b;
  b.kind = j.at("kind").get<std::string>();
  const auto& p = j.at("params");
  if (b.kind == "threshold") {
    b.params = {p.at("t").get<double>()};
  } else if (b.kind == "line") {
    const auto a = p.at("a").get<std::vector<double>>();
    const auto bb = p.at("b").get<std::vector<double>>();
    if (a.size() != 2 || bb.size() != 2) throw DataError("line endpoints must have 2 coordinates");
    b.params = {a[0], a[1], bb[0], bb[1]};
  } else {
    throw DataError("unknown boundary kind '" + b.kind + "'");
  }
  return b;
}

json node_json(const ReportNode& n) {
  json children = json::array();
  for (const auto& c : n.children) children.push_back(node_json(c));
  json j = {
      {"id", n.id},
      {"n", n.n},
      {"model", {{"degrees", n.degrees}, {"terms", n.terms}, {"coeffs", n.coeffs}}},
      {"loss", {{"raw", n.raw_loss}, {"effective", n.effective_loss}}},
      {"boundary", n.boundary ? boundary_json(*n.boundary) : json(nullptr)},
      {"children", children},
  };
  if (n.test_loss) j["test_loss"] = *n.test_loss;
  if (n.split_loss) j["split_loss"] = *n.split_loss;
  if (!n.diagnostic.empty()) j["diagnostic"] = n.diagnostic;
  return j;
}

ReportNode node_from_json(const json& j) {
  ReportNode n;
  n.id = j.at("id").get<int>();
  n.n = j.at("n").get<std::size_t>();
  const auto& m = j.at("model");
  n.degrees = m.at("degrees").get<std::vector<int>>();
  n.terms = m.at("terms").get<std::vector<std::vector<int>>>();
  n.coeffs = m.at("coeffs").get<std::vector<std::vector<double>>>();
  n.raw_loss = j.at("loss").at("raw").get<double>();
  n.effective_loss = j.at("loss").at("effective").get<double>();
  if (!j.at("boundary").is_null()) n.boundary = boundary_from_json(j.at("boundary"));
  if (j.contains("test_loss")) n.test_loss = j.at("test_loss").get<double>();
  if (j.contains("split_loss")) n.split_loss = j.at("split_loss").get<double>();
  if (j.contains("diagnostic")) n.diagnostic = j.at("diagnostic").get<std::string>();
  for (const auto& c : j.at("children")) n.children.push_back(node_from_json(c));
  return n;
}

const char* penalty_name(PenaltySpec::Kind k) {
  switch (k) {
    case PenaltySpec::Kind::kAffine: return "affine";
    case PenaltySpec::Kind::kTable: return "table";
    case PenaltySpec::Kind::kUnit: return "unit";
  }
  return "unit";
}

}  // namespace

RunReport make_report(const PartitionTree& tree, const RdpConfig& cfg, int input_dim, double seconds) {
  RunReport r;
  r.config.input_dim = input_dim;
  r.config.q = cfg.q;
  r.config.penalty_kind = penalty_name(cfg.penalty.kind());
  r.config.alpha = cfg.penalty.alpha();
  r.config.k_max = cfg.penalty.k_max();
  for (const auto& b : cfg.family.candidates()) {
    r.config.family.push_back(b.input_dim() == 1 ? std::vector<int>{b.degree_x()}
                                                 : std::vector<int>{b.degree_x(), b.degree_y()});
  }
  r.config.min_points = cfg.min_points;
  r.config.max_depth = cfg.max_depth;
  r.config.split_test = cfg.split_test == SplitTest::kRawLoss ? "raw" : "effective";
  r.tree = make_node(tree, 0);
  for (const auto* leaf : tree.leaves()) r.leaf_ids.push_back(leaf->id);
  for (const auto& h : tree.boundaries()) r.boundaries.push_back(to_report(h));
  r.seconds = seconds;
  return r;
}

json to_json(const RunReport& report) {
  const auto& c = report.config;
  json boundaries = json::array();
  for (const auto& b : report.boundaries) boundaries.push_back(boundary_json(b));
  return {
      {"config",
       {{"input_dim", c.input_dim},
        {"q", c.q},
        {"penalty", {{"kind", c.penalty_kind}, {"alpha", c.alpha}, {"k_max", c.k_max}}},
        {"family", c.family},
        {"min_points", c.min_points},
        {"max_depth", c.max_depth},
        {"split_test", c.split_test}}},
      {"tree", node_json(report.tree)},
      {"leaves", report.leaf_ids},
      {"boundaries", boundaries},
      {"timing", {{"seconds", report.seconds}}},
  };
}

RunReport report_from_json(const json& j) {
  try {
    RunReport r;
    const auto& c = j.at("config");
    r.config.input_dim = c.at("input_dim").get<int>();
    r.config.q = c.at("q").get<double>();
    r.config.penalty_kind = c.at("penalty").at("kind").get<std::string>();
    r.config.alpha = c.at("penalty").at("alpha").get<double>();
    r.config.k_max = c.at("penalty").at("k_max").get<int>();
    r.config.family = c.at("family").get<std::vector<std::vector<int>>>();
    r.config.min_points = c.at("min_points").get<std::size_t>();
    r.config.max_depth = c.at("max_depth").get<int>();
    r.config.split_test = c.value("split_test", std::string("raw"));
    r.tree = node_from_json(j.at("tree"));
    r.leaf_ids = j.at("leaves").get<std::vector<int>>();
    for (const auto& b : j.at("boundaries")) r.boundaries.push_back(boundary_from_json(b));
    r.seconds = j.at("timing").at("seconds").get<double>();
    return r;
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed report JSON: ") + e.what());
  }
}

}  // namespace rdp
