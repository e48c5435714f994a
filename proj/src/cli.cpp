#include "rdp/cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "rdp/csv.hpp"
#include "rdp/engine.hpp"
#include "rdp/error.hpp"
#include "rdp/report.hpp"
#include "rdp/synth.hpp"

namespace rdp::cli {

namespace {

struct GenerateOptions {
  std::string system;
  std::optional<double> snr_db;
  std::uint64_t seed = 0;
  double step = 0.01;
  GridSpec grid = unit_grid();
  std::string out;
};

struct ModelOptions {
  std::string input;
  std::string out;
  int dim = 1;
  int max_degree = 2;
  double alpha = 0.15;
  int degree_x = 3;
  int degree_y = 3;
  double q = 0.10;
  std::optional<std::size_t> min_points;
  int max_depth = 16;
  unsigned threads = 1;
  std::string split_test = "raw";
  std::string perimeter_out;
};

void add_model_flags(CLI::App* cmd, ModelOptions& o) {
  cmd->add_option("--input,-i", o.input, "Input CSV")->required();
  cmd->add_option("--out,-o", o.out, "Output path")->required();
  cmd->add_option("--dim", o.dim, "Input dimension (1 or 2)")->check(CLI::IsMember({1, 2}));
  cmd->add_option("--max-degree", o.max_degree, "1D: family of degrees 0..K");
  cmd->add_option("--alpha", o.alpha, "1D: affine penalty slope, p(K) = 1 - alpha (K_max - K)");
  cmd->add_option("--degree-x", o.degree_x, "2D: degree cap along x");
  cmd->add_option("--degree-y", o.degree_y, "2D: degree cap along y");
  cmd->add_option("--q", o.q, "Required fractional improvement to accept a split");
  cmd->add_option("--min-points", o.min_points, "Minimum samples per side (default: terms + 1)");
  cmd->add_option("--max-depth", o.max_depth, "Recursion depth cap");
  cmd->add_option("--threads", o.threads, "Candidate scoring threads (0 = all cores)");
  cmd->add_option("--split-test", o.split_test, "Losses compared by the q test: raw or effective")
      ->check(CLI::IsMember({"raw", "effective"}));
}

RdpConfig make_config(const ModelOptions& o) {
  RdpConfig cfg = o.dim == 1
                      ? RdpConfig::defaults(ModelFamily::up_to_degree(o.max_degree),
                                            PenaltySpec::affine(o.alpha, o.max_degree))
                      : RdpConfig::defaults(ModelFamily::single(BasisSpec::bivariate(o.degree_x, o.degree_y)),
                                            PenaltySpec::unit());
  cfg.q = o.q;
  if (o.min_points) cfg.min_points = *o.min_points;
  cfg.max_depth = o.max_depth;
  cfg.threads = o.threads;
  cfg.split_test = o.split_test == "raw" ? SplitTest::kRawLoss : SplitTest::kEffectiveLoss;
  cfg.validate();
  return cfg;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DataError("cannot open '" + path + "' for writing");
  return f;
}

int cmd_generate(const GenerateOptions& o, std::ostream& out) {
  SampleSet clean = [&] {
    if (o.system == "two-domain") return gen_two_domain(o.step);
    if (o.system == "three-domain") return gen_three_domain(o.step);
    if (o.system == "quad-2d") return gen_quad_2d(o.grid);
    if (o.system == "vector-2d") return gen_vector_2d(o.grid);
    throw ConfigError("unknown system '" + o.system + "'");
  }();
  const SampleSet data = o.snr_db ? add_noise(clean, {*o.snr_db, o.seed}) : clean;
  write_csv_file(o.out, data);
  out << "wrote " << data.size() << " samples to " << o.out << '\n';
  return kOk;
}

int cmd_partition(const ModelOptions& o, std::ostream& out) {
  const RdpConfig cfg = make_config(o);
  const SampleSet data = read_csv_file(o.input, o.dim);
  const auto start = std::chrono::steady_clock::now();
  const PartitionTree tree = partition(data, cfg);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const RunReport report = make_report(tree, cfg, o.dim, seconds);
  auto f = open_out(o.out);
  f << to_json(report).dump(2) << '\n';
  if (!f) throw DataError("failed writing '" + o.out + "'");
  out << report.boundaries.size() << " boundaries, " << report.leaf_ids.size() << " leaves\n";
  for (const auto& h : tree.boundaries()) out << "  " << describe(h) << '\n';
  return kOk;
}

std::string sidecar_path(const std::string& out) {
  const auto dot = out.rfind('.');
  const auto slash = out.find_last_of('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
    return out + ".perimeter.csv";
  }
  return out.substr(0, dot) + ".perimeter.csv";
}

int cmd_loss_surface(const ModelOptions& o, std::ostream& out) {
  const RdpConfig cfg = make_config(o);
  const SampleSet data = read_csv_file(o.input, o.dim);
  const LossSurface s = best_boundary(data, cfg).surface;

  auto f = open_out(o.out);
  auto loss_field = [](const std::optional<double>& v) { return v ? format_double(*v) : ""; };
  if (s.dim == 1) {
    f << "threshold,total_loss\n";
    for (std::size_t i = 0; i < s.candidates.size(); ++i) {
      f << format_double(std::get<Threshold1D>(s.candidates[i]).t) << ',' << loss_field(s.totals[i])
        << '\n';
    }
  } else {
    f << "i,j,total_loss\n";
    for (std::size_t i = 0; i < s.pairs.size(); ++i) {
      f << s.pairs[i].first << ',' << s.pairs[i].second << ',' << loss_field(s.totals[i]) << '\n';
    }
    const std::string side = o.perimeter_out.empty() ? sidecar_path(o.out) : o.perimeter_out;
    auto p = open_out(side);
    p << "index,x,y,edge\n";
    for (std::size_t i = 0; i < s.perimeter.size(); ++i) {
      const auto& pp = s.perimeter[i];
      p << i << ',' << format_double(pp.point.x) << ',' << format_double(pp.point.y) << ','
        << static_cast<int>(pp.edge) << '\n';
    }
    out << "wrote perimeter table to " << side << '\n';
  }
  if (!f) throw DataError("failed writing '" + o.out + "'");
  const auto best = s.argmin();
  out << s.candidates.size() << " candidates";
  if (best) out << ", minimum " << format_double(*s.totals[*best]) << " at " << describe(s.candidates[*best]);
  out << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Recursive domain partitioning with penalized power-series models", "rdp"};
  app.require_subcommand(1);

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Write a synthetic dataset as CSV");
  generate->add_option("--system", gen.system, "two-domain | three-domain | quad-2d | vector-2d")
      ->required();
  generate->add_option("--snr", gen.snr_db, "Signal-to-noise ratio in dB (omit for clean data)");
  generate->add_option("--seed", gen.seed, "Noise seed");
  generate->add_option("--step", gen.step, "1D sample spacing");
  generate->add_option("--nx", gen.grid.nx, "2D grid points along x");
  generate->add_option("--ny", gen.grid.ny, "2D grid points along y");
  generate->add_option("--x-min", gen.grid.x_min);
  generate->add_option("--x-max", gen.grid.x_max);
  generate->add_option("--y-min", gen.grid.y_min);
  generate->add_option("--y-max", gen.grid.y_max);
  generate->add_option("--out,-o", gen.out, "Output CSV")->required();

  ModelOptions part;
  auto* partition_cmd = app.add_subcommand("partition", "Run recursive partitioning, write a JSON report");
  add_model_flags(partition_cmd, part);

  ModelOptions surf;
  auto* surface_cmd = app.add_subcommand("loss-surface", "Write the two-model loss for every candidate boundary");
  add_model_flags(surface_cmd, surf);
  surface_cmd->add_option("--perimeter-out", surf.perimeter_out, "2D perimeter table path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*generate) return cmd_generate(gen, out);
    if (*partition_cmd) return cmd_partition(part, out);
    if (*surface_cmd) return cmd_loss_surface(surf, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return kNumerical;
  }
  return kUsage;
}

}  // namespace rdp::cli
