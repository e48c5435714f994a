#include "rdp/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>

#include "rdp/error.hpp"

namespace rdp {

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

std::vector<std::string> default_header(int input_dim, int output_dim) {
  if (input_dim == 1 && output_dim == 1) return {"x", "y"};
  if (input_dim == 2 && output_dim == 1) return {"x", "y", "z"};
  if (input_dim == 2 && output_dim == 2) return {"x", "y", "u", "v"};
  std::vector<std::string> h{"x"};
  if (input_dim == 2) h.emplace_back("y");
  for (int c = 0; c < output_dim; ++c) h.push_back("v" + std::to_string(c));
  return h;
}

void write_csv(std::ostream& out, const SampleSet& data) {
  write_csv(out, data, default_header(data.input_dim(), data.output_dim()));
}

void write_csv(std::ostream& out, const SampleSet& data, const std::vector<std::string>& header) {
  if (header.size() != static_cast<std::size_t>(data.input_dim() + data.output_dim())) {
    throw DataError("CSV header width does not match the data");
  }
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << '\n';
  for (std::size_t r = 0; r < data.size(); ++r) {
    const auto row = static_cast<Eigen::Index>(r);
    for (int c = 0; c < data.input_dim(); ++c) {
      out << (c ? "," : "") << format_double(data.points()(row, c));
    }
    for (int c = 0; c < data.output_dim(); ++c) out << ',' << format_double(data.values()(row, c));
    out << '\n';
  }
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> f;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    f.push_back(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return f;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

SampleSet read_csv(std::istream& in, int input_dim) {
  if (input_dim != 1 && input_dim != 2) throw ConfigError("input dimension must be 1 or 2");
  std::string line;
  if (!std::getline(in, line)) throw DataError("CSV is empty (missing header)");
  const auto header = split_fields(trim(line));
  const auto width = header.size();
  if (width < static_cast<std::size_t>(input_dim) + 1) {
    throw DataError("line 1: header has " + std::to_string(width) + " columns, need at least " +
                    std::to_string(input_dim + 1));
  }

  std::vector<double> cells;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty()) continue;
    const auto fields = split_fields(body);
    if (fields.size() != width) {
      throw DataError("line " + std::to_string(line_no) + ": expected " + std::to_string(width) +
                      " fields, got " + std::to_string(fields.size()));
    }
    for (auto f : fields) {
      f = trim(f);
      double v = 0.0;
      const auto res = std::from_chars(f.data(), f.data() + f.size(), v);
      if (res.ec != std::errc{} || res.ptr != f.data() + f.size()) {
        throw DataError("line " + std::to_string(line_no) + ": cannot parse '" + std::string(f) +
                        "' as a number");
      }
      if (!std::isfinite(v)) {
        throw DataError("line " + std::to_string(line_no) + ": non-finite value");
      }
      cells.push_back(v);
    }
  }
  const auto rows = static_cast<Eigen::Index>(cells.size() / width);
  if (rows == 0) throw DataError("CSV has no data rows");
  Eigen::MatrixXd points(rows, input_dim);
  Eigen::MatrixXd values(rows, static_cast<Eigen::Index>(width) - input_dim);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < static_cast<Eigen::Index>(width); ++c) {
      const double v = cells[static_cast<std::size_t>(r) * width + static_cast<std::size_t>(c)];
      if (c < input_dim) {
        points(r, c) = v;
      } else {
        values(r, c - input_dim) = v;
      }
    }
  }
  return SampleSet(std::move(points), std::move(values));
}

SampleSet read_csv_file(const std::string& path, int input_dim) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "' for reading");
  try {
    return read_csv(in, input_dim);
  } catch (const DataError& e) {
    throw DataError(path + ": " + e.what());
  }
}

void write_csv_file(const std::string& path, const SampleSet& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open '" + path + "' for writing");
  write_csv(out, data);
  if (!out) throw DataError("failed writing '" + path + "'");
}

}  // namespace rdp
