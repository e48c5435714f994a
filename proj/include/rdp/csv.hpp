#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rdp/sample_set.hpp"

namespace rdp {

// Shortest decimal string that parses back to exactly `value`.
std::string format_double(double value);

// "x,y" / "x,y,z" / "x,y,u,v"; other shapes get x[,y],v0,v1,...
std::vector<std::string> default_header(int input_dim, int output_dim);

void write_csv(std::ostream& out, const SampleSet& data);
void write_csv(std::ostream& out, const SampleSet& data, const std::vector<std::string>& header);

/// Reads a headed CSV whose first `input_dim` columns are coordinates and the
/// rest outputs. Errors name the offending line (1-based, header = line 1).
SampleSet read_csv(std::istream& in, int input_dim);

SampleSet read_csv_file(const std::string& path, int input_dim);
void write_csv_file(const std::string& path, const SampleSet& data);

}  // namespace rdp
