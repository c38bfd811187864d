#pragma once

#include <string>
#include <vector>

namespace pw {

// All numeric output goes through fmt17 so files are reproducible bit for bit
// and values round-trip through text exactly.
std::string fmt17(double x);

// Strict double parse: the whole field must be consumed. Throws errc::parse.
double parse_double(const std::string& field, const std::string& context);

std::vector<std::string> split_csv_line(const std::string& line);

}  // namespace pw
