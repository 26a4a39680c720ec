#pragma once

#include <string>

namespace shapevade::textio {

// Shortest round-trip decimal form; locale-free, byte-stable across runs.
std::string fmt_double(double v);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace shapevade::textio
