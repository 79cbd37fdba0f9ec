#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace linkage::cli {

inline constexpr const char* kVersion = "1.0.0";

// Runs one command; JSON goes to `out`, diagnostics to `err`. Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace linkage::cli
