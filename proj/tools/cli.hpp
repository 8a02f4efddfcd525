#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gnq::cli {

// exit codes
constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

// args excludes the program name
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gnq::cli
