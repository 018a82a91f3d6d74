// Command-line front end. Exit codes: 0 ok, 1 usage or resource error,
// 2 a mathematical verification failed.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace distlab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerification = 2;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace distlab
