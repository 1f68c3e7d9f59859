#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace latpoly::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

struct Hooks {
  // Overrides the closed-form coefficient used by `verify` when set.
  std::function<std::int64_t(int, int)> t_coeff;
};

// args excludes the program name. Input objects given as "-" are read from in.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        const Hooks& hooks = {});

}  // namespace latpoly::cli
