#pragma once

#include <ostream>

namespace tabloid::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_validation = 2;
inline constexpr int exit_criterion_fails = 3;
inline constexpr int exit_budget_exhausted = 4;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tabloid::cli
