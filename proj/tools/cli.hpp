#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mtp::cli {

/// Exit codes of run().
inline constexpr int kExitProven = 0;
inline constexpr int kExitNotProven = 1;
inline constexpr int kExitUsage = 2;

/// Entry point behind mtp-prove; args excludes the program name.
///   prove "<expr>" [--upper pi/2|n/d] [--open|--closed] [--method auto|method-c|method-d]
///                  [--param a=lo..hi] [--var x] [--budget N] [--cert path] [-v]
///   verify <certificate>
///   reproduce <mortici|pade-left|pade-right|yang-param> [--golden-dir dir] [-v]
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Directory of the built-in golden files.
std::string default_golden_dir();

}  // namespace mtp::cli
