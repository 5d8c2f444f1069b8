#pragma once

#include "mtp/poly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace mtp::cli {

/// Named polynomials from a golden file. Each block reads
///   poly <name>
///   shift <m>          (optional, default 0)
///   scale <rational>   (optional, default 1)
///   coeffs c0 c1 ...   (lowest power first)
/// and stands for scale * x^m * (c0 + c1 x + ...). '#' starts a comment.
using GoldenSet = std::vector<std::pair<std::string, Poly>>;

GoldenSet read_golden(const std::string& path);
const Poly& golden_poly(const GoldenSet& set, const std::string& name);

}  // namespace mtp::cli
