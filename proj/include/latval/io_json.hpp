#pragma once

#include <stdexcept>
#include <string>

#include "latval/valuation_engine.hpp"
#include "latval/verify.hpp"

namespace latval {

/// File access / malformed input. The CLI maps this (and ParseError) to
/// exit code 2.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Polygon files: {"vertices": [[u, v], ...]} with integer entries. The
/// reader canonicalizes through convex_hull.
LatticePolygon read_polygon_json(const std::string& path);
LatticePolygon parse_polygon_json_text(const std::string& text);

/// Kernel files: {"f0": "<number>", "f1": "<expr>", "rho": "<expr>"}; f1 is
/// interpreted on Omega~1 and rho on Omega~2. f0 must be a constant
/// expression.
KernelSpec read_kernel_json(const std::string& path);
KernelSpec parse_kernel_json_text(const std::string& text);

std::string residual_report_json(const ResidualReport& r);
std::string suite_report_json(const SuiteReport& r);

}  // namespace latval
