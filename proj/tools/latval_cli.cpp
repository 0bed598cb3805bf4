#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "latval/io_json.hpp"
#include "latval/kernel_extend.hpp"
#include "latval/seed_expr.hpp"
#include "latval/valuation_engine.hpp"
#include "latval/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;    // verify: tolerance violated
constexpr int kExitUsage = 2;   // bad flags, files, parses, negative input
constexpr int kExitDim = 3;     // dimension errors

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool parse_double(const std::string& s, double& out) {
  char* end = nullptr;
  out = std::strtod(s.c_str(), &end);
  return end == s.c_str() + s.size() && !s.empty();
}

struct EvalArgs {
  std::string polygon_file, kernel_file, at;
};

int cmd_eval(const EvalArgs& a) {
  double ax = 0, ay = 0;
  const auto comma = a.at.find(',');
  if (comma == std::string::npos || !parse_double(a.at.substr(0, comma), ax) ||
      !parse_double(a.at.substr(comma + 1), ay)) {
    std::cerr << "error: --at expects X,Y\n";
    return kExitUsage;
  }
  const latval::LatticePolygon P = latval::read_polygon_json(a.polygon_file);
  const latval::KernelSpec spec = latval::read_kernel_json(a.kernel_file);
  const latval::ValuationHandle h(spec);
  std::cout << fmt17(h.evaluate(P, {ax, ay})) << "\n";
  return kExitOk;
}

struct GridArgs {
  std::string polygon_file, kernel_file, out_file;
  double xmin = -3, xmax = 3, ymin = -3, ymax = 3;
  std::size_t nx = 2, ny = 2;
};

int cmd_grid(const GridArgs& a) {
  if (a.nx < 2 || a.ny < 2) {
    std::cerr << "error: --nx and --ny must be at least 2\n";
    return kExitUsage;
  }
  const latval::LatticePolygon P = latval::read_polygon_json(a.polygon_file);
  const latval::ValuationHandle h(latval::read_kernel_json(a.kernel_file));
  std::ofstream out(a.out_file, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file: " << a.out_file << "\n";
    return kExitUsage;
  }
  out << "x,y,value\n";
  for (std::size_t iy = 0; iy < a.ny; ++iy) {
    const double y = a.ymin + (a.ymax - a.ymin) * static_cast<double>(iy) /
                                 static_cast<double>(a.ny - 1);
    for (std::size_t ix = 0; ix < a.nx; ++ix) {
      const double x = a.xmin + (a.xmax - a.xmin) * static_cast<double>(ix) /
                                    static_cast<double>(a.nx - 1);
      out << fmt17(x) << ',' << fmt17(y) << ',' << fmt17(h.evaluate(P, {x, y})) << "\n";
    }
  }
  out.flush();
  if (!out) {
    std::cerr << "error: failed writing " << a.out_file << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string suite = "all";
  std::uint64_t seed = 0;
  std::size_t cases = 0;  // 0 = suite default
  std::string rho_expr, f2_expr;
};

latval::ScalarField field_from(const std::string& src) {
  const latval::ExprAst ast = latval::parse(src);
  return latval::ScalarField(
      [ast](double x, double y) { return latval::eval_expr(ast, x, y); });
}

int cmd_verify(const VerifyArgs& a) {
  using namespace latval;
  const std::vector<std::string> known{"all",       "valuation", "covariance",
                                       "equations", "fibonacci", "laplace"};
  if (std::find(known.begin(), known.end(), a.suite) == known.end()) {
    std::cerr << "error: unknown suite '" << a.suite << "'\n";
    return kExitUsage;
  }
  auto want = [&a](const char* s) { return a.suite == "all" || a.suite == s; };
  auto pick = [&a](std::size_t dflt) { return a.cases == 0 ? dflt : a.cases; };

  std::vector<SuiteReport> reports;
  if (want("laplace")) reports.push_back(run_suite_laplace(a.seed, pick(50)));
  if (want("valuation")) reports.push_back(run_suite_valuation(a.seed, pick(200)));
  if (want("covariance")) reports.push_back(run_suite_covariance(a.seed, pick(100)));
  if (want("equations")) {
    EquationsTarget target;
    if (!a.f2_expr.empty()) {
      target.direct_f2 = field_from(a.f2_expr);
    } else if (!a.rho_expr.empty()) {
      target.rho_seed = field_from(a.rho_expr);
    }
    reports.push_back(run_suite_equations(a.seed, pick(10000), target));
  }
  if (want("fibonacci")) reports.push_back(run_suite_fibonacci(a.seed, pick(10000)));

  bool all_pass = true;
  for (const auto& r : reports) {
    std::cout << suite_report_json(r) << "\n";
    all_pass = all_pass && r.pass;
  }
  return all_pass ? kExitOk : kExitFail;
}

struct RegionArgs {
  std::string x, y;
};

int cmd_region(const RegionArgs& a) {
  double x = 0, y = 0;
  if (!parse_double(a.x, x) || !parse_double(a.y, y)) {
    std::cerr << "error: X and Y must be numbers\n";
    return kExitUsage;
  }
  if (!(x >= 0) || !(y >= 0)) {
    std::cerr << "error: X and Y must be nonnegative\n";
    return kExitUsage;
  }
  const latval::RegionTag tag = latval::region_tag(x, y);
  using K = latval::RegionTag::Kind;
  switch (tag.kind) {
    case K::Origin: std::cout << "Origin\n"; break;
    case K::AxisX: std::cout << "AxisX\n"; break;
    case K::InOmega2: std::cout << "Omega2\n"; break;
    case K::OmegaIndex: std::cout << "Omega(" << tag.index << ")\n"; break;
    case K::RaySegment: std::cout << "Ray(" << tag.index << ")\n"; break;
  }
  std::cout << "chain:";
  for (const auto& p : latval::region_descent_chain(x, y))
    std::cout << " (" << fmt17(p.x) << "," << fmt17(p.y) << ")";
  std::cout << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"translatively exponential GL(2,Z)-covariant valuations on lattice polygons"};
  app.require_subcommand(1);

  EvalArgs ea;
  CLI::App* eval = app.add_subcommand("eval", "evaluate Z(P)(x) at one point");
  eval->add_option("--polygon", ea.polygon_file, "polygon JSON file")->required();
  eval->add_option("--kernel", ea.kernel_file, "kernel JSON file")->required();
  eval->add_option("--at", ea.at, "evaluation point X,Y")->required();

  GridArgs ga;
  CLI::App* grid = app.add_subcommand("grid", "evaluate Z(P) on a grid, write CSV");
  grid->add_option("--polygon", ga.polygon_file)->required();
  grid->add_option("--kernel", ga.kernel_file)->required();
  grid->add_option("--xmin", ga.xmin)->required();
  grid->add_option("--xmax", ga.xmax)->required();
  grid->add_option("--ymin", ga.ymin)->required();
  grid->add_option("--ymax", ga.ymax)->required();
  grid->add_option("--nx", ga.nx)->required();
  grid->add_option("--ny", ga.ny)->required();
  grid->add_option("--out", ga.out_file, "output CSV path")->required();

  VerifyArgs va;
  CLI::App* verify = app.add_subcommand("verify", "run randomized verification suites");
  verify->add_option("--suite", va.suite,
                     "all|valuation|covariance|equations|fibonacci|laplace");
  verify->add_option("--seed", va.seed, "RNG seed");
  verify->add_option("--cases", va.cases, "case count (0 = suite default)");
  verify->add_option("--rho", va.rho_expr, "rho seed expression for the equations suite");
  verify->add_option("--f2-expr", va.f2_expr,
                     "probe a candidate f2 field instead of a classified kernel");

  RegionArgs ra;
  CLI::App* region = app.add_subcommand("region", "Fibonacci-region diagnostics");
  region->add_option("x", ra.x, "x >= 0")->required();
  region->add_option("y", ra.y, "y >= 0")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*eval) return cmd_eval(ea);
    if (*grid) return cmd_grid(ga);
    if (*verify) return cmd_verify(va);
    if (*region) return cmd_region(ra);
  } catch (const latval::DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDim;
  } catch (const latval::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const latval::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
