#include "latval/io_json.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "latval/seed_expr.hpp"

namespace latval {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json parse_json(const std::string& text, const std::string& what) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw IoError("malformed JSON in " + what);
  return j;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

LatticePolygon parse_polygon_json_text(const std::string& text) {
  const nlohmann::json j = parse_json(text, "polygon");
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
    throw IoError("polygon JSON must be {\"vertices\": [[u,v], ...]}");
  std::vector<LatticePoint> pts;
  for (const auto& e : j["vertices"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw IoError("polygon vertices must be integer pairs");
    pts.push_back({e[0].get<std::int64_t>(), e[1].get<std::int64_t>()});
  }
  if (pts.empty()) throw IoError("polygon needs at least one vertex");
  return convex_hull(pts);
}

LatticePolygon read_polygon_json(const std::string& path) {
  return parse_polygon_json_text(slurp(path));
}

namespace {

ScalarField field_from_expr(const std::string& src) {
  const ExprAst ast = parse(src);
  return ScalarField([ast](double x, double y) { return eval_expr(ast, x, y); });
}

}  // namespace

KernelSpec parse_kernel_json_text(const std::string& text) {
  const nlohmann::json j = parse_json(text, "kernel");
  for (const char* key : {"f0", "f1", "rho"}) {
    if (!j.contains(key) || !j[key].is_string())
      throw IoError(std::string("kernel JSON needs string field \"") + key + "\"");
  }
  const ExprAst f0 = parse(j["f0"].get<std::string>());
  if (!is_constant_expr(f0)) throw IoError("kernel field \"f0\" must be constant");
  KernelSpec spec;
  spec.f0_const = eval_expr(f0, 0.0, 0.0);
  spec.f1_seed = field_from_expr(j["f1"].get<std::string>());
  spec.rho_seed = field_from_expr(j["rho"].get<std::string>());
  return spec;
}

KernelSpec read_kernel_json(const std::string& path) {
  try {
    return parse_kernel_json_text(slurp(path));
  } catch (const ParseError& e) {
    throw IoError("kernel file " + path + ": " + e.what());
  }
}

std::string residual_report_json(const ResidualReport& r) {
  nlohmann::json j;
  j["max_residual"] = r.max_residual;
  j["argmax_point"] = {r.argmax_point.x, r.argmax_point.y};
  j["samples"] = r.samples;
  return j.dump();
}

std::string suite_report_json(const SuiteReport& r) {
  // hand-rolled so max_residual keeps full precision deterministically
  std::string out = "{\"suite\": \"" + r.suite + "\", \"cases\": " +
                    std::to_string(r.cases) + ", \"max_residual\": " +
                    fmt17(r.max_residual) + ", \"pass\": " +
                    (r.pass ? "true" : "false") + "}";
  return out;
}

}  // namespace latval
