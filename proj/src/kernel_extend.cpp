#include "latval/kernel_extend.hpp"

#include <bit>
#include <cmath>
#include <mutex>
#include <unordered_map>

namespace latval {

namespace {

bool on_ray_band(double x, double y) {
  return std::fabs(x - kGoldenRatio * y) <= kRayBandRelTol * (1.0 + std::fabs(x));
}

// m with tau^m <= y < tau^{m+1}.
int ray_index(double y) {
  int m = static_cast<int>(std::floor(std::log(y) / std::log(kGoldenRatio)));
  while (std::pow(kGoldenRatio, m + 1) <= y) ++m;
  while (std::pow(kGoldenRatio, m) > y) --m;
  return m;
}

void require_nonneg(double x, double y, const char* who) {
  if (!(x >= 0.0) || !(y >= 0.0))
    throw std::domain_error(std::string(who) + ": arguments must be nonnegative");
}

}  // namespace

RegionTag region_tag(double x, double y) {
  require_nonneg(x, y, "region_tag");
  using K = RegionTag::Kind;
  if (x == 0.0 && y == 0.0) return {K::Origin, 0};
  if (y == 0.0) return {K::AxisX, 0};
  if (x <= y) return {K::InOmega2, 0};
  if (on_ray_band(x, y)) return {K::RaySegment, ray_index(y)};
  double a = x, b = y;
  int steps = 0;
  while (a > b) {
    if (++steps > kDescentCap) return {K::RaySegment, ray_index(y)};
    const double na = b, nb = a - b;
    a = na;
    b = nb;
  }
  return {K::OmegaIndex, steps - 1};
}

std::vector<Point2> region_descent_chain(double x, double y) {
  require_nonneg(x, y, "region_descent_chain");
  std::vector<Point2> chain{{x, y}};
  if (y == 0.0 || x <= y || on_ray_band(x, y)) return chain;
  double a = x, b = y;
  int steps = 0;
  while (a > b && steps++ < kDescentCap) {
    const double na = b, nb = a - b;
    a = na;
    b = nb;
    chain.push_back({a, b});
  }
  return chain;
}

struct RhoKernel::Memo {
  struct Key {
    std::uint64_t a, b;
    bool operator==(const Key&) const = default;
  };
  struct Hash {
    std::size_t operator()(const Key& k) const {
      std::uint64_t h = k.a * 0x9e3779b97f4a7c15ull;
      h ^= k.b + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      return static_cast<std::size_t>(h);
    }
  };
  std::mutex mu;
  std::unordered_map<Key, double, Hash> map;
};

RhoKernel::RhoKernel(ScalarField seed)
    : seed_(std::move(seed)), memo_(std::make_shared<Memo>()) {}

double RhoKernel::eval(double x, double y) const {
  require_nonneg(x, y, "RhoKernel::eval");
  return eval_impl(x, y);
}

double RhoKernel::eval_impl(double x, double y) const {
  const RegionTag tag = region_tag(x, y);
  using K = RegionTag::Kind;
  switch (tag.kind) {
    case K::Origin:
    case K::InOmega2:
      return seed_(x, y);
    case K::AxisX:
      return seed_(x, x);  // rho(x, 0) = rho(x, x)
    case K::RaySegment:
      if (tag.index == 0) return seed_(x, y);  // s_0 lies in the seed domain
      break;
    case K::OmegaIndex:
      break;
  }

  const Memo::Key key{std::bit_cast<std::uint64_t>(x), std::bit_cast<std::uint64_t>(y)};
  {
    std::lock_guard lock(memo_->mu);
    const auto it = memo_->map.find(key);
    if (it != memo_->map.end()) return it->second;
  }
  const double v = (tag.kind == K::RaySegment && tag.index < 0) ? ascend(x, y)
                                                                : descend(x, y);
  {
    std::lock_guard lock(memo_->mu);
    memo_->map.emplace(key, v);
  }
  return v;
}

// Solve the functional equation for its third term: for a point of
// {0 < y < x}, both (y, x - y) and (y, x) lie strictly closer to the seed
// domain, so the recursion terminates.
double RhoKernel::descend(double x, double y) const {
  return ((x + y) * eval_impl(y, x - y) - x * eval_impl(y, x)) / y;
}

// Upward recursion for ray segments s_m with m < 0; (x, x + y) is a seed
// point and (x + y, x) lies on s_{m+1}.
double RhoKernel::ascend(double x, double y) const {
  return ((x + y) * eval_impl(x, x + y) + x * eval_impl(x + y, x)) / (2.0 * x + y);
}

double F1Kernel::eval(double x, double y) const {
  if (x < 0.0) return std::exp(x) * eval(-x, -y);
  if (x == 0.0) return seed_(0.0, std::fabs(y));
  // Shift y by an integer multiple of x into [-x/2, x/2]; IEEE remainder is
  // exact, so equal canonical points give bit-identical results.
  const double yr = std::remainder(y, x);
  return seed_(x, std::fabs(yr));
}

double F2Kernel::eval(double x, double y) const {
  double a = std::min(x, y), b = std::max(x, y);
  double logfac = 0.0;
  for (int i = 0; i < 2 && (a < 0.0 || b < 0.0); ++i) {
    logfac += b;
    const double na = -b, nb = a - b;
    a = na;
    b = nb;
  }
  if (a > b) std::swap(a, b);
  if (b == 0.0) return std::exp(logfac) * 0.5 * rho_.eval(0.0, 0.0);
  const double r1 = rho_.eval(b - a, a);
  const double r2 = rho_.eval(a, b - a);
  return (std::exp(logfac + a) * phi_stable(b - a) * r1 -
          std::exp(logfac) * phi_stable(a) * r2) /
         b;
}

ScalarField tildef_to_rho(const ScalarField& f_tilde) {
  return ScalarField([f = f_tilde](double x, double y) {
    const double s = f(x, x + y) + std::exp(x) * f(y, x + y);
    return s / (phi_stable(x) * phi_stable(x + y));
  });
}

ScalarField rho_to_tildef(const RhoKernel& rho) {
  return ScalarField([r = rho](double x, double y) {
    if (y == 0.0) return 0.5 * r.eval(0.0, 0.0);  // only (0,0) has y = 0 here
    return (std::exp(x) * phi_stable(y - x) * r.eval(y - x, x) -
            phi_stable(x) * r.eval(x, y - x)) /
           y;
  });
}

}  // namespace latval
