#include "latval/stable_exp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace latval {

namespace {
constexpr double kEps = std::numeric_limits<double>::epsilon();
}

double phi_stable(double t) {
  if (std::fabs(t) >= 0.5) return std::expm1(t) / t;
  double sum = 1.0, term = 1.0;
  for (int n = 1; n < 40; ++n) {
    term *= t / (n + 1);
    sum += term;
    if (std::fabs(term) <= kEps * std::fabs(sum)) break;
  }
  return sum;
}

double sinhc(double z) {
  if (std::fabs(z) >= 0.5) return std::sinh(z) / z;
  const double z2 = z * z;
  double sum = 1.0, term = 1.0;
  for (int n = 1; n < 20; ++n) {
    term *= z2 / ((2 * n) * (2 * n + 1));
    sum += term;
    if (term <= kEps * sum) break;
  }
  return sum;
}

namespace {

// First divided difference exp[u, v] = e^{(u+v)/2} sinhc((v-u)/2).
double exp_divdiff1(double u, double v) {
  return std::exp(0.5 * (u + v)) * sinhc(0.5 * (v - u));
}

}  // namespace

double exp_divdiff2(double a, double b, double c) {
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);

  const double spread = c - a;
  if (spread > 1.0) {
    // Well-separated outer nodes: the straight recursion loses little.
    return (exp_divdiff1(b, c) - exp_divdiff1(a, b)) / spread;
  }

  // Clustered nodes: shift to the mean and sum the series
  //   exp[p,q,r] = sum_{m>=0} h_m(p,q,r) / (m+2)!
  // where h_m is the complete homogeneous symmetric polynomial, generated by
  //   h_m(p,q)   = p h_{m-1}(p,q) + q^m,
  //   h_m(p,q,r) = r h_{m-1}(p,q,r) + h_m(p,q).
  const double mu = (a + b + c) / 3.0;
  const double p = a - mu, q = b - mu, r = c - mu;
  double h2 = 1.0, h3 = 1.0, qpow = 1.0;
  double invfact = 0.5, sum = 0.5;
  int small_terms = 0;  // h_1 vanishes by the mean shift, so require two in a row
  for (int m = 1; m < 60 && small_terms < 2; ++m) {
    qpow *= q;
    h2 = p * h2 + qpow;
    h3 = r * h3 + h2;
    invfact /= (m + 2);
    const double term = h3 * invfact;
    sum += term;
    small_terms = std::fabs(term) <= kEps * std::fabs(sum) ? small_terms + 1 : 0;
  }
  return std::exp(mu) * sum;
}

}  // namespace latval
