#include "heatcast/mathfn.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace heatcast::num {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kInvSqrt2Pi = 0.3989422804014327;

// Continued fraction for the incomplete beta function (modified Lentz).
double betacf(double a, double b, double x) {
  constexpr double kFpMin = 1e-300;
  constexpr double kEps = 1e-14;
  constexpr int kMaxIter = 500;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kFpMin) d = kFpMin;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) return h;
  }
  throw std::runtime_error("ibeta: continued fraction did not converge");
}

}  // namespace

double normal_pdf(double z) { return kInvSqrt2Pi * std::exp(-0.5 * z * z); }

double normal_cdf(double z) { return 0.5 * std::erfc(-z / kSqrt2); }

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("normal_quantile: p must lie in (0,1)");
  }
  // Acklam's rational approximation.
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;
  double x;
  if (p < plow) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - plow) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  // One Halley refinement.
  const double e = normal_cdf(x) - p;
  const double u = e / normal_pdf(x);
  x -= u / (1.0 + 0.5 * x * u);
  return x;
}

double ibeta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw std::invalid_argument("ibeta: a and b must be positive");
  }
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double lnbeta = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b);
  const double front = std::exp(lnbeta + a * std::log(x) + b * std::log1p(-x));
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * betacf(a, b, x) / a;
  }
  return 1.0 - front * betacf(b, a, 1.0 - x) / b;
}

double digamma(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("digamma: x must be positive");
  double result = 0.0;
  // Recurrence until the asymptotic series is accurate.
  while (x < 6.0) {
    result -= 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  result += std::log(x) - 0.5 * inv -
            inv2 * (1.0 / 12.0 - inv2 * (1.0 / 120.0 - inv2 * (1.0 / 252.0 -
                    inv2 * (1.0 / 240.0 - inv2 * (1.0 / 132.0)))));
  return result;
}

double student_t_log_pdf(double z, double nu) {
  if (!(nu > 0.0)) throw std::invalid_argument("student_t: nu must be positive");
  return std::lgamma(0.5 * (nu + 1.0)) - std::lgamma(0.5 * nu) -
         0.5 * std::log(nu * M_PI) -
         0.5 * (nu + 1.0) * std::log1p(z * z / nu);
}

double student_t_pdf(double z, double nu) { return std::exp(student_t_log_pdf(z, nu)); }

double student_t_cdf(double z, double nu) {
  if (!(nu > 0.0)) throw std::invalid_argument("student_t: nu must be positive");
  if (z == 0.0) return 0.5;
  const double p = 0.5 * ibeta(0.5 * nu, 0.5, nu / (nu + z * z));
  return z > 0.0 ? 1.0 - p : p;
}

double student_t_quantile(double p, double nu) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("student_t_quantile: p must lie in (0,1)");
  }
  if (!(nu > 0.0)) throw std::invalid_argument("student_t: nu must be positive");
  if (p == 0.5) return 0.0;
  // Work in the lower half, exploit symmetry.
  const bool upper = p > 0.5;
  const double ptail = upper ? 1.0 - p : p;

  // Start from the Gaussian quantile, scaled by the t tail if nu is small.
  double x = normal_quantile(ptail);
  if (nu < 30.0) {
    // Crude heavy-tail start: invert the leading tail term of the t CDF.
    const double lead =
        std::exp((std::lgamma(0.5 * (nu + 1.0)) - std::lgamma(0.5 * nu)) -
                 0.5 * std::log(nu * M_PI)) *
        2.0 / nu;
    const double xt = -std::pow(lead / (2.0 * ptail), 1.0 / nu) * std::sqrt(nu);
    if (xt < x) x = xt;
  }

  double lo = -std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (int it = 0; it < 100; ++it) {
    const double f = student_t_cdf(x, nu) - ptail;
    if (f > 0.0) {
      hi = std::min(hi, x);
    } else {
      lo = std::max(lo == -std::numeric_limits<double>::infinity()
                        ? -std::numeric_limits<double>::max()
                        : lo,
                    x);
    }
    const double dens = student_t_pdf(x, nu);
    double step = dens > 0.0 ? f / dens : 0.0;
    double xn = x - step;
    // Keep Newton inside the current bracket; bisect when it escapes.
    if (!(std::isfinite(xn)) || xn >= hi ||
        (std::isfinite(lo) && xn <= lo)) {
      if (std::isfinite(lo)) {
        xn = 0.5 * (lo + hi);
      } else {
        xn = x * 2.0 - hi;  // expand downward
      }
    }
    if (std::fabs(xn - x) < 1e-14 * (1.0 + std::fabs(x)) ||
        std::fabs(f) < 1e-15) {
      x = xn;
      break;
    }
    x = xn;
  }
  return upper ? -x : x;
}

}  // namespace heatcast::num
