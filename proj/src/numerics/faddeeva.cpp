#include "deltac/numerics/erf.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "deltac/errors.hpp"

namespace deltac::numerics {
namespace {

using cplx = std::complex<double>;

constexpr double kInvSqrtPi = std::numbers::inv_sqrtpi;
constexpr double kCfRadius = 8.5;

// Laplace continued fraction, upper half plane:
//   w(z) = (i/sqrt(pi)) / (z - (1/2)/(z - 1/(z - (3/2)/(z - ...))))
cplx faddeeva_continued_fraction(cplx z) {
  const double y = z.imag();
  const int terms = y >= 3.0 ? 40 : (y >= 2.0 ? 60 : 200);
  cplx tail{0.0, 0.0};
  for (int n = terms; n >= 1; --n) {
    tail = (0.5 * n) / (z - tail);
  }
  return cplx{0.0, kInvSqrtPi} / (z - tail);
}

// erf(x + iy) for x >= 0, y >= 0, x < 4 and |z| < 8.5 (Abramowitz & Stegun
// 7.1.29). Truncation leaves a relative error of order 1e-16 |erf|.
cplx erf_series_first_quadrant(double x, double y) {
  const double ex2 = std::exp(-x * x);
  const double s2 = std::sin(2.0 * x * y);
  const double c2 = std::cos(2.0 * x * y);

  cplx lead;
  if (x == 0.0) {
    lead = cplx{0.0, y / std::numbers::pi};
  } else {
    const double sxy = std::sin(x * y);
    lead = cplx{ex2 * sxy * sxy / (std::numbers::pi * x), ex2 * s2 / (2.0 * std::numbers::pi * x)};
  }

  // e^{-n^2/4} cosh(ny) peaks at n = 2y; beyond n = 2y + 16 terms are < 1e-28 of the peak.
  const int n_max = static_cast<int>(std::ceil(2.0 * y)) + 16;
  cplx sum{0.0, 0.0};
  for (int n = 1; n <= n_max; ++n) {
    const double nn = static_cast<double>(n);
    const double gauss = nn * nn / 4.0;
    const double ch = 0.5 * (std::exp(nn * y - gauss) + std::exp(-nn * y - gauss));
    const double sh = 0.5 * (std::exp(nn * y - gauss) - std::exp(-nn * y - gauss));
    const double c0 = std::exp(-gauss);
    const double denom = nn * nn + 4.0 * x * x;
    const double f = 2.0 * x * c0 - 2.0 * x * ch * c2 + nn * sh * s2;
    const double g = 2.0 * x * ch * s2 + nn * sh * c2;
    sum += cplx{f, g} / denom;
  }
  return std::erf(x) + lead + (2.0 / std::numbers::pi) * ex2 * sum;
}

cplx erf_first_quadrant(double x, double y) {
  const cplx z{x, y};
  if (x >= 4.0 || std::abs(z) >= kCfRadius) {
    // iz has Im >= 4 or |iz| >= 8.5: continued-fraction territory.
    return 1.0 - std::exp(-z * z) * faddeeva_continued_fraction(cplx{-y, x});
  }
  return erf_series_first_quadrant(x, y);
}

cplx erf_any(cplx w) {
  const double x = w.real();
  const double y = w.imag();
  cplx v = erf_first_quadrant(std::abs(x), std::abs(y));
  if ((x < 0.0) != (y < 0.0)) v = std::conj(v);
  if (x < 0.0) v = -v;
  return v;
}

}  // namespace

std::complex<double> faddeeva(std::complex<double> z) {
  if (z.imag() < 0.0) {
    return 2.0 * std::exp(-z * z) - faddeeva(-z);
  }
  if (z.imag() >= 1.0 || std::abs(z) >= kCfRadius) {
    return faddeeva_continued_fraction(z);
  }
  // -iz = y - ix has real part in [0, 1): erfc(-iz) carries no cancellation.
  return std::exp(-z * z) * (1.0 - erf_any(cplx{z.imag(), -z.real()}));
}

ComplexErfResult erf_complex(std::complex<double> w) {
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
    throw InvalidArgument("erf_complex: argument must be finite");
  }
  ComplexErfResult out;
  out.value = erf_any(w);
  const double mag = std::abs(out.value);
  out.est_abs_error = std::isfinite(mag) ? 5e-14 * std::max(1.0, mag)
                                         : std::numeric_limits<double>::infinity();
  return out;
}

std::complex<double> erfcx_complex(std::complex<double> w) {
  return faddeeva(cplx{-w.imag(), w.real()});
}

double erfcx(double x) { return faddeeva(cplx{0.0, x}).real(); }

}  // namespace deltac::numerics
