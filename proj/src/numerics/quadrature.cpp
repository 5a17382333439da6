#include "deltac/numerics/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "deltac/errors.hpp"

namespace deltac::numerics {

void QuadratureSpec::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
    throw InvalidArgument("QuadratureSpec: abs_tol and rel_tol must be strictly positive");
  }
  if (max_subdivisions < 1) {
    throw InvalidArgument("QuadratureSpec: max_subdivisions must be >= 1");
  }
  if (!(tail_cutoff > 0.0)) {
    throw InvalidArgument("QuadratureSpec: tail_cutoff must be positive");
  }
  if (oscillation_split.max_tail_panels < 4 || oscillation_split.max_finite_half_periods < 1) {
    throw InvalidArgument("QuadratureSpec: oscillation split limits too small");
  }
}

QuadratureSpec QuadratureSpec::scaled(double factor) const {
  QuadratureSpec out = *this;
  out.abs_tol *= factor;
  out.rel_tol *= factor;
  return out;
}

namespace detail {
namespace {

// 21-point Kronrod nodes (positive half, last is the centre) and weights,
// with the embedded 10-point Gauss weights on the odd-indexed nodes.
constexpr std::array<double, 11> kNodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr std::array<double, 11> kKronrod = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525478400, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kGauss = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

template <class T>
struct Segment {
  double lo;
  double hi;
  T value;
  double error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

template <class T>
Segment<T> kronrod21(const std::function<T(double)>& f, double lo, double hi) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double centre = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  std::array<T, 21> fv;
  const T fc = f(centre);
  fv[20] = fc;
  for (int j = 0; j < 10; ++j) {
    const double dx = half * kNodes[j];
    fv[2 * j] = f(centre - dx);
    fv[2 * j + 1] = f(centre + dx);
  }

  T kronrod = fc * kKronrod[10];
  T gauss{};
  double res_abs = std::abs(fc) * kKronrod[10];
  for (int j = 0; j < 10; ++j) {
    const T pair = fv[2 * j] + fv[2 * j + 1];
    kronrod += kKronrod[j] * pair;
    res_abs += kKronrod[j] * (std::abs(fv[2 * j]) + std::abs(fv[2 * j + 1]));
    if (j % 2 == 1) gauss += kGauss[j / 2] * pair;
  }
  const T mean = kronrod * 0.5;
  double res_asc = kKronrod[10] * std::abs(fc - mean);
  for (int j = 0; j < 10; ++j) {
    res_asc += kKronrod[j] * (std::abs(fv[2 * j] - mean) + std::abs(fv[2 * j + 1] - mean));
  }

  res_abs *= std::abs(half);
  res_asc *= std::abs(half);
  double err = std::abs((kronrod - gauss) * half);
  if (res_asc != 0.0 && err != 0.0) {
    err = res_asc * std::min(1.0, std::pow(200.0 * err / res_asc, 1.5));
  }
  if (res_abs > std::numeric_limits<double>::min() / (50.0 * eps)) {
    err = std::max(50.0 * eps * res_abs, err);
  }
  return Segment<T>{lo, hi, kronrod * half, err};
}

}  // namespace

template <class T>
QuadratureResult<T> adaptive_gauss_kronrod(const std::function<T(double)>& f, double lo, double hi,
                                           const QuadratureSpec& spec) {
  spec.validate();
  if (!(lo < hi)) {
    throw InvalidArgument("integrate_finite: requires lo < hi");
  }

  std::priority_queue<Segment<T>> queue;
  queue.push(kronrod21(f, lo, hi));
  QuadratureResult<T> out;
  out.evaluations = 21;
  T total = queue.top().value;
  double total_err = queue.top().error;

  auto tolerance = [&](const T& value) { return std::max(spec.abs_tol, spec.rel_tol * std::abs(value)); };

  int segments = 1;
  bool roundoff_limited = false;
  while (total_err > tolerance(total) && segments < spec.max_subdivisions) {
    const Segment<T> worst = queue.top();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) {
      roundoff_limited = true;
      break;
    }
    queue.pop();
    const Segment<T> left = kronrod21(f, worst.lo, mid);
    const Segment<T> right = kronrod21(f, mid, worst.hi);
    out.evaluations += 42;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++segments;
  }

  // Re-sum from the segments to avoid drift from the running updates.
  T value{};
  double err = 0.0;
  while (!queue.empty()) {
    value += queue.top().value;
    err += queue.top().error;
    queue.pop();
  }
  out.value = value;
  out.est_error = err;
  out.converged = !roundoff_limited && std::isfinite(err) && err <= tolerance(value);
  return out;
}

template QuadratureResult<double> adaptive_gauss_kronrod<double>(const RealFunction&, double, double,
                                                                 const QuadratureSpec&);
template QuadratureResult<std::complex<double>> adaptive_gauss_kronrod<std::complex<double>>(
    const ComplexFunction&, double, double, const QuadratureSpec&);

}  // namespace detail
}  // namespace deltac::numerics
