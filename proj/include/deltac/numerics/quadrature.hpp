#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <type_traits>
#include <utility>

namespace deltac::numerics {

/// How oscillatory integrals are cut into pieces.
struct OscillationSplit {
  /// The finite part [0, tail start] is integrated panel by panel (one panel
  /// per half period of the oscillating factor) when it spans at most this many
  /// half periods; beyond that a single adaptive pass is used.
  int max_finite_half_periods = 400;
  /// Half-period tail panels summed before the extrapolation gives up.
  int max_tail_panels = 300;
};

struct QuadratureSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_subdivisions = 2000;
  /// Semi-infinite oscillatory tails switch to panel summation with
  /// epsilon-algorithm extrapolation beyond this abscissa.
  double tail_cutoff = 16.0;
  OscillationSplit oscillation_split{};

  /// Throws InvalidArgument unless tolerances are positive and max_subdivisions >= 1.
  void validate() const;

  /// Same spec with both tolerances multiplied by `factor`.
  QuadratureSpec scaled(double factor) const;
};

template <class T>
struct QuadratureResult {
  T value{};
  double est_error = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;

  /// Sums values, errors and evaluation counts; converged only if both are.
  QuadratureResult& operator+=(const QuadratureResult& other) {
    value += other.value;
    est_error += other.est_error;
    evaluations += other.evaluations;
    converged = converged && other.converged;
    return *this;
  }
};

using RealFunction = std::function<double(double)>;
using ComplexFunction = std::function<std::complex<double>(double)>;

namespace detail {

/// Globally adaptive 21-point Gauss-Kronrod (bisect the interval with the
/// largest error estimate until the total meets the tolerance).
template <class T>
QuadratureResult<T> adaptive_gauss_kronrod(const std::function<T(double)>& f, double lo, double hi,
                                           const QuadratureSpec& spec);

extern template QuadratureResult<double> adaptive_gauss_kronrod<double>(const RealFunction&, double,
                                                                        double, const QuadratureSpec&);
extern template QuadratureResult<std::complex<double>> adaptive_gauss_kronrod<std::complex<double>>(
    const ComplexFunction&, double, double, const QuadratureSpec&);

template <class F>
using value_of = std::conditional_t<std::is_convertible_v<std::invoke_result_t<F&, double>, double>,
                                    double, std::complex<double>>;

}  // namespace detail

/// Adaptive quadrature of f over [lo, hi]; lo < hi is required.
/// Non-convergence is reported through `converged`, never thrown.
template <class F>
auto integrate_finite(F&& f, double lo, double hi, const QuadratureSpec& spec = {}) {
  using T = detail::value_of<F>;
  return detail::adaptive_gauss_kronrod<T>(std::function<T(double)>(std::forward<F>(f)), lo, hi, spec);
}

/// Integrates over consecutive breakpoints [b0,b1], [b1,b2], ... and sums.
/// The tolerance is shared evenly between pieces.
template <class F>
auto integrate_piecewise(F&& f, std::span<const double> breakpoints, const QuadratureSpec& spec = {}) {
  using T = detail::value_of<F>;
  const std::function<T(double)> fn(std::forward<F>(f));
  QuadratureResult<T> total;
  total.converged = true;
  const auto pieces = breakpoints.size() > 1 ? breakpoints.size() - 1 : 1;
  const QuadratureSpec piece_spec = spec.scaled(1.0 / static_cast<double>(pieces));
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (breakpoints[i + 1] > breakpoints[i]) {
      total += detail::adaptive_gauss_kronrod<T>(fn, breakpoints[i], breakpoints[i + 1], piece_spec);
    }
  }
  return total;
}

/// Integral over [lo, inf) of a non-oscillatory integrable f, through the
/// map x = lo + t/(1-t) onto [0, 1).
template <class F>
auto integrate_semi_infinite(F&& f, double lo, const QuadratureSpec& spec = {}) {
  using T = detail::value_of<F>;
  const std::function<T(double)> fn(std::forward<F>(f));
  const std::function<T(double)> mapped = [fn, lo](double t) -> T {
    const double one_minus = 1.0 - t;
    return fn(lo + t / one_minus) / (one_minus * one_minus);
  };
  return detail::adaptive_gauss_kronrod<T>(mapped, 0.0, 1.0, spec);
}

}  // namespace deltac::numerics
