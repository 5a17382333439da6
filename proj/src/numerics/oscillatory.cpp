#include "deltac/numerics/oscillatory.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <span>
#include <cmath>
#include <numbers>
#include <vector>

#include "deltac/errors.hpp"

namespace deltac::numerics {
namespace {

using cplx = std::complex<double>;

// Epsilon table over s; returns the entry from the highest even column that
// can be built before differences vanish.
cplx epsilon_table_limit(std::span<const cplx> s) {
  const std::size_t m = s.size();
  std::vector<cplx> prev(m + 1, cplx{});  // column k-1
  std::vector<cplx> cur(s.begin(), s.end());  // column k
  cplx best = s.back();
  for (std::size_t k = 0; k + 1 < m; ++k) {
    std::vector<cplx> next(cur.size() - 1);
    bool degenerate = false;
    for (std::size_t j = 0; j + 1 < cur.size(); ++j) {
      const cplx diff = cur[j + 1] - cur[j];
      const double scale = std::max(std::abs(cur[j + 1]), std::abs(cur[j]));
      if (std::abs(diff) <= 1e-15 * scale || diff == cplx{}) {
        degenerate = true;
        break;
      }
      next[j] = prev[j + 1] + 1.0 / diff;
    }
    if (degenerate) break;
    prev = std::move(cur);
    cur = std::move(next);
    if (k % 2 == 1) best = cur.back();  // columns 2, 4, ... hold limit estimates
  }
  return best;
}

}  // namespace

Extrapolation wynn_epsilon(const std::vector<std::complex<double>>& partial_sums) {
  constexpr std::size_t kWindow = 21;
  const std::size_t n = partial_sums.size();
  if (n == 0) return {cplx{}, 0.0};
  auto estimate = [&](std::size_t count) {
    const std::size_t w = std::min(count, kWindow);
    return epsilon_table_limit(std::span<const cplx>(partial_sums.data() + count - w, w));
  };
  const cplx e0 = estimate(n);
  if (n < 3) return {e0, std::abs(e0 - partial_sums.front()) + std::abs(e0)};
  const cplx e1 = estimate(n - 1);
  const cplx e2 = estimate(n - 2);
  return {e0, std::abs(e0 - e1) + std::abs(e0 - e2)};
}

std::complex<double> probe_tail_limit(const ComplexFunction& h, double start) {
  const double k0 = std::max(start, 1.0) * 1e4;
  std::array<cplx, 4> v;
  for (int j = 0; j < 4; ++j) v[j] = h(k0 * std::pow(10.0, j));
  for (const cplx& x : v) {
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
      throw Unsupported("oscillatory integral: amplitude is not finite in the tail");
    }
  }
  const double d1 = std::abs(v[1] - v[0]);
  const double d2 = std::abs(v[2] - v[1]);
  const double d3 = std::abs(v[3] - v[2]);
  const double scale = std::max(1.0, std::abs(v[3]));
  const bool settling = d3 <= 1e-12 * scale || (d3 <= 0.5 * d2 && d2 <= 0.5 * d1);
  if (!settling) {
    throw Unsupported("oscillatory integral: amplitude tail neither decays nor tends to a constant");
  }
  const bool decaying = std::abs(v[3]) < 1e-12 ||
                        (std::abs(v[3]) <= 0.5 * std::abs(v[2]) && std::abs(v[2]) <= 0.5 * std::abs(v[1]));
  const cplx limit = decaying ? cplx{} : v[3];
  // Guard against oscillating amplitudes that pass the ratio test by accident.
  const double last = k0 * 1e3;
  for (double factor : {1.1, 1.37, 1.73}) {
    if (std::abs(h(last * factor) - v[3]) > std::max(10.0 * d3, 1e-10 * scale)) {
      throw Unsupported("oscillatory integral: amplitude tail neither decays nor tends to a constant");
    }
  }
  return limit;
}

QuadratureResult<std::complex<double>> fourier_half_line(const ComplexFunction& h, double omega,
                                                         Trig kind, const QuadratureSpec& spec) {
  spec.validate();
  if (omega < 0.0) throw InvalidArgument("fourier_half_line: omega must be >= 0");

  if (omega == 0.0) {
    if (kind == Trig::Sin) return {cplx{}, 0.0, 0, true};
    return integrate_semi_infinite(h, 0.0, spec);
  }

  const ComplexFunction integrand = [&h, omega, kind](double k) -> cplx {
    const double phase = omega * k;
    return h(k) * (kind == Trig::Cos ? std::cos(phase) : std::sin(phase));
  };

  const double half_period = std::numbers::pi / omega;
  const double n_half = std::max(1.0, std::ceil(spec.tail_cutoff / half_period));
  const double tail_start = n_half * half_period;

  // Finite part: zeros of the trig factor (or a geometric ladder when a single
  // half period spans many integrand scales) as breakpoints.
  std::vector<double> breaks{0.0};
  if (n_half <= spec.oscillation_split.max_finite_half_periods) {
    if (n_half == 1.0) {
      for (double b = spec.tail_cutoff; b < tail_start; b *= 4.0) breaks.push_back(b);
    } else {
      for (int j = 1; j < static_cast<int>(n_half); ++j) breaks.push_back(j * half_period);
    }
  }
  breaks.push_back(tail_start);

  const QuadratureSpec part_spec = spec.scaled(0.25);
  QuadratureResult<cplx> finite = integrate_piecewise(integrand, breaks, part_spec);

  // Tail: half-period panels, alternating in sign for monotone h.
  const QuadratureSpec panel_spec = spec.scaled(0.01);
  std::vector<cplx> sums;
  cplx running{};
  double panel_err = 0.0;
  std::size_t evals = 0;
  bool panels_ok = true;
  Extrapolation ext{cplx{}, std::numeric_limits<double>::infinity()};
  bool tail_converged = false;
  const int max_panels = spec.oscillation_split.max_tail_panels;
  for (int j = 0; j < max_panels; ++j) {
    const double lo = tail_start + j * half_period;
    const auto panel = integrate_finite(integrand, lo, lo + half_period, panel_spec);
    running += panel.value;
    panel_err += panel.est_error;
    evals += panel.evaluations;
    panels_ok = panels_ok && panel.converged;
    sums.push_back(running);
    if (sums.size() < 6) continue;
    ext = wynn_epsilon(sums);
    const double tol = 0.5 * std::max(spec.abs_tol, spec.rel_tol * std::abs(finite.value + ext.value));
    if (ext.error <= tol) {
      tail_converged = true;
      break;
    }
  }

  QuadratureResult<cplx> out;
  out.value = finite.value + ext.value;
  out.est_error = finite.est_error + panel_err + ext.error;
  out.evaluations = finite.evaluations + evals;
  out.converged = finite.converged && panels_ok && tail_converged &&
                  out.est_error <= std::max(spec.abs_tol, spec.rel_tol * std::abs(out.value));
  return out;
}

FourierResult integrate_semi_infinite_oscillatory(const FourierIntegrand& integrand, double r,
                                                  FourierDomain domain, const QuadratureSpec& spec) {
  spec.validate();
  if (!integrand.amplitude) throw InvalidArgument("oscillatory integral: empty amplitude");
  if (!std::isfinite(r)) throw InvalidArgument("oscillatory integral: r must be finite");

  const ComplexFunction& g = integrand.amplitude;
  FourierResult out;
  out.tail_plus = integrand.tail_constant ? *integrand.tail_constant : probe_tail_limit(g, spec.tail_cutoff);

  const double omega = std::abs(r);
  const double sign = r < 0.0 ? -1.0 : 1.0;
  const cplx c_plus = out.tail_plus;
  const cplx i{0.0, 1.0};

  if (domain == FourierDomain::HalfLine) {
    out.tail_minus = cplx{};
    const ComplexFunction h = [&g, c_plus](double k) { return g(k) - c_plus; };
    auto cos_part = fourier_half_line(h, omega, Trig::Cos, spec.scaled(0.5));
    auto sin_part = fourier_half_line(h, omega, Trig::Sin, spec.scaled(0.5));
    out.smooth = cos_part;
    out.smooth.value += i * sign * sin_part.value;
    out.smooth.est_error += sin_part.est_error;
    out.smooth.evaluations += sin_part.evaluations;
    out.smooth.converged = cos_part.converged && sin_part.converged;
    out.delta_coeff = std::numbers::pi * c_plus;
    if (c_plus != cplx{}) {
      if (r == 0.0) throw Unsupported("half-line integral of a constant tail is singular at r = 0");
      out.smooth.value += i * c_plus / r;
    }
    return out;
  }

  cplx c_minus;
  switch (integrand.parity) {
    case Parity::Even: c_minus = c_plus; break;
    case Parity::Odd: c_minus = -c_plus; break;
    case Parity::None:
      c_minus = integrand.tail_constant_minus
                    ? *integrand.tail_constant_minus
                    : probe_tail_limit([&g](double k) { return g(-k); }, spec.tail_cutoff);
      break;
  }
  out.tail_minus = c_minus;

  const ComplexFunction plus = [&g, c_plus](double k) { return g(k) - c_plus; };
  const ComplexFunction minus = [&g, c_minus](double k) { return g(-k) - c_minus; };

  QuadratureResult<cplx> cos_part{cplx{}, 0.0, 0, true};
  QuadratureResult<cplx> sin_part{cplx{}, 0.0, 0, true};
  switch (integrand.parity) {
    case Parity::Even:
      cos_part = fourier_half_line(plus, omega, Trig::Cos, spec.scaled(0.5));
      cos_part.value *= 2.0;
      cos_part.est_error *= 2.0;
      break;
    case Parity::Odd:
      sin_part = fourier_half_line(plus, omega, Trig::Sin, spec.scaled(0.5));
      sin_part.value *= 2.0;
      sin_part.est_error *= 2.0;
      break;
    case Parity::None: {
      const ComplexFunction even = [&plus, &minus](double k) { return plus(k) + minus(k); };
      const ComplexFunction odd = [&plus, &minus](double k) { return plus(k) - minus(k); };
      cos_part = fourier_half_line(even, omega, Trig::Cos, spec.scaled(0.5));
      sin_part = fourier_half_line(odd, omega, Trig::Sin, spec.scaled(0.5));
      break;
    }
  }

  out.smooth.value = cos_part.value + i * sign * sin_part.value;
  out.smooth.est_error = cos_part.est_error + sin_part.est_error;
  out.smooth.evaluations = cos_part.evaluations + sin_part.evaluations;
  out.smooth.converged = cos_part.converged && sin_part.converged;
  out.delta_coeff = std::numbers::pi * (c_plus + c_minus);
  if (c_plus != c_minus) {
    if (r != 0.0) {
      out.smooth.value += i * (c_plus - c_minus) / r;
    } else if (integrand.parity != Parity::Odd) {
      throw Unsupported("whole-line integral with unequal tails is singular at r = 0");
    }
  }
  return out;
}

}  // namespace deltac::numerics
