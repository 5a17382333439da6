#pragma once

#include <complex>
#include <optional>
#include <string>

#include "deltac/numerics/quadrature.hpp"
#include "deltac/spectrum/coupling.hpp"

namespace deltac::metric {

using spectrum::Coupling;

enum class Source { Series, Quadrature };

/// f(q, eps) = (1 + (eps^2 + 2(1 - q^2)) eps^2 / (q^2 + 1)^2)^{-1/2}.
/// Throws InvalidArgument if the radicand is not positive.
double f_eval(double q, double epsilon);

/// Truncation of f in powers of eps, keeping powers <= order (0..4).
/// Throws Unsupported for order > 4, InvalidArgument for order < 0.
double f_series(double q, double epsilon, int order);

/// Perturbative validity of eps = Im(z)/Re(z): refuse at |eps| >= 1 (throws
/// OutOfRegime), return a warning message above 0.3.
std::optional<std::string> check_epsilon(double epsilon);

/// Requires Re(z) > 0: throws SpectralSingularity for Re(z) = 0 and
/// InvalidArgument for Re(z) < 0 or z non-finite.
void require_positive_re(const Coupling& c, const char* where);

/// I_n(r) = delta_coeff * delta(r) + smooth.
struct InResult {
  double delta_coeff = 0.0;
  std::complex<double> smooth{};
  double est_error = 0.0;
  bool converged = true;
};

/// I_n(r) = a^{(1-n)/2} int e^{i s q} q^{2-n} f(q, eps) / (q^2 + 1) dq over the
/// real line, s = sqrt(a) r. For n = 0 the integrand tends to 1; that constant
/// is split off exactly as 2 pi delta(r).
InResult In_quadrature(int n, double r, const Coupling& c, const numerics::QuadratureSpec& spec = {});

/// Closed forms of I_0, I_1, I_2 through eps^2.
InResult In_series(int n, double r, const Coupling& c);

}  // namespace deltac::metric
