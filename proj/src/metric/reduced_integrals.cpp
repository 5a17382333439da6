#include "deltac/metric/reduced_integrals.hpp"

#include <cmath>
#include <numbers>

#include "deltac/errors.hpp"
#include "deltac/numerics/oscillatory.hpp"

namespace deltac::metric {

using cplx = std::complex<double>;
using std::numbers::pi;
namespace nm = numerics;

double f_eval(double q, double epsilon) {
  const double e2 = epsilon * epsilon;
  const double q2p1 = q * q + 1.0;
  const double radicand = 1.0 + (e2 + 2.0 * (1.0 - q * q)) * e2 / (q2p1 * q2p1);
  if (!(radicand > 0.0)) throw InvalidArgument("f_eval: non-positive radicand; epsilon out of range");
  return 1.0 / std::sqrt(radicand);
}

double f_series(double q, double epsilon, int order) {
  if (order < 0) throw InvalidArgument("f_series: order must be >= 0");
  if (order > 4) throw Unsupported("f_series: coefficients are available through eps^4 only");
  const double q2 = q * q;
  const double d = q2 + 1.0;
  const double e2 = epsilon * epsilon;
  double out = 1.0;
  if (order >= 2) out += (q2 - 1.0) / (d * d) * e2;
  if (order >= 4) out += (q2 * q2 - 4.0 * q2 + 1.0) / (d * d * d * d) * e2 * e2;
  return out;
}

std::optional<std::string> check_epsilon(double epsilon) {
  if (!std::isfinite(epsilon) || std::abs(epsilon) >= 1.0) {
    throw OutOfRegime("non-Hermiticity parameter |Im(z)/Re(z)| >= 1: perturbative metric refused");
  }
  if (std::abs(epsilon) > 0.3) {
    return std::string("warning: |Im(z)/Re(z)| = ") + std::to_string(std::abs(epsilon)) +
           " > 0.3; truncated series may be inaccurate";
  }
  return std::nullopt;
}

void require_positive_re(const Coupling& c, const char* where) {
  if (!std::isfinite(c.re()) || !std::isfinite(c.im())) {
    throw InvalidArgument(std::string(where) + ": z must be finite");
  }
  if (c.re() == 0.0) {
    throw SpectralSingularity(std::string(where) +
                              ": Re(z) = 0 gives a spectral singularity at E = -z^2/4; "
                              "the eigenfunctions are not biorthonormal there and no metric exists");
  }
  if (c.re() < 0.0) {
    throw InvalidArgument(std::string(where) + ": requires Re(z) > 0 (Re(z) < 0 has a bound state)");
  }
}

InResult In_quadrature(int n, double r, const Coupling& c, const nm::QuadratureSpec& spec) {
  require_positive_re(c, "In_quadrature");
  if (n < 0 || n > 2) throw InvalidArgument("In_quadrature: n must be 0, 1 or 2");
  const double eps = c.epsilon();
  const double sa = std::sqrt(c.a());
  const double s = sa * r;

  nm::FourierIntegrand integrand;
  integrand.parity = n == 1 ? nm::Parity::Odd : nm::Parity::Even;
  if (n == 0) {
    integrand.amplitude = [eps](double q) { return cplx{q * q * f_eval(q, eps) / (q * q + 1.0), 0.0}; };
    integrand.tail_constant = cplx{1.0, 0.0};
  } else if (n == 1) {
    integrand.amplitude = [eps](double q) { return cplx{q * f_eval(q, eps) / (q * q + 1.0), 0.0}; };
    integrand.tail_constant = cplx{};
  } else {
    integrand.amplitude = [eps](double q) { return cplx{f_eval(q, eps) / (q * q + 1.0), 0.0}; };
    integrand.tail_constant = cplx{};
  }
  const auto res = nm::integrate_semi_infinite_oscillatory(integrand, s, nm::FourierDomain::WholeLine, spec);
  const double scale = std::pow(c.a(), 0.5 * (1.0 - n));
  InResult out;
  out.smooth = scale * res.smooth.value;
  out.est_error = scale * res.smooth.est_error;
  out.converged = res.smooth.converged;
  // a^{1/2} * 2 pi delta(s) = 2 pi delta(r)
  out.delta_coeff = n == 0 ? 2.0 * pi : 0.0;
  return out;
}

InResult In_series(int n, double r, const Coupling& c) {
  require_positive_re(c, "In_series");
  if (n < 0 || n > 2) throw InvalidArgument("In_series: n must be 0, 1 or 2");
  const double e2 = c.epsilon() * c.epsilon();
  const double sa = std::sqrt(c.a());
  const double s = sa * r;
  const double as = std::abs(s);
  const double E = std::exp(-as);
  InResult out;
  switch (n) {
    case 0:
      out.delta_coeff = 2.0 * pi;
      out.smooth = 2.0 * pi * sa * (-0.5 * E + e2 * E * (s * s - 3.0 * as + 1.0) / 8.0);
      break;
    case 1: {
      const double sg = s > 0.0 ? 1.0 : (s < 0.0 ? -1.0 : 0.0);
      out.smooth = cplx{0.0, pi * sg * E * (1.0 + 0.25 * (1.0 - as) * as * e2)};
      break;
    }
    default:
      out.smooth = pi / sa * E * (1.0 - 0.25 * (s * s + as + 1.0) * e2);
  }
  return out;
}

}  // namespace deltac::metric
