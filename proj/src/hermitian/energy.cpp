#include "deltac/hermitian/energy.hpp"

#include <cmath>
#include <numbers>

#include "deltac/errors.hpp"
#include "deltac/numerics/erf.hpp"
#include "deltac/numerics/quadrature.hpp"

namespace deltac::hermitian {

using cplx = std::complex<double>;
using std::numbers::pi;

namespace {

void require_sigma(double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw InvalidArgument("sigma must be positive and finite");
}

// m / (2^{3/2} hbar^2)
double nh_prefactor(const PhysicalContext& ctx) { return ctx.mass / (2.0 * std::numbers::sqrt2 * ctx.hbar * ctx.hbar); }

}  // namespace

void GaussianPacket::validate() const {
  require_sigma(sigma);
  if (!std::isfinite(k_mean) || !std::isfinite(x_mean)) throw InvalidArgument("GaussianPacket: non-finite mean");
}

cplx GaussianPacket::operator()(double x) const {
  const double d = x - x_mean;
  return std::pow(pi * sigma * sigma, -0.25) * std::exp(cplx{-d * d / (2.0 * sigma * sigma), k_mean * x});
}

double omega(double sigma, double k, const PhysicalContext& ctx) {
  ctx.validate();
  require_sigma(sigma);
  const cplx u = cplx{1.0 / ctx.L(), k} * (sigma / std::numbers::sqrt2);
  const cplx both = 0.5 * (numerics::erfcx_complex(u) + numerics::erfcx_complex(std::conj(u)));
  if (std::abs(both.imag()) > 1e-12) {
    throw NumericalFailure("omega: imaginary residue " + std::to_string(both.imag()) + " exceeds 1e-12");
  }
  return both.real();
}

double omega_erf_form(double sigma, double k, const PhysicalContext& ctx) {
  ctx.validate();
  require_sigma(sigma);
  const double Linv = 1.0 / ctx.L();
  const double phase = Linv * k * sigma * sigma;
  const cplx u = cplx{Linv, k} * (sigma / std::numbers::sqrt2);
  const cplx e = std::exp(cplx{0.0, phase}) * numerics::erf_complex(u).value;
  return std::exp(-0.5 * (k * k - Linv * Linv) * sigma * sigma) * (std::cos(phase) - e.real());
}

double gamma_fn(double sigma, double x_mean, const PhysicalContext& ctx) {
  ctx.validate();
  require_sigma(sigma);
  const double L = ctx.L();
  const double a = std::abs(x_mean);
  const double p = (sigma / L + a / sigma) / std::numbers::sqrt2;
  const double q = (sigma / L - a / sigma) / std::numbers::sqrt2;
  const double first = std::exp(-a * a / (sigma * sigma)) * numerics::erfcx(p);
  double second;
  if (q >= 0.0) {
    second = std::exp(-a * a / (sigma * sigma)) * numerics::erfcx(q);
  } else {
    // erfcx(q) = 2 e^{q^2} - erfcx(-q); fold e^{q^2} into the Gaussian factor
    const double expo = sigma * sigma / (2.0 * L * L) - a / L - a * a / (2.0 * sigma * sigma);
    second = 2.0 * std::exp(expo) - std::exp(-a * a / (sigma * sigma)) * numerics::erfcx(-q);
  }
  return 0.5 * (first + second);
}

double gamma_erf_form(double sigma, double x_mean, const PhysicalContext& ctx) {
  ctx.validate();
  require_sigma(sigma);
  const double L = ctx.L();
  const double a = x_mean;
  const double p = (sigma / L + a / sigma) / std::numbers::sqrt2;
  const double q = (sigma / L - a / sigma) / std::numbers::sqrt2;
  return std::exp(-0.5 * (a * a / (sigma * sigma) - sigma * sigma / (L * L))) *
         (std::cosh(a / L) - 0.5 * std::exp(a / L) * std::erf(p) - 0.5 * std::exp(-a / L) * std::erf(q));
}

EnergyBreakdown energy_expectation(const GaussianPacket& packet, const PhysicalContext& ctx, EnergyMethod method) {
  ctx.validate();
  packet.validate();
  const double s = packet.sigma, k = packet.k_mean, a = packet.x_mean;
  const double hb2 = ctx.hbar * ctx.hbar;
  const double im2 = ctx.zeta.imag() * ctx.zeta.imag();

  EnergyBreakdown out;
  out.kinetic_plus_width = hb2 * (1.0 / (s * s) + 2.0 * k * k) / (4.0 * ctx.mass);
  out.coupling_from_density = ctx.zeta.real() * std::exp(-a * a / (s * s)) / (std::sqrt(pi) * s);

  if (method == EnergyMethod::ClosedForm) {
    if (a != 0.0 && k != 0.0) {
      throw Unsupported("energy_expectation: no closed form for a packet with both x_mean and k_mean nonzero; "
                        "use the quadrature method");
    }
    if (a == 0.0) {
      out.method = "closed_form_omega";
      out.real_coupling_term = ctx.zeta.real() / (std::sqrt(pi) * s);
      out.omega_or_gamma = omega(s, k, ctx);
    } else {
      out.method = "closed_form_gamma";
      const double L = ctx.L();
      // coupling factor as printed: e^{-a^2/2L^2}
      out.real_coupling_term = std::exp(-a * a / (2.0 * L * L)) * ctx.zeta.real() / (std::sqrt(pi) * s);
      out.omega_or_gamma = gamma_fn(s, a, ctx);
    }
  } else {
    out.method = "quadrature";
    out.real_coupling_term = out.coupling_from_density;
    // <Psi|h2 Psi> = (m/8 hbar^2) 2 Re[conj(Psi(0)) int e^{-|y|/L} Psi(y) dy]
    const double L = ctx.L();
    numerics::QuadratureSpec spec;
    spec.abs_tol = 1e-15;
    spec.rel_tol = 1e-13;
    const auto f = [&](double y) { return std::exp(-std::abs(y) / L) * packet(y); };
    const auto right = numerics::integrate_semi_infinite(f, 0.0, spec);
    const auto left = numerics::integrate_semi_infinite([&](double y) { return f(-y); }, 0.0, spec);
    const cplx integral = right.value + left.value;
    const double h2 = ctx.mass / (8.0 * hb2) * 2.0 * (std::conj(packet(0.0)) * integral).real();
    out.omega_or_gamma = h2 / nh_prefactor(ctx);
    if (!right.converged || !left.converged) out.truncation_note += "; quadrature not converged";
  }
  out.nonhermitian_term = nh_prefactor(ctx) * out.omega_or_gamma * im2;
  out.coupling_discrepancy = out.real_coupling_term - out.coupling_from_density;
  return out;
}

double omega_asymptotic(double sigma, const PhysicalContext& ctx, Regime regime) {
  ctx.validate();
  require_sigma(sigma);
  const double r = sigma / ctx.L();
  if (regime == Regime::Wide) {
    if (r < 3.0) throw OutOfRegime("energy_asymptotics: wide branch needs sigma/L >= 3");
    return std::sqrt(2.0 / pi) / r;
  }
  if (r > 1.0 / 3.0) throw OutOfRegime("energy_asymptotics: narrow branch needs sigma/L <= 1/3");
  return 1.0 - std::sqrt(2.0 / pi) * r + 0.5 * r * r;
}

EnergyBreakdown energy_asymptotics(double sigma, const PhysicalContext& ctx, Regime regime) {
  EnergyBreakdown out;
  out.omega_or_gamma = omega_asymptotic(sigma, ctx, regime);
  out.kinetic_plus_width = ctx.hbar * ctx.hbar / (4.0 * ctx.mass * sigma * sigma);
  out.real_coupling_term = ctx.zeta.real() / (std::sqrt(pi) * sigma);
  out.coupling_from_density = out.real_coupling_term;
  out.nonhermitian_term = nh_prefactor(ctx) * out.omega_or_gamma * ctx.zeta.imag() * ctx.zeta.imag();
  out.method = regime == Regime::Wide ? "asymptotic_wide" : "asymptotic_narrow";
  out.truncation_note = regime == Regime::Wide ? "O((L/sigma)^3) and O(Im(zeta)^3) omitted"
                                               : "O((sigma/L)^3) and O(Im(zeta)^3) omitted";
  return out;
}

}  // namespace deltac::hermitian
