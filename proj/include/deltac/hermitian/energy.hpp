#pragma once

#include <complex>
#include <optional>
#include <string>

#include "deltac/hermitian/units.hpp"

namespace deltac::hermitian {

/// Psi(x) = (pi sigma^2)^{-1/4} exp(-(x - x_mean)^2 / 2 sigma^2 + i k_mean x)
struct GaussianPacket {
  double sigma = 1.0;
  double k_mean = 0.0;
  double x_mean = 0.0;

  void validate() const;
  std::complex<double> operator()(double x) const;
};

/// Omega(sigma, k) = Re[ exp(u^2) erfc(u) ], u = (1/L + ik) sigma / sqrt 2,
/// evaluated as (w(iu) + w(i conj u)) / 2 with the Faddeeva function w. The
/// imaginary part of that combination must vanish; NumericalFailure if it
/// exceeds 1e-12.
double omega(double sigma, double k, const PhysicalContext& ctx);

/// Omega written with erf exactly as the closed form displays it:
/// e^{-(k^2 - L^-2) sigma^2/2} [cos(k sigma^2/L) - Re{e^{i k sigma^2/L} erf(u)}].
/// Loses all accuracy once sigma/L is large (cancellation); for checks only.
double omega_erf_form(double sigma, double k, const PhysicalContext& ctx);

/// Gamma(sigma, a) = e^{-a^2/sigma^2} [erfcx(p) + erfcx(q)] / 2,
/// p, q = (sigma/L +- a/sigma) / sqrt 2. Even in a.
double gamma_fn(double sigma, double x_mean, const PhysicalContext& ctx);

/// Gamma in the displayed cosh/erf form; cancellation limits it to moderate arguments.
double gamma_erf_form(double sigma, double x_mean, const PhysicalContext& ctx);

enum class EnergyMethod { ClosedForm, Quadrature };

struct EnergyBreakdown {
  double kinetic_plus_width = 0.0;
  /// closed form: as printed; quadrature: Re(zeta) |Psi(0)|^2
  double real_coupling_term = 0.0;
  double nonhermitian_term = 0.0;
  /// Omega or Gamma (or the quadrature equivalent) behind nonhermitian_term
  double omega_or_gamma = 0.0;
  /// Re(zeta) |Psi(0)|^2, always
  double coupling_from_density = 0.0;
  /// real_coupling_term - coupling_from_density; nonzero only for the
  /// displaced-packet closed form, whose printed factor is e^{-a^2/2L^2}
  double coupling_discrepancy = 0.0;
  std::string truncation_note = "O(Im(zeta)^3) omitted";
  std::string method;

  double total() const { return kinetic_plus_width + real_coupling_term + nonhermitian_term; }
};

/// Closed form needs x_mean = 0 or k_mean = 0 (Unsupported otherwise).
/// Quadrature: kinetic and coupling terms analytic, the h2 pairing by quadrature.
EnergyBreakdown energy_expectation(const GaussianPacket& packet, const PhysicalContext& ctx, EnergyMethod method);

enum class Regime { Wide, Narrow };

/// Leading behaviour of Omega(sigma, 0): sqrt(2/pi) L/sigma for sigma >> L,
/// 1 - sqrt(2/pi) sigma/L + sigma^2/2L^2 for sigma << L.
/// Throws OutOfRegime unless sigma/L >= 3 (wide) or <= 1/3 (narrow).
double omega_asymptotic(double sigma, const PhysicalContext& ctx, Regime regime);

/// Stationary centred packet with the non-Hermitian term from omega_asymptotic.
EnergyBreakdown energy_asymptotics(double sigma, const PhysicalContext& ctx, Regime regime);

}  // namespace deltac::hermitian
