#pragma once

#include <complex>
#include <optional>
#include <string>

namespace deltac::spectrum {

/// Dimensionless coupling z of H = -d^2/dx^2 + z delta(x).
/// The derived parameters are computed on demand, never stored.
struct Coupling {
  std::complex<double> z;

  double re() const { return z.real(); }
  double im() const { return z.imag(); }
  /// Re(z)^2 / 4
  double a() const { return 0.25 * z.real() * z.real(); }
  /// Im(z)^2 / 4
  double b() const { return 0.25 * z.imag() * z.imag(); }
  /// Im(z) / Re(z). Throws InvalidArgument when Re(z) = 0.
  double epsilon() const;

  /// z = Re(z) (1 + i eps)
  static Coupling from_re_eps(double re_z, double eps) { return Coupling{{re_z, re_z * eps}}; }
};

enum class SpectrumKind { BoundState, SpectralSingularity, CleanContinuum };

const char* to_string(SpectrumKind kind);

struct SpectralReport {
  SpectrumKind kind;
  /// -z^2/4 for a bound state or a spectral singularity.
  std::optional<std::complex<double>> special_E;
  std::string continuum = "[0, inf)";
};

/// Throws DegenerateCoupling for z = 0 and InvalidArgument for non-finite z.
SpectralReport classify(std::complex<double> z);

/// z = 2 m ell zeta / hbar^2. Throws InvalidArgument unless m, ell, hbar > 0.
Coupling nondimensionalize(double mass, double ell, std::complex<double> zeta, double hbar = 1.0);

/// Inverse of nondimensionalize: zeta = hbar^2 z / (2 m ell).
std::complex<double> dimensionalize(const Coupling& c, double mass, double ell, double hbar = 1.0);

struct TransferResult {
  std::complex<double> A_plus;
  std::complex<double> B_plus;
};

/// Amplitudes of e^{ikx}, e^{-ikx} for x > 0 given those for x < 0.
/// Throws InvalidArgument if both inputs vanish or k <= 0.
TransferResult transfer_coefficients(std::complex<double> A_minus, std::complex<double> B_minus,
                                     std::complex<double> z, double k);

}  // namespace deltac::spectrum
