#include "deltac/spectrum/coupling.hpp"

#include <cmath>

#include "deltac/errors.hpp"

namespace deltac::spectrum {

double Coupling::epsilon() const {
  if (z.real() == 0.0) throw InvalidArgument("epsilon = Im(z)/Re(z) is undefined for Re(z) = 0");
  return z.imag() / z.real();
}

const char* to_string(SpectrumKind kind) {
  switch (kind) {
    case SpectrumKind::BoundState: return "BoundState";
    case SpectrumKind::SpectralSingularity: return "SpectralSingularity";
    case SpectrumKind::CleanContinuum: return "CleanContinuum";
  }
  return "?";
}

SpectralReport classify(std::complex<double> z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw InvalidArgument("classify: z must be finite");
  }
  if (z == std::complex<double>{}) {
    throw DegenerateCoupling("classify: z = 0 is the free particle and is not covered");
  }
  SpectralReport out;
  if (z.real() < 0.0) {
    out.kind = SpectrumKind::BoundState;
    out.special_E = -z * z / 4.0;
  } else if (z.real() == 0.0) {
    out.kind = SpectrumKind::SpectralSingularity;
    // z = i y gives E = y^2/4, real and positive
    out.special_E = std::complex<double>{z.imag() * z.imag() / 4.0, 0.0};
  } else {
    out.kind = SpectrumKind::CleanContinuum;
  }
  return out;
}

Coupling nondimensionalize(double mass, double ell, std::complex<double> zeta, double hbar) {
  if (!(mass > 0.0) || !(ell > 0.0) || !(hbar > 0.0)) {
    throw InvalidArgument("nondimensionalize: mass, length and hbar must be positive");
  }
  return Coupling{2.0 * mass * ell * zeta / (hbar * hbar)};
}

std::complex<double> dimensionalize(const Coupling& c, double mass, double ell, double hbar) {
  if (!(mass > 0.0) || !(ell > 0.0) || !(hbar > 0.0)) {
    throw InvalidArgument("dimensionalize: mass, length and hbar must be positive");
  }
  return hbar * hbar * c.z / (2.0 * mass * ell);
}

TransferResult transfer_coefficients(std::complex<double> A_minus, std::complex<double> B_minus,
                                     std::complex<double> z, double k) {
  if (!(k > 0.0)) throw InvalidArgument("transfer_coefficients: k must be positive");
  if (A_minus == std::complex<double>{} && B_minus == std::complex<double>{}) {
    throw InvalidArgument("transfer_coefficients: A- and B- must not both vanish");
  }
  const std::complex<double> t = std::complex<double>{0.0, 1.0} * z / (2.0 * k);
  return {(1.0 - t) * A_minus - t * B_minus, t * A_minus + (1.0 + t) * B_minus};
}

}  // namespace deltac::spectrum
