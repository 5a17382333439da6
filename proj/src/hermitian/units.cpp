#include "deltac/hermitian/units.hpp"

#include <cmath>
#include <limits>

#include "deltac/errors.hpp"

namespace deltac::hermitian {

UnitSystem UnitSystem::natural() {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  return {"natural", 1.0, 1.0, nan, nan, nan};
}

UnitSystem UnitSystem::ev_angstrom() {
  using namespace constants;
  // mass unit m_e, so hbar^2 = hbar^2/m_e in eV A^2
  const double hbar2 = hbar_c_ev_angstrom * hbar_c_ev_angstrom / electron_rest_energy_ev;
  return {"ev-angstrom", std::sqrt(hbar2), 1.0, joule_per_ev, meter_per_angstrom, constants::electron_mass_kg};
}

UnitSystem UnitSystem::si() { return {"si", constants::hbar_si, constants::electron_mass_kg, 1.0, 1.0, 1.0}; }

void PhysicalContext::validate() const {
  if (!(mass > 0.0) || !std::isfinite(mass)) throw InvalidArgument("PhysicalContext: mass must be positive");
  if (!(hbar > 0.0) || !std::isfinite(hbar)) throw InvalidArgument("PhysicalContext: hbar must be positive");
  if (!std::isfinite(zeta.real()) || !std::isfinite(zeta.imag())) {
    throw InvalidArgument("PhysicalContext: zeta must be finite");
  }
  if (!(zeta.real() > 0.0)) throw InvalidArgument("PhysicalContext: Re(zeta) must be positive");
}

PhysicalContext PhysicalContext::with_length_scale(double L, double im_over_re) {
  if (!(L > 0.0)) throw InvalidArgument("with_length_scale: L must be positive");
  const double re = 1.0 / L;
  return {1.0, 1.0, {re, im_over_re * re}};
}

double length_scale(const PhysicalContext& ctx) {
  ctx.validate();
  return ctx.L();
}

}  // namespace deltac::hermitian
