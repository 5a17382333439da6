#include "deltac/hermitian/estimate.hpp"

#include <cmath>

#include "deltac/errors.hpp"

namespace deltac::hermitian {

namespace {

constexpr double kReferenceLAngstrom = 1e-10;
constexpr double kReferenceStrengthEv = 1e8;
constexpr double kReferenceValidity = 1e-4;
constexpr double kReferenceThermal = 1e-5;

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) throw InvalidArgument(std::string("defect_estimate: ") + name + " must be positive");
}

bool within_decade(double a, double b) { return std::abs(std::log10(a / b)) <= 1.0; }

}  // namespace

double nonhermitian_strength(double re_zeta, double d, double mass, const UnitSystem& units) {
  require_positive(re_zeta, "Re(zeta)");
  require_positive(d, "d");
  require_positive(mass, "mass");
  return mass * re_zeta * re_zeta / (8.0 * units.hbar * units.hbar * d);
}

DefectReport defect_estimate(const DefectInputs& in, const UnitSystem& units) {
  require_positive(in.d, "d");
  require_positive(in.strength, "strength");
  require_positive(in.mass, "mass");
  require_positive(in.temperature, "temperature");
  if (!std::isfinite(units.joule_per_energy) || !std::isfinite(units.meter_per_length)) {
    throw InvalidArgument("defect_estimate: needs a physical unit system (ev-angstrom or si)");
  }
  using namespace constants;
  const double to_ev = units.joule_per_energy / joule_per_ev;
  const double to_angstrom = units.meter_per_length / meter_per_angstrom;

  DefectReport r{};
  r.units = units;
  r.inputs = in;
  r.re_zeta = in.strength * in.d;
  r.L = units.hbar * units.hbar / (in.mass * r.re_zeta);
  r.strength_per_eps2 = nonhermitian_strength(r.re_zeta, in.d, in.mass, units);
  r.energy_scale_per_eps2 = r.strength_per_eps2 * in.d;

  const double re_zeta_si = r.re_zeta * units.joule_per_energy * units.meter_per_length;
  const double d_si = in.d * units.meter_per_length;
  const double mass_si = in.mass * units.kg_per_mass;
  r.strength_per_eps2_si_numeric_ev =
      nonhermitian_strength(re_zeta_si, d_si, mass_si, UnitSystem::si()) / joule_per_ev;

  const double strength_ev = in.strength * to_ev;
  const double kT_ev = in.temperature * to_ev;
  r.eps_validity = std::sqrt(strength_ev / r.strength_per_eps2_si_numeric_ev);
  r.eps_thermal = std::sqrt(kT_ev / r.strength_per_eps2_si_numeric_ev);
  r.eps_validity_consistent = std::sqrt(in.strength / r.energy_scale_per_eps2);
  r.eps_thermal_consistent = std::sqrt(in.temperature / r.energy_scale_per_eps2);

  r.reference_L_angstrom = kReferenceLAngstrom;
  r.reference_strength_per_eps2_ev = kReferenceStrengthEv;
  r.reference_eps_validity = kReferenceValidity;
  r.reference_eps_thermal = kReferenceThermal;

  const double L_angstrom = r.L * to_angstrom;
  r.L_mismatch = !within_decade(L_angstrom, kReferenceLAngstrom);
  r.strength_mismatch = !within_decade(r.energy_scale_per_eps2 * to_ev, kReferenceStrengthEv);
  r.reference_L_is_si_metres = within_decade(L_angstrom * meter_per_angstrom, kReferenceLAngstrom);
  r.reference_strength_is_si_numeric = within_decade(r.strength_per_eps2_si_numeric_ev, kReferenceStrengthEv);

  r.note =
      "Re(zeta) = strength * d (the real strength read as Re(zeta)/d). L = hbar^2/(m Re(zeta)). "
      "m Re(zeta)^2/(8 hbar^2 d) has units of energy/length; its SI value in J/m, read as joules and "
      "converted to eV, is what the eV-labelled strength reports. The consistent energy scale is "
      "m Re(zeta)^2/(8 hbar^2).";
  if (r.L_mismatch && r.reference_L_is_si_metres) {
    r.note += " The reference L matches L in metres, not Angstrom.";
  }
  if (r.strength_mismatch && r.reference_strength_is_si_numeric) {
    r.note += " The reference eps^2 strength matches the SI-numeric value, not an energy.";
  }
  return r;
}

DefectInputs si_to_ev_angstrom(const DefectInputs& si) {
  using namespace constants;
  return {si.d / meter_per_angstrom, si.strength / joule_per_ev, si.mass / electron_mass_kg,
          si.temperature / joule_per_ev};
}

}  // namespace deltac::hermitian
