#pragma once

#include <string>

#include "deltac/hermitian/units.hpp"

namespace deltac::hermitian {

/// m Re(zeta)^2 / (8 hbar^2 d) in the given units. Dimensionally this is an
/// energy per length, not an energy; see DefectReport.
double nonhermitian_strength(double re_zeta, double d, double mass, const UnitSystem& units);

struct DefectInputs {
  double d;            // defect size
  double strength;     // real part of the potential, as an energy
  double mass;
  double temperature;  // kT, as an energy
};

struct DefectReport {
  UnitSystem units;
  DefectInputs inputs;
  double re_zeta;  // strength * d (energy * length)
  double L;        // hbar^2 / (m re_zeta), system length unit

  /// m Re(zeta)^2 / (8 hbar^2 d), system energy/length unit.
  double strength_per_eps2;
  /// Numerical value of the same expression in SI base units (J/m),
  /// divided by J/eV. This is how an "eV" figure arises from the formula.
  double strength_per_eps2_si_numeric_ev;
  /// m Re(zeta)^2 / (8 hbar^2): the dimensionally consistent energy scale of
  /// <h2> Im(zeta)^2 for a packet of width ~ d, system energy unit.
  double energy_scale_per_eps2;

  /// From the SI-numeric strength in eV: eps << sqrt(strength / S), eps > sqrt(kT / S).
  double eps_validity;
  double eps_thermal;
  /// Same bounds from the consistent energy scale.
  double eps_validity_consistent;
  double eps_thermal_consistent;

  // Reference order-of-magnitude figures for d = 1 A, 1 eV, an electron, kT ~ 1e-2 eV.
  double reference_L_angstrom;            // 1e-10
  double reference_strength_per_eps2_ev;  // 1e8
  double reference_eps_validity;          // 1e-4
  double reference_eps_thermal;           // 1e-5

  bool L_mismatch;         // computed L (in A) off the reference one by more than a decade
  bool strength_mismatch;  // consistent energy scale (in eV) off the reference one by more than a decade
  bool reference_L_is_si_metres;        // reference number within a decade of L expressed in metres
  bool reference_strength_is_si_numeric;  // reference number within a decade of the SI-numeric value
  std::string note;
};

/// Needs the ev-angstrom or si preset. Throws InvalidArgument unless every
/// input is positive and finite.
DefectReport defect_estimate(const DefectInputs& in, const UnitSystem& units);

/// Converts SI inputs (m, J, kg, J) to electron-volt / Angstrom / m_e.
DefectInputs si_to_ev_angstrom(const DefectInputs& si);

}  // namespace deltac::hermitian
