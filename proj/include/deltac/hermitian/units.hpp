#pragma once

#include <complex>
#include <string>

namespace deltac::hermitian {

/// A consistent set of units. Quantities passed to the hermitian module are
/// plain numbers in the chosen system.
struct UnitSystem {
  std::string name;
  double hbar;            // in (energy unit) * (time unit), expressed so that hbar^2/mass is energy*length^2
  double electron_mass;   // in the system's mass unit
  double joule_per_energy;
  double meter_per_length;
  double kg_per_mass;

  /// hbar = 1; energy, length and mass units left abstract.
  static UnitSystem natural();
  /// energy eV, length Angstrom, mass in electron masses: hbar^2/m_e = 7.6199682 eV A^2.
  static UnitSystem ev_angstrom();
  /// SI: J, m, kg.
  static UnitSystem si();
};

namespace constants {
inline constexpr double hbar_c_ev_angstrom = 1973.269804;     // eV A
inline constexpr double electron_rest_energy_ev = 510998.95;  // eV
inline constexpr double hbar_si = 1.054571817e-34;            // J s
inline constexpr double electron_mass_kg = 9.1093837015e-31;
inline constexpr double joule_per_ev = 1.602176634e-19;
inline constexpr double meter_per_angstrom = 1e-10;
}  // namespace constants

/// Mass, hbar and the complex coupling strength zeta (energy * length).
struct PhysicalContext {
  double mass = 1.0;
  double hbar = 1.0;
  std::complex<double> zeta{1.0, 0.0};

  /// Throws InvalidArgument unless mass, hbar > 0, zeta finite and Re(zeta) > 0.
  void validate() const;
  /// L = hbar^2 / (m Re(zeta))
  double L() const { return hbar * hbar / (mass * zeta.real()); }

  /// Context in natural units whose length scale is L (m = hbar = 1).
  static PhysicalContext with_length_scale(double L, double im_over_re = 0.0);
};

/// Throws InvalidArgument for Re(zeta) <= 0.
double length_scale(const PhysicalContext& ctx);

}  // namespace deltac::hermitian
