#include "deltac/cli/commands.hpp"

#include <cmath>

#include "deltac/errors.hpp"
#include "deltac/hermitian/energy.hpp"
#include "deltac/hermitian/hamiltonian.hpp"
#include "deltac/metric/kernels.hpp"

namespace deltac::cli {

using io::Cell;

io::Table kernel_table(const std::string& m, std::complex<double> z, const Range& grid, bool printed) {
  const spectrum::Coupling c{z};
  const auto pts = grid.points();
  io::Table t;
  t.columns = {"x", "y", "m", "re_eta", "im_eta"};
  if (m == "h2") {
    t.columns.push_back("delta_x_coeff");
    t.columns.push_back("delta_y_coeff");
    for (double x : pts) {
      for (double y : pts) {
        const auto s = hermitian::h2_kernel_dimensionless(x, y, c);
        t.add({x, y, std::string("h2"), 0.0, 0.0, s.delta_x_coeff, s.delta_y_coeff});
      }
    }
    return t;
  }
  if (m.size() != 1 || m[0] < '0' || m[0] > '3') throw Unsupported("kernel: --m must be 0, 1, 2, 3 or h2, got '" + m + "'");
  const int order = m[0] - '0';
  metric::require_positive_re(c, "kernel");
  const auto variant = printed ? metric::KernelVariant::AsPrinted : metric::KernelVariant::Derived;
  for (double x : pts) {
    for (double y : pts) {
      const auto v = metric::eta_order_kernel(order, c, x, y, variant);
      t.add({x, y, static_cast<long long>(order), v.real(), v.imag()});
    }
  }
  return t;
}

namespace {

void add_energy_row(io::Table& t, double sigma, double k_or_a, double L, const hermitian::EnergyBreakdown& e) {
  t.add({sigma, k_or_a, L, e.omega_or_gamma, e.kinetic_plus_width, e.real_coupling_term, e.nonhermitian_term,
         e.total(), e.method});
}

}  // namespace

io::Table sweep_table(const SweepOptions& opt) {
  using namespace hermitian;
  const auto ctx = PhysicalContext::with_length_scale(opt.L, opt.im_ratio);
  io::Table t;
  t.columns = {"sigma", "k_or_xmean", "L", "omega_or_gamma", "E_kinetic", "E_coupling", "E_nonhermitian", "E_total",
               "method"};
  if (opt.target == "omega" || opt.target == "energy") {
    const auto method =
        opt.target == "energy" && opt.quadrature ? EnergyMethod::Quadrature : EnergyMethod::ClosedForm;
    for (double k : opt.k) {
      for (double s : opt.sigma.points()) add_energy_row(t, s, k, opt.L, energy_expectation({s, k, 0.0}, ctx, method));
    }
  } else if (opt.target == "gamma") {
    for (double s : opt.sigmas) {
      for (double a : opt.a.points()) {
        add_energy_row(t, s, a, opt.L, energy_expectation({s, 0.0, a}, ctx, EnergyMethod::ClosedForm));
      }
    }
  } else {
    throw InvalidArgument("sweep: --target must be omega, gamma or energy");
  }
  return t;
}

io::Table estimate_table(const hermitian::DefectReport& r) {
  const bool si = r.units.name == "si";
  const std::string E = si ? "J" : "eV", len = si ? "m" : "A", mass = si ? "kg" : "m_e";
  io::Table t;
  t.columns = {"quantity", "value", "unit"};
  auto flag = [](bool b) { return static_cast<long long>(b); };
  t.add({std::string("d"), r.inputs.d, len});
  t.add({std::string("strength"), r.inputs.strength, E});
  t.add({std::string("mass"), r.inputs.mass, mass});
  t.add({std::string("kT"), r.inputs.temperature, E});
  t.add({std::string("re_zeta"), r.re_zeta, E + "*" + len});
  t.add({std::string("L"), r.L, len});
  t.add({std::string("nonhermitian_strength_printed"), r.strength_per_eps2, E + "/" + len});
  t.add({std::string("nonhermitian_strength_si_numeric"), r.strength_per_eps2_si_numeric_ev, std::string("eV (as labelled)")});
  t.add({std::string("nonhermitian_energy_scale"), r.energy_scale_per_eps2, E});
  t.add({std::string("eps_validity_upper"), r.eps_validity, std::string("1")});
  t.add({std::string("eps_thermal_lower"), r.eps_thermal, std::string("1")});
  t.add({std::string("eps_validity_upper_consistent"), r.eps_validity_consistent, std::string("1")});
  t.add({std::string("eps_thermal_lower_consistent"), r.eps_thermal_consistent, std::string("1")});
  t.add({std::string("reference_L"), r.reference_L_angstrom, std::string("A (as labelled)")});
  t.add({std::string("reference_nonhermitian_strength"), r.reference_strength_per_eps2_ev, std::string("eV (as labelled)")});
  t.add({std::string("reference_eps_validity_upper"), r.reference_eps_validity, std::string("1")});
  t.add({std::string("reference_eps_thermal_lower"), r.reference_eps_thermal, std::string("1")});
  t.add({std::string("L_mismatch"), flag(r.L_mismatch), std::string("bool")});
  t.add({std::string("strength_mismatch"), flag(r.strength_mismatch), std::string("bool")});
  t.add({std::string("reference_L_is_si_metres"), flag(r.reference_L_is_si_metres), std::string("bool")});
  t.add({std::string("reference_strength_is_si_numeric"), flag(r.reference_strength_is_si_numeric), std::string("bool")});
  t.add({std::string("note"), r.note, std::string("")});
  return t;
}

}  // namespace deltac::cli
