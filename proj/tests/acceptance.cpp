// Acceptance criteria 1-10: one PASS/FAIL line each, with wall time.
// Exit status is non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "deltac/errors.hpp"
#include "deltac/hermitian/energy.hpp"
#include "deltac/hermitian/estimate.hpp"
#include "deltac/hermitian/hamiltonian.hpp"
#include "deltac/metric/apply.hpp"
#include "deltac/metric/kernels.hpp"
#include "deltac/metric/reduced_integrals.hpp"
#include "deltac/spectrum/biorthonormality.hpp"
#include "deltac/spectrum/coupling.hpp"

using cplx = std::complex<double>;
using namespace deltac;

namespace {

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> info;
  double time_limit = 0.0;  // seconds; 0 = none
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome classification() {
  Outcome o;
  o.time_limit = 1.0;
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  std::uniform_int_distribution<int> kind(0, 3);
  int wrong = 0, counts[3] = {0, 0, 0};
  for (int i = 0; i < 1000; ++i) {
    // a quarter of the samples sit exactly on the imaginary axis
    cplx z{kind(rng) == 0 ? 0.0 : u(rng), u(rng)};
    if (z == cplx{}) z = {0.0, 1.0};
    const auto r = spectrum::classify(z);
    const cplx E = -z * z / 4.0;
    if (z.real() < 0.0) {
      wrong += r.kind != spectrum::SpectrumKind::BoundState || !r.special_E || *r.special_E != E;
      ++counts[0];
    } else if (z.real() == 0.0) {
      wrong += r.kind != spectrum::SpectrumKind::SpectralSingularity || !r.special_E || *r.special_E != E ||
               r.special_E->imag() != 0.0;
      ++counts[1];
    } else {
      wrong += r.kind != spectrum::SpectrumKind::CleanContinuum || r.special_E.has_value();
      ++counts[2];
    }
  }
  bool zero_refused = false;
  try {
    spectrum::classify({0.0, 0.0});
  } catch (const DegenerateCoupling&) {
    zero_refused = true;
  }
  o.pass = wrong == 0 && zero_refused;
  o.summary = fmt("1000 samples (%d bound, %d singular, %d continuum), %d misclassified; z=0 refused: %s", counts[0],
                  counts[1], counts[2], wrong, zero_refused ? "yes" : "no");
  return o;
}

Outcome series_vs_oracle() {
  Outcome o;
  o.time_limit = 30.0;
  const double rs[] = {0.25, 0.5, 1.0, 2.0, 4.0};
  double worst_C = 0.0;
  for (int n = 0; n <= 2; ++n) {
    double res[2] = {0.0, 0.0};
    int i = 0;
    for (double eps : {0.1, 0.05}) {
      const auto c = metric::Coupling::from_re_eps(2.0, eps);  // a = 1
      for (double r : rs) {
        const double d = std::abs(metric::In_series(n, r, c).smooth - metric::In_quadrature(n, r, c).smooth);
        res[i] = std::max(res[i], d);
        worst_C = std::max(worst_C, d / std::pow(eps, 4));
      }
      ++i;
    }
    const double ratio = res[0] / res[1];
    const bool ok = ratio >= 12.0 && ratio <= 20.0;
    o.pass = o.pass && ok;
    o.info.push_back(fmt("I_%d: max residual %.3e (eps=0.1), %.3e (eps=0.05), ratio %.2f", n, res[0], res[1], ratio));
  }
  o.summary = fmt("per-n residual ratio in [12, 20]; C = max residual/eps^4 = %.3f", worst_C);
  return o;
}

Outcome kernel_assembly() {
  Outcome o;
  o.time_limit = 120.0;
  const auto c = metric::Coupling::from_re_eps(2.0, 0.1);
  metric::EtaAssembler eta(c, metric::Source::Quadrature);
  double worst = 0.0;
  bool exact = true;
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) {
      const double x = -2.25 + 0.5 * i, y = -2.25 + 0.5 * j;
      const auto s = eta(x, y);
      cplx sum{};
      for (int m = 1; m <= 3; ++m) sum += std::pow(0.1, m) * metric::eta_order_kernel(m, c, x, y);
      worst = std::max(worst, std::abs(s.smooth - sum));
      exact = exact && s.delta_diag == cplx{1.0, 0.0} && s.delta_anti == cplx{0.0, 0.0};
    }
  }
  o.pass = worst <= 1e-4 && exact && eta.converged();
  o.summary = fmt("10x10 grid on [-2.25, 2.25]^2, Re(z)=2, eps=0.1: max |assembly - order sum| = %.3e; "
                  "delta bookkeeping exactly {c_d=1, c_a=0}: %s",
                  worst, exact ? "yes" : "no");
  return o;
}

metric::GridFunction random_packet(std::mt19937_64& rng, const std::vector<double>& grid) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double c1 = 1.5 * u(rng), c2 = 1.5 * u(rng), k1 = 2.0 * u(rng), k2 = 2.0 * u(rng);
  const cplx a1{u(rng), u(rng)}, a2{u(rng), u(rng)};
  const double w = 0.6 + 0.3 * (u(rng) + 1.0);
  return metric::GridFunction::sample(grid, [=](double x) {
    return a1 * std::exp(cplx{-(x - c1) * (x - c1) / (2 * w * w), k1 * x}) +
           a2 * std::exp(cplx{-(x - c2) * (x - c2) / (2 * w * w), k2 * x});
  });
}

Outcome metric_properties() {
  Outcome o;
  std::mt19937_64 rng(202);
  std::uniform_real_distribution<double> pos(-3.0, 3.0), re(0.5, 4.0);
  double herm = 0.0, par = 0.0;
  for (int i = 0; i < 200; ++i) {
    const metric::Coupling c{{re(rng), 0.1}};
    const double x = pos(rng), y = pos(rng);
    for (int m = 1; m <= 3; ++m) {
      const cplx k = metric::eta_order_kernel(m, c, x, y);
      herm = std::max(herm, std::abs(k - std::conj(metric::eta_order_kernel(m, c, y, x))));
      par = std::max(par, std::abs(k - metric::eta_order_kernel(m, c, -x, -y)));
    }
  }
  o.info.push_back(fmt("Hermiticity defect %.3e, parity defect %.3e over 200 pairs x 3 orders", herm, par));

  const auto grid = metric::default_grid(-18.0, 18.0, 2.0);
  std::vector<metric::GridFunction> family;
  for (int i = 0; i < 8; ++i) family.push_back(random_packet(rng, grid));
  double min_eig = INFINITY;
  for (double eps : {0.01, 0.05, 0.1}) {
    const auto rep = metric::gram_matrix(family, metric::make_expansion(metric::Coupling::from_re_eps(2.0, eps)), 3);
    min_eig = std::min(min_eig, rep.eigenvalues.front());
    o.info.push_back(fmt("Gram eps=%.2f: min eigenvalue %.6e, Hermiticity defect %.2e", eps, rep.eigenvalues.front(),
                         rep.hermiticity_defect));
  }

  // eps -> 0: order-eps^0 smooth part from the eps-even combination
  double even = 0.0, literal = 0.0;
  metric::EtaAssembler plus(metric::Coupling::from_re_eps(2.0, 1e-4), metric::Source::Quadrature);
  metric::EtaAssembler minus(metric::Coupling::from_re_eps(2.0, -1e-4), metric::Source::Quadrature);
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      const double x = -2.0 + 1.0 * i + 0.1, y = -2.0 + 1.0 * j - 0.15;
      const cplx sp = plus(x, y).smooth, sm = minus(x, y).smooth;
      even = std::max(even, std::abs(0.5 * (sp + sm)));
      literal = std::max(literal, std::abs(sp));
    }
  }
  o.info.push_back(fmt("eps=1e-4: eps-even smooth part %.3e (gate 1e-8); literal smooth part %.3e (~eps eta^(1))",
                       even, literal));
  o.pass = herm <= 1e-12 && par <= 1e-12 && min_eig > 0.0 && even <= 1e-8;
  o.summary = fmt("Hermiticity/parity <= 1e-12, Gram positive definite (min eig %.3e), eps->0 identity %.2e", min_eig,
                  even);
  return o;
}

Outcome biorthonormality() {
  Outcome o;
  using spectrum::MomentumProfile;
  const cplx z{1.0, 0.3};
  const auto g = MomentumProfile::bump(1.0, 2.0);
  const auto far = MomentumProfile::bump(2.5, 3.0);
  const auto shifted = MomentumProfile::bump(1.5, 2.5, {0.5, 1.0}, 2.0);
  const auto h = MomentumProfile::bump(0.8, 1.6, {0.0, 2.0}, -1.0);
  struct Case {
    int a, b;
    const MomentumProfile *bra, *ket;
  };
  const Case cases[] = {{1, 1, &g, &g}, {2, 2, &g, &g}, {1, 2, &g, &shifted}, {2, 1, &h, &g}, {2, 2, &g, &far}, {1, 1, &h, &shifted}};
  double worst = 0.0;
  for (const auto& c : cases) {
    const auto r = spectrum::smeared_inner_product(c.a, c.b, *c.bra, *c.ket, z);
    worst = std::max(worst, std::abs(r.value - r.expected));
    o.pass = o.pass && r.converged;
  }
  std::string diag = "none";
  bool refused = false;
  try {
    spectrum::smeared_inner_product(2, 2, g, g, {0.0, 2.0});
  } catch (const SpectralSingularity& e) {
    refused = true;
    diag = e.what();
  }
  o.pass = o.pass && worst <= 1e-6 && refused;
  o.summary = fmt("6 profile pairs at z=1+0.3i: max |<psi_a|phi_b> - delta_ab<g,h>| = %.3e; z=2i refused: %s",
                  worst, refused ? "yes" : "no");
  o.info.push_back("refusal diagnostic: " + diag);
  return o;
}

Outcome hermitian_consistency() {
  Outcome o;
  const metric::Coupling c{{2.0, 0.2}};
  const auto chk = hermitian::commutator_kernel_check(c, hermitian::gaussian_test_pairs(12345));
  const auto ctx = hermitian::PhysicalContext::with_length_scale(1.0, 0.1);
  const auto grid = hermitian::symmetric_grid(25.0, 0.02);
  double odd_max = 0.0;
  const std::vector<std::function<cplx(double)>> odd = {
      [](double x) { return cplx{x * std::exp(-x * x), 0.0}; },
      [](double x) { return cplx{std::sin(3.0 * x), 0.5 * x * x * x} * std::exp(-0.5 * x * x); },
      [](double x) { return cplx{std::tanh(x), -x} * std::exp(-0.2 * x * x); },
  };
  for (const auto& f : odd) {
    const auto r = hermitian::h2_apply(metric::GridFunction::sample(grid, f), ctx);
    odd_max = std::max({odd_max, std::abs(r.c0), std::abs(r.c1)});
    for (const auto& v : r.smooth.values()) odd_max = std::max(odd_max, std::abs(v));
  }
  o.pass = chk.max_residual <= 1e-8 && odd_max == 0.0;
  o.summary = fmt("commutator residual %.3e over 10 pairs (largest pairing %.3e); h2 on odd inputs: max |output| = %g",
                  chk.max_residual, chk.max_scale, odd_max);
  return o;
}

Outcome energy_expectation() {
  Outcome o;
  o.time_limit = 120.0;
  using namespace hermitian;
  const double sig[] = {0.5, 1.0, 2.0}, Ls[] = {0.5, 1.0, 2.0};
  double worst_k = 0.0, worst_a = 0.0, worst_disc = 0.0, worst_disc_rel = 0.0;
  int n = 0;
  for (double s : sig) {
    for (double L : Ls) {
      const auto ctx = PhysicalContext::with_length_scale(L, 0.1);
      for (double k : {0.0, 1.0, 3.0}) {
        const auto cf = hermitian::energy_expectation({s, k, 0.0}, ctx, EnergyMethod::ClosedForm);
        const auto qf = hermitian::energy_expectation({s, k, 0.0}, ctx, EnergyMethod::Quadrature);
        worst_k = std::max(worst_k, std::abs(cf.total() - qf.total()) / std::abs(qf.total()));
        ++n;
      }
      for (double a : {0.5, 1.0, 3.0}) {
        const auto cf = hermitian::energy_expectation({s, 0.0, a}, ctx, EnergyMethod::ClosedForm);
        const auto qf = hermitian::energy_expectation({s, 0.0, a}, ctx, EnergyMethod::Quadrature);
        // everything except the printed coupling factor
        const double closed = cf.kinetic_plus_width + cf.coupling_from_density + cf.nonhermitian_term;
        worst_a = std::max(worst_a, std::abs(closed - qf.total()) / std::abs(qf.total()));
        worst_a = std::max(worst_a, std::abs(cf.nonhermitian_term - qf.nonhermitian_term) / std::abs(qf.nonhermitian_term));
        worst_disc = std::max(worst_disc, std::abs(cf.coupling_discrepancy));
        worst_disc_rel = std::max(worst_disc_rel, std::abs(cf.total() - qf.total()) / std::abs(qf.total()));
        if (s == 1.0 && L == 1.0) {
          o.info.push_back(fmt("x_mean=%.1f sigma=1 L=1: printed coupling %.6e vs Re(zeta)|Psi(0)|^2 %.6e", a,
                               cf.real_coupling_term, cf.coupling_from_density));
        }
        ++n;
      }
    }
  }
  o.pass = worst_k <= 1e-6 && worst_a <= 1e-6;
  o.summary = fmt("%d points, Im/Re = 0.1: k-family max rel diff %.3e; x_mean-family (Gamma term and totals with "
                  "|Psi(0)|^2 coupling) %.3e",
                  n, worst_k, worst_a);
  o.info.push_back(fmt("REPORTED DISCREPANCY: printed e^{-a^2/2L^2} coupling factor vs e^{-a^2/sigma^2}: max abs %.3e, "
                       "max rel effect on total %.3e",
                       worst_disc, worst_disc_rel));
  return o;
}

Outcome asymptotics() {
  Outcome o;
  using namespace hermitian;
  const auto ctx = PhysicalContext::with_length_scale(1.0, 0.1);
  const double pre = 1.0 / (2.0 * std::numbers::sqrt2);
  for (double r : {5.0, 10.0}) {
    const double full = omega(r, 0.0, ctx), branch = omega_asymptotic(r, ctx, Regime::Wide);
    const double rel = std::abs(branch / full - 1.0), bound = 5.0 / (r * r * r);
    const bool ok = rel <= bound;
    o.pass = o.pass && ok;
    o.info.push_back(fmt("wide sigma/L=%g: relative error %.3e vs bound %.3e -> %s; absolute remainder in units of "
                         "m Im(zeta)^2/hbar^2: %.3e vs (L/sigma)^3 = %.3e",
                         r, rel, bound, ok ? "ok" : "EXCEEDS", pre * std::abs(branch - full), 1.0 / (r * r * r)));
  }
  for (double r : {0.1, 0.2}) {
    const double full = omega(r, 0.0, ctx), branch = omega_asymptotic(r, ctx, Regime::Narrow);
    const double rel = std::abs(branch / full - 1.0), bound = 5.0 * r * r * r;
    const bool ok = rel <= bound;
    o.pass = o.pass && ok;
    o.info.push_back(fmt("narrow sigma/L=%g: relative error %.3e vs bound %.3e -> %s", r, rel, bound, ok ? "ok" : "EXCEEDS"));
  }
  o.summary = "wide branch within 5(L/sigma)^3 at sigma/L in {5,10}; narrow bracket within 5(sigma/L)^3 at {0.1,0.2}";
  return o;
}

Outcome figure_shapes() {
  Outcome o;
  using namespace hermitian;
  const auto ctx = PhysicalContext::with_length_scale(1.0, 0.1);
  int violations = 0, samples = 0;
  for (int i = 0; i <= 280; ++i) {
    const double s = 0.2 + 0.01 * i;
    double previous = INFINITY;
    for (double k : {0.0, 1.0, 2.0, 4.0}) {
      const double v = omega(s, k, ctx);
      violations += !(v < previous);
      previous = v;
    }
    ++samples;
  }
  double odd = 0.0;
  for (double a = 0.0; a <= 5.0; a += 0.05) {
    for (double s : {0.5, 1.0, 2.0, 3.0}) odd = std::max(odd, std::abs(gamma_fn(s, a, ctx) - gamma_fn(s, -a, ctx)));
  }
  const double ratio = std::max(gamma_fn(0.5, 3.0, ctx), gamma_fn(0.5, -3.0, ctx)) / gamma_fn(0.5, 0.0, ctx);
  o.pass = violations == 0 && odd == 0.0 && ratio < 0.05;
  o.summary = fmt("Omega ordering violations %d over %d sigma values in [0.2, 3]; Gamma evenness defect %g; "
                  "Gamma(0.5, +-3)/Gamma(0.5, 0) = %.3e",
                  violations, samples, odd, ratio);
  return o;
}

Outcome estimate_report() {
  Outcome o;
  using namespace hermitian;
  const auto r = defect_estimate({1.0, 1.0, 1.0, 1e-2}, UnitSystem::ev_angstrom());
  // order-of-magnitude agreement: within half a decade
  const bool validity = std::abs(std::log10(r.eps_validity / 1e-4)) < 0.5;
  const bool thermal = std::abs(std::log10(r.eps_thermal / 1e-5)) < 0.5;
  const bool L_ok = std::abs(r.L - 7.62) < 0.01 && r.L_mismatch;
  o.pass = validity && thermal && L_ok && r.reference_eps_validity == 1e-4 && r.reference_eps_thermal == 1e-5;
  o.summary = fmt("eps << %.2e (reference 1e-4), eps > %.2e (reference 1e-5); computed L = %.4f A vs reference "
                  "1e-10 A, mismatch flagged: %s",
                  r.eps_validity, r.eps_thermal, r.L, r.L_mismatch ? "yes" : "no");
  o.info.push_back(fmt("printed eps^2 strength: %.4e eV/A; its SI numeric value %.4e (\"eV\"); consistent scale %.4e eV",
                       r.strength_per_eps2, r.strength_per_eps2_si_numeric_ev, r.energy_scale_per_eps2));
  o.info.push_back(r.note);
  return o;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const Entry entries[] = {
      {1, "spectral classification", classification},
      {2, "I_n series vs quadrature oracle", series_vs_oracle},
      {3, "kernel-order assembly", kernel_assembly},
      {4, "metric properties", metric_properties},
      {5, "biorthonormality", biorthonormality},
      {6, "Hermitian-Hamiltonian consistency", hermitian_consistency},
      {7, "energy expectation", energy_expectation},
      {8, "asymptotic branches", asymptotics},
      {9, "figure-shape properties", figure_shapes},
      {10, "estimate report", estimate_report},
  };
  int failed = 0;
  for (const auto& e : entries) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = e.run();
    } catch (const std::exception& ex) {
      o.pass = false;
      o.summary = std::string("exception: ") + ex.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::string timing = fmt("%.2f s", secs);
    if (o.time_limit > 0.0) {
      timing += fmt(" / limit %.0f s", o.time_limit);
      if (secs >= o.time_limit) {
        o.pass = false;
        timing += " EXCEEDED";
      }
    }
    std::printf("CRITERION %2d %s [%s] (%s): %s\n", e.id, o.pass ? "PASS" : "FAIL", e.name, timing.c_str(),
                o.summary.c_str());
    for (const auto& line : o.info) std::printf("    INFO %s\n", line.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d of 10 criteria passed\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}
