#include <algorithm>
#include <cmath>
#include <random>

#include "deltac/cli/commands.hpp"
#include "deltac/errors.hpp"
#include "deltac/hermitian/energy.hpp"
#include "deltac/hermitian/hamiltonian.hpp"
#include "deltac/metric/apply.hpp"
#include "deltac/metric/kernels.hpp"
#include "deltac/metric/reduced_integrals.hpp"
#include "deltac/spectrum/biorthonormality.hpp"
#include "deltac/spectrum/coupling.hpp"

namespace deltac::cli {

namespace {

using cplx = std::complex<double>;

void add(std::vector<CheckRow>& rows, const std::string& suite, std::string name, double measured, double threshold) {
  rows.push_back({suite, std::move(name), measured, threshold, measured <= threshold});
}

void require_re_positive(std::complex<double> z, const char* suite) {
  if (z.real() == 0.0) {
    throw SpectralSingularity(std::string("verify ") + suite +
                              ": Re(z) = 0 is a spectral singularity (E = Im(z)^2/4 in the continuum); "
                              "the biorthonormal system and the metric do not exist there");
  }
  if (z.real() < 0.0) throw InvalidArgument(std::string("verify ") + suite + ": requires Re(z) > 0");
}

void biortho_suite(std::vector<CheckRow>& rows, cplx z, const numerics::QuadratureSpec& spec) {
  using spectrum::MomentumProfile;
  require_re_positive(z, "biortho");
  const auto g = MomentumProfile::bump(1.0, 2.0);
  const auto far = MomentumProfile::bump(2.5, 3.0);
  const auto shifted = MomentumProfile::bump(1.5, 2.5, {0.5, 1.0}, 2.0);
  struct Case {
    const char* name;
    int a, b;
    const MomentumProfile* bra;
    const MomentumProfile* ket;
  };
  const Case cases[] = {{"psi1_phi1", 1, 1, &g, &g},        {"psi2_phi2", 2, 2, &g, &g},
                        {"psi1_phi2", 1, 2, &g, &g},        {"psi2_phi1", 2, 1, &g, &g},
                        {"psi2_phi2_disjoint", 2, 2, &g, &far}, {"psi2_phi2_overlap", 2, 2, &g, &shifted}};
  for (const auto& c : cases) {
    const auto r = spectrum::smeared_inner_product(c.a, c.b, *c.bra, *c.ket, z, spec);
    add(rows, "biortho", std::string("smeared_") + c.name, std::abs(r.value - r.expected), 1e-6);
  }
}

metric::GridFunction packet(std::mt19937_64& rng, const std::vector<double>& grid) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double c1 = 1.5 * u(rng), c2 = 1.5 * u(rng), k1 = 2.0 * u(rng), k2 = 2.0 * u(rng);
  const cplx a1{u(rng), u(rng)}, a2{u(rng), u(rng)};
  const double w = 0.6 + 0.3 * (u(rng) + 1.0);
  return metric::GridFunction::sample(grid, [=](double x) {
    return a1 * std::exp(cplx{-(x - c1) * (x - c1) / (2 * w * w), k1 * x}) +
           a2 * std::exp(cplx{-(x - c2) * (x - c2) / (2 * w * w), k2 * x});
  });
}

void metric_suite(std::vector<CheckRow>& rows, cplx z, const std::vector<double>& eps_grid,
                  const numerics::QuadratureSpec& spec, std::uint64_t seed) {
  using namespace metric;
  require_re_positive(z, "metric");
  const Coupling c{z};
  const double rho = c.re();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> pos(-3.0, 3.0);

  for (int m = 1; m <= 3; ++m) {
    double herm = 0.0, par = 0.0;
    for (int i = 0; i < 200; ++i) {
      const double x = pos(rng) / rho, y = pos(rng) / rho;
      const cplx v = eta_order_kernel(m, c, x, y);
      herm = std::max(herm, std::abs(v - std::conj(eta_order_kernel(m, c, y, x))));
      par = std::max(par, std::abs(v - eta_order_kernel(m, c, -x, -y)));
    }
    add(rows, "metric", "hermiticity_m" + std::to_string(m), herm, 1e-12);
    add(rows, "metric", "parity_m" + std::to_string(m), par, 1e-12);
  }

  const double eps = c.epsilon();
  EtaAssembler assembler(c, Source::Quadrature, spec);
  double assembly = 0.0, delta = 0.0;
  const double unit = 2.0 / rho;  // kernel decay length
  for (const auto& [u, v] : {std::pair{0.3, -0.7}, {1.1, 0.4}, {-0.25, 1.6}, {0.9, 0.9}, {-1.3, 0.2}}) {
    const double x = u * unit, y = v * unit;
    const auto s = assembler(x, y);
    cplx sum{};
    for (int m = 1; m <= 3; ++m) sum += std::pow(eps, m) * eta_order_kernel(m, c, x, y);
    assembly = std::max(assembly, std::abs(s.smooth - sum));
    delta = std::max({delta, std::abs(s.delta_diag - 1.0), std::abs(s.delta_anti)});
  }
  add(rows, "metric", "assembly_vs_order_sum", assembly, 1e-4);
  add(rows, "metric", "delta_bookkeeping_exact", delta, 0.0);

  for (double e : eps_grid) {
    auto residual = [&](double ee) {
      const Coupling ce = Coupling::from_re_eps(rho, ee);
      double worst = 0.0;
      for (int n = 0; n <= 2; ++n) {
        for (double r : {0.5, 1.0, 2.0}) {
          worst = std::max(worst, std::abs(In_series(n, r, ce).smooth - In_quadrature(n, r, ce, spec).smooth));
        }
      }
      return worst;
    };
    const double ratio = residual(e) / residual(0.5 * e);
    // theoretical 16; the [12, 20] window is encoded as distance from 16
    add(rows, "metric", "In_series_ratio_eps=" + io::format_double(e), std::abs(ratio - 16.0), 4.0);
  }

  const double half = 13.0 + metric_margin(rho);
  const auto grid = default_grid(-half, half, rho);
  std::vector<GridFunction> family;
  for (int i = 0; i < 8; ++i) family.push_back(packet(rng, grid));
  for (double e : eps_grid) {
    const auto rep = gram_matrix(family, make_expansion(Coupling::from_re_eps(rho, e)), 3);
    // positive definite: -min eigenvalue must be negative
    rows.push_back({"metric", "gram_min_eigenvalue_eps=" + io::format_double(e), rep.eigenvalues.front(), 0.0,
                    rep.eigenvalues.front() > 0.0});
    add(rows, "metric", "gram_hermiticity_eps=" + io::format_double(e), rep.hermiticity_defect, 1e-5);
  }
}

void hermitian_suite(std::vector<CheckRow>& rows, cplx z, const std::vector<double>& eps_grid, std::uint64_t seed) {
  using namespace hermitian;
  require_re_positive(z, "hermitian");
  const spectrum::Coupling c{z};
  const double rho = c.re();
  const double L = 2.0 / rho;  // h2 in these units: 1/L = Re(z)/2

  const auto pairs = gaussian_test_pairs(seed);
  add(rows, "hermitian", "commutator_residual", commutator_kernel_check(c, pairs).max_residual, 1e-8);

  const auto ctx = PhysicalContext::with_length_scale(L, c.epsilon());
  const auto odd = metric::GridFunction::sample(symmetric_grid(12.0 + 10.0 * L, 0.02),
                                                [](double x) { return cplx{x, -0.5 * x} * std::exp(-x * x); });
  const auto r = h2_apply(odd, ctx);
  double odd_norm = std::max(std::abs(r.c0), std::abs(r.c1));
  for (const auto& v : r.smooth.values()) odd_norm = std::max(odd_norm, std::abs(v));
  add(rows, "hermitian", "h2_odd_annihilation_exact", odd_norm, 0.0);

  double even_k = 0.0, even_a = 0.0, step = -INFINITY;
  for (double s : {0.5, 1.0, 2.0}) {
    double previous = INFINITY;
    for (double k : {0.0, 1.0, 2.0, 4.0}) {
      const double o = omega(s, k, ctx);
      even_k = std::max(even_k, std::abs(o - omega(s, -k, ctx)));
      step = std::max(step, o - previous);
      previous = o;
    }
    for (double a : {0.5, 1.0, 3.0}) even_a = std::max(even_a, std::abs(gamma_fn(s, a, ctx) - gamma_fn(s, -a, ctx)));
  }
  add(rows, "hermitian", "omega_even_in_k", even_k, 1e-10);
  rows.push_back({"hermitian", "omega_decreasing_in_k", step, 0.0, step < 0.0});
  add(rows, "hermitian", "gamma_even_in_a", even_a, 0.0);

  for (double e : eps_grid) {
    const auto ce = PhysicalContext::with_length_scale(L, e);
    double worst = 0.0;
    for (double s : {0.5, 1.0, 2.0}) {
      for (double k : {0.0, 1.0, 3.0}) {
        const auto cf = energy_expectation({s, k, 0.0}, ce, EnergyMethod::ClosedForm);
        const auto qf = energy_expectation({s, k, 0.0}, ce, EnergyMethod::Quadrature);
        worst = std::max(worst, std::abs(cf.total() - qf.total()) / std::abs(qf.total()));
      }
      for (double a : {0.5, 1.0, 3.0}) {
        const auto cf = energy_expectation({s, 0.0, a}, ce, EnergyMethod::ClosedForm);
        const auto qf = energy_expectation({s, 0.0, a}, ce, EnergyMethod::Quadrature);
        worst = std::max(worst, std::abs(cf.nonhermitian_term - qf.nonhermitian_term) / std::abs(qf.nonhermitian_term));
      }
    }
    add(rows, "hermitian", "energy_closed_vs_quadrature_eps=" + io::format_double(e), worst, 1e-6);
  }

  const GaussianPacket p{1.0, 0.5, 0.0};
  const double t1 = energy_expectation(p, {1.0, 1.0, {rho, 0.125 * rho}}, EnergyMethod::ClosedForm).nonhermitian_term;
  const double t2 = energy_expectation(p, {1.0, 1.0, {rho, 0.25 * rho}}, EnergyMethod::ClosedForm).nonhermitian_term;
  add(rows, "hermitian", "nonhermitian_quadratic_ratio", std::abs(t2 / t1 - 4.0), 0.0);
}

}  // namespace

std::vector<CheckRow> run_verify_suite(const std::string& suite, std::complex<double> z,
                                       const std::vector<double>& eps_grid, const numerics::QuadratureSpec& spec,
                                       std::uint64_t seed) {
  std::vector<CheckRow> rows;
  const bool all = suite == "all";
  if (!all && suite != "biortho" && suite != "metric" && suite != "hermitian") {
    throw InvalidArgument("verify: --suite must be biortho, metric, hermitian or all");
  }
  for (double e : eps_grid) {
    if (!(e > 0.0) || !(e < 1.0)) throw InvalidArgument("verify: eps grid values must lie in (0, 1)");
  }
  if (all || suite == "biortho") biortho_suite(rows, z, spec);
  if (all || suite == "metric") metric_suite(rows, z, eps_grid, spec, seed);
  if (all || suite == "hermitian") hermitian_suite(rows, z, eps_grid, seed);
  return rows;
}

io::Table verify_table(const std::vector<CheckRow>& rows) {
  io::Table t;
  t.columns = {"suite", "check", "measured", "threshold", "pass"};
  for (const auto& r : rows) t.add({r.suite, r.name, r.measured, r.threshold, static_cast<long long>(r.pass)});
  return t;
}

}  // namespace deltac::cli
