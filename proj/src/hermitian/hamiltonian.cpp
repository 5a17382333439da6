#include "deltac/hermitian/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "deltac/errors.hpp"
#include "deltac/metric/kernels.hpp"
#include "deltac/numerics/quadrature.hpp"

namespace deltac::hermitian {

using cplx = std::complex<double>;

H2KernelSample h2_kernel(double x, double y, const PhysicalContext& ctx) {
  ctx.validate();
  const double pre = ctx.mass / (8.0 * ctx.hbar * ctx.hbar);
  const double L = ctx.L();
  return {pre * std::exp(-std::abs(y) / L), pre * std::exp(-std::abs(x) / L)};
}

H2KernelSample h2_kernel_dimensionless(double x, double y, const spectrum::Coupling& c) {
  metric::require_positive_re(c, "h2_kernel_dimensionless");
  const double rho = c.re();
  const double pre = rho * rho / 16.0;
  return {pre * std::exp(-rho * std::abs(y) / 2.0), pre * std::exp(-rho * std::abs(x) / 2.0)};
}

double h2_delta_coeff_from_dimensionless(double y, const PhysicalContext& ctx, double ell) {
  ctx.validate();
  if (!(ell > 0.0)) throw InvalidArgument("h2_delta_coeff_from_dimensionless: ell must be positive");
  const auto z = spectrum::nondimensionalize(ctx.mass, ell, ctx.zeta, ctx.hbar);
  const double dimless = h2_kernel_dimensionless(0.0, y / ell, z).delta_x_coeff;
  const double energy_unit = ctx.hbar * ctx.hbar / (2.0 * ctx.mass * ell * ell);
  // eps^2 -> Im(zeta)^2 / Re(zeta)^2. The kernel density picks up 1/ell and
  // delta(X) = ell delta(x); the two cancel.
  return energy_unit * dimless / (ctx.zeta.real() * ctx.zeta.real());
}

std::vector<double> symmetric_grid(double half_width, double h) {
  if (!(half_width > 0.0) || !(h > 0.0) || !std::isfinite(half_width / h)) {
    throw InvalidArgument("symmetric_grid: half_width and h must be positive");
  }
  const auto n = static_cast<long>(std::ceil(half_width / h - 1e-9));
  if (n < 2) throw InvalidArgument("symmetric_grid: fewer than five nodes");
  std::vector<double> out(static_cast<std::size_t>(2 * n + 1));
  for (long i = 0; i <= n; ++i) {
    out[static_cast<std::size_t>(n + i)] = static_cast<double>(i) * h;
    out[static_cast<std::size_t>(n - i)] = -static_cast<double>(i) * h;
  }
  return out;
}

H2ApplyResult h2_apply(const metric::GridFunction& psi, const PhysicalContext& ctx) {
  ctx.validate();
  const auto& nodes = psi.nodes();
  const std::size_t n = nodes.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (nodes[i] != -nodes[n - 1 - i]) throw InvalidArgument("h2_apply: grid must be symmetric about 0");
  }
  if (n % 2 == 0) throw InvalidArgument("h2_apply: 0 must be a grid node");
  const double L = ctx.L();
  const auto [slo, shi] = psi.support();
  if (slo - 10.0 * L < nodes.front() || shi + 10.0 * L > nodes.back()) {
    throw MarginError("h2_apply: grid must extend 10 L past the support of psi", slo - 10.0 * L, shi + 10.0 * L);
  }

  // Even part on the mirrored nodes; the kernel only sees it.
  std::vector<cplx> even(n);
  for (std::size_t i = 0; i < n; ++i) even[i] = 0.5 * (psi.values()[i] + psi.values()[n - 1 - i]);
  const std::size_t mid = n / 2;
  const double pre = ctx.mass / (8.0 * ctx.hbar * ctx.hbar);

  // Integrate the even part over y >= 0 and double it: odd input cancels
  // node by node before any quadrature.
  std::vector<double> half_nodes(nodes.begin() + static_cast<long>(mid), nodes.end());
  std::vector<cplx> half_vals(even.begin() + static_cast<long>(mid), even.end());
  std::vector<double> half_breaks;
  for (double b : psi.breaks()) {
    if (b >= 0.0) half_breaks.push_back(b);
  }
  const metric::GridFunction half(std::move(half_nodes), std::move(half_vals), std::move(half_breaks));
  const cplx integral = 2.0 * metric::integrate_weighted(half, [L](double y) { return std::exp(-y / L); });

  H2ApplyResult out{pre * even[mid], pre * integral, psi};
  std::vector<cplx> smooth(n);
  for (std::size_t i = 0; i < n; ++i) smooth[i] = out.c0 * std::exp(-std::abs(nodes[i]) / L);
  std::vector<double> br = psi.breaks();
  if (std::find(br.begin(), br.end(), 0.0) == br.end()) br.push_back(0.0);
  out.smooth = metric::GridFunction(nodes, std::move(smooth), std::move(br));
  return out;
}

namespace {

// int_R f(x) dx for a decaying f with a kink at 0
double line_integral(const RealFunction& f) {
  numerics::QuadratureSpec spec;
  spec.abs_tol = 1e-14;
  spec.rel_tol = 1e-13;
  const auto right = numerics::integrate_semi_infinite(f, 0.0, spec);
  const auto left = numerics::integrate_semi_infinite([&f](double x) { return f(-x); }, 0.0, spec);
  return right.value + left.value;
}

}  // namespace

CommutatorCheck commutator_kernel_check(const spectrum::Coupling& c, std::span<const TestPair> pairs) {
  metric::require_positive_re(c, "commutator_kernel_check");
  const double rho = c.re();
  CommutatorCheck out;
  for (const auto& p : pairs) {
    // eta^(1) has a purely imaginary kernel; use its imaginary part.
    const double a = line_integral([&](double x) { return p.u(x) * metric::eta_order_kernel(1, c, x, 0.0).imag(); });
    const double b = line_integral([&](double y) { return metric::eta_order_kernel(1, c, 0.0, y).imag() * p.v(y); });
    // (i rho/4)(i a v(0) - i u(0) b)
    const double lhs = -rho / 4.0 * (p.v(0.0) * a - p.u(0.0) * b);

    const double eu = line_integral([&](double x) { return p.u(x) * std::exp(-rho * std::abs(x) / 2.0); });
    const double ev = line_integral([&](double y) { return std::exp(-rho * std::abs(y) / 2.0) * p.v(y); });
    const double rhs = rho * rho / 16.0 * (p.u(0.0) * ev + p.v(0.0) * eu);

    out.lhs.push_back(lhs);
    out.rhs.push_back(rhs);
    out.max_residual = std::max(out.max_residual, std::abs(lhs - rhs));
    out.max_scale = std::max({out.max_scale, std::abs(lhs), std::abs(rhs)});
  }
  return out;
}

std::vector<TestPair> gaussian_test_pairs(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> centre(-1.5, 1.5);
  std::uniform_real_distribution<double> width(0.3, 2.0);
  auto gaussian = [&]() -> RealFunction {
    const double c = centre(rng);
    const double w = width(rng);
    return [c, w](double x) { return std::exp(-(x - c) * (x - c) / (2.0 * w * w)); };
  };
  std::vector<TestPair> out;
  for (int i = 0; i < count; ++i) {
    auto u = gaussian();
    auto v = gaussian();
    out.push_back({std::move(u), std::move(v)});
  }
  return out;
}

}  // namespace deltac::hermitian
