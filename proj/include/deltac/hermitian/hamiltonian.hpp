#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "deltac/hermitian/units.hpp"
#include "deltac/metric/apply.hpp"
#include "deltac/spectrum/coupling.hpp"

namespace deltac::hermitian {

/// The second-order kernel
///   h2(x, y) = (m / 8 hbar^2) [delta(x) e^{-|y|/L} + delta(y) e^{-|x|/L}],
/// sampled as the coefficients of delta(x) and of delta(y).
struct H2KernelSample {
  double delta_x_coeff;  // multiplies delta(x); depends on y
  double delta_y_coeff;  // multiplies delta(y); depends on x
};

H2KernelSample h2_kernel(double x, double y, const PhysicalContext& ctx);

/// Dimensionless form, per unit eps^2:
/// (Re z)^2/16 [delta(x) e^{-Re(z)|y|/2} + delta(y) e^{-Re(z)|x|/2}].
/// Throws InvalidArgument for Re(z) <= 0.
H2KernelSample h2_kernel_dimensionless(double x, double y, const spectrum::Coupling& c);

/// The same coefficient of delta(x), obtained from the dimensionless kernel
/// (Re z)^2/16 [delta(x) e^{-Re(z)|y|/2} + ...] at z = 2 m ell zeta / hbar^2
/// by restoring units: energy hbar^2/(2 m ell^2), length ell, and the
/// conversion eps^2 = Im(zeta)^2 / Re(zeta)^2.
double h2_delta_coeff_from_dimensionless(double y, const PhysicalContext& ctx, double ell);

struct H2ApplyResult {
  std::complex<double> c0;  // m psi(0) / 8 hbar^2, multiplies e^{-|x|/L}
  std::complex<double> c1;  // (m / 8 hbar^2) int e^{-|y|/L} psi(y) dy, multiplies delta(x)
  metric::GridFunction smooth;  // c0 e^{-|x|/L} on the input grid
};

/// Nodes -n h, ..., 0, ..., n h with n = ceil(half_width / h); exactly
/// symmetric.
std::vector<double> symmetric_grid(double half_width, double h);

/// h2 applied to psi. Requires a grid symmetric about 0 with 0 as a node,
/// extending 10 L past the support of psi. Only the even part of psi is
/// integrated (the kernel annihilates odd functions), so odd input gives
/// exactly zero. Throws InvalidArgument for a non-symmetric grid and
/// MarginError for insufficient extent.
H2ApplyResult h2_apply(const metric::GridFunction& psi, const PhysicalContext& ctx);

using RealFunction = std::function<double(double)>;

struct TestPair {
  RealFunction u;
  RealFunction v;
};

struct CommutatorCheck {
  double max_residual = 0.0;
  double max_scale = 0.0;  // largest |pairing| seen
  std::vector<double> lhs;
  std::vector<double> rhs;
};

/// Pairs (i Re(z)/4) [delta(y) - delta(x)] eta^(1)(x, y), using the order-1
/// kernel numerically, and (Re z)^2/16 [delta(x) e^{-Re(z)|y|/2} +
/// delta(y) e^{-Re(z)|x|/2}] against each test pair, and reports the largest
/// difference.
CommutatorCheck commutator_kernel_check(const spectrum::Coupling& c, std::span<const TestPair> pairs);

/// Ten Gaussian pairs with random centres and widths.
std::vector<TestPair> gaussian_test_pairs(std::uint64_t seed, int count = 10);

}  // namespace deltac::hermitian
