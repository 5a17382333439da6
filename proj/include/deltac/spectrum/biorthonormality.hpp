#pragma once

#include <complex>
#include <functional>

#include "deltac/numerics/quadrature.hpp"

namespace deltac::spectrum {

/// Smearing profile g(k) supported on [k_lo, k_hi] within (0, inf).
struct MomentumProfile {
  std::function<std::complex<double>(double)> g;
  double k_lo;
  double k_hi;

  /// Throws InvalidArgument unless 0 < k_lo < k_hi and g is set.
  void validate() const;

  /// amplitude * exp(-1/(1-t^2)) * e^{i phase t}, t mapped from [k_lo, k_hi] to [-1, 1].
  static MomentumProfile bump(double k_lo, double k_hi, std::complex<double> amplitude = 1.0,
                              double phase = 0.0);
};

/// integral of conj(g) h dk
std::complex<double> profile_overlap(const MomentumProfile& g, const MomentumProfile& h,
                                     const numerics::QuadratureSpec& spec = {});

struct SmearedResult {
  std::complex<double> value;
  /// delta_ab <g, h>
  std::complex<double> expected;
  double est_error;
  /// final truncation |x| <= x_max
  double x_max;
  /// magnitude of the last outer shell added; bounds the neglected tail
  double tail_bound;
  bool converged;
};

/// < int g psi_a dk | int h phi_b dq > by nested quadrature over x in [-X, X],
/// doubling X until the added shell falls below the tolerance.
/// Throws SpectralSingularity for Re(z) = 0, InvalidArgument for Re(z) < 0.
SmearedResult smeared_inner_product(int bra_branch, int ket_branch, const MomentumProfile& g,
                                    const MomentumProfile& h, std::complex<double> z,
                                    const numerics::QuadratureSpec& spec = {});

}  // namespace deltac::spectrum
