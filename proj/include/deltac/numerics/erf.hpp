#pragma once

#include <complex>

namespace deltac::numerics {

struct ComplexErfResult {
  std::complex<double> value;
  double est_abs_error = 0.0;
};

/// Faddeeva function w(z) = exp(-z^2) erfc(-iz), valid on the whole plane.
///
/// Upper half plane: Laplace continued fraction when Im z >= 1 or |z| >= 8.5,
/// otherwise exp(-z^2) (1 - erf(-iz)) with the series below. Lower half plane
/// by reflection w(z) = 2 exp(-z^2) - w(-z).
std::complex<double> faddeeva(std::complex<double> z);

/// Complex error function.
///
/// Accuracy is relative to max(1, |erf(w)|): about 1e-14 on |w| <= 10, which
/// is <= 1e-12 absolute wherever |erf(w)| <= 1e2. The same algorithm is used
/// beyond |w| = 10; accuracy stays relative until exp(Im(w)^2 - Re(w)^2)
/// overflows, at which point the value is non-finite and est_abs_error is inf.
/// Throws InvalidArgument for non-finite input.
ComplexErfResult erf_complex(std::complex<double> w);

/// Scaled complementary error function exp(w^2) erfc(w) = faddeeva(i w).
std::complex<double> erfcx_complex(std::complex<double> w);

/// Real exp(x^2) erfc(x), finite for all x with |x| < ~26.
double erfcx(double x);

}  // namespace deltac::numerics
