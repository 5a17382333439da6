#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "deltac/numerics/quadrature.hpp"

namespace deltac::numerics {

enum class Trig { Cos, Sin };
enum class FourierDomain { WholeLine, HalfLine };
enum class Parity { None, Even, Odd };

/// Amplitude g(k) of an integrand e^{irk} g(k).
///
/// g must be smooth for k != 0 and tend to a finite limit as |k| -> inf.
/// Declaring the limits skips the numerical tail probe; parity lets the
/// whole-line case reuse one half line.
struct FourierIntegrand {
  ComplexFunction amplitude;
  Parity parity = Parity::None;
  std::optional<std::complex<double>> tail_constant;        // k -> +inf
  std::optional<std::complex<double>> tail_constant_minus;  // k -> -inf, Parity::None only
};

/// Result of a Fourier-type integral in the distributional sense:
///   integral = smooth.value + delta_coeff * delta(r).
struct FourierResult {
  QuadratureResult<std::complex<double>> smooth;
  std::complex<double> delta_coeff{};
  std::complex<double> tail_plus{};
  std::complex<double> tail_minus{};
};

/// integral_0^inf h(k) cos(omega k) dk or ... sin(omega k) dk for omega >= 0,
/// with h -> 0 as k -> inf. The part beyond `tail_cutoff` is summed over half
/// periods and extrapolated with Wynn's epsilon algorithm.
QuadratureResult<std::complex<double>> fourier_half_line(const ComplexFunction& h, double omega,
                                                         Trig kind, const QuadratureSpec& spec = {});

/// integral of e^{irk} g(k) dk over the whole line or over (0, inf).
///
/// A non-zero limit C of g is subtracted before integration and returned as
/// bookkeeping: on the whole line the constant contributes 2 pi C delta(r);
/// on the half line pi C delta(r) + i C / r. Odd amplitudes are paired
/// symmetrically (principal value at k = 0 and at r = 0).
/// Throws Unsupported when the amplitude tail neither decays nor settles.
FourierResult integrate_semi_infinite_oscillatory(const FourierIntegrand& integrand, double r,
                                                  FourierDomain domain,
                                                  const QuadratureSpec& spec = {});

/// Numerical probe of lim_{k->inf} h(k). Returns 0 for decaying tails.
/// Throws Unsupported if the samples neither decay nor settle.
std::complex<double> probe_tail_limit(const ComplexFunction& h, double start);

/// Wynn epsilon extrapolation of a sequence of partial sums. Returns the
/// extrapolated limit and an error estimate from the last three estimates.
struct Extrapolation {
  std::complex<double> value;
  double error;
};
Extrapolation wynn_epsilon(const std::vector<std::complex<double>>& partial_sums);

}  // namespace deltac::numerics
