#pragma once

#include <complex>
#include <span>
#include <vector>

namespace deltac::spectrum {

enum class Which { Psi, Phi };  // eigenfunction of H, or of its adjoint

/// Generalized eigenfunction with E = k^2.
///   branch 1: sin(kx) / sqrt(pi)
///   branch 2: [cos(kx) + (c/2k) sin(k|x|)] / sqrt(pi (1 + c^2/4k^2))
/// with c = z for Psi and c = conj(z) for Phi. Principal square root.
class Eigenfunction {
 public:
  /// Throws InvalidArgument for a bad branch or k <= 0, SpectralSingularity if
  /// the branch-2 normalization vanishes (z = +-2ik).
  Eigenfunction(int branch, double k, Which which, std::complex<double> z);

  int branch() const { return branch_; }
  double k() const { return k_; }
  Which which() const { return which_; }
  /// Coupling the function actually solves: z for Psi, conj(z) for Phi.
  std::complex<double> coupling() const { return c_; }
  std::complex<double> normalization_root() const { return root_; }

  std::complex<double> operator()(double x) const;
  /// Derivative for x != 0; at x = 0 use the one-sided versions.
  std::complex<double> derivative(double x) const;
  std::complex<double> derivative_right0() const;
  std::complex<double> derivative_left0() const;

 private:
  int branch_;
  double k_;
  Which which_;
  std::complex<double> c_;
  std::complex<double> root_;
};

/// sign with sign(0) = 0
inline double sgn(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

struct SchrodingerResidual {
  /// max |-psi'' - k^2 psi| over the samples (central differences)
  double bulk;
  /// |psi'(0+) - psi'(0-) - c psi(0)| from the analytic one-sided derivatives
  double jump_exact;
  /// the same from one-sided second-order differences with step h
  double jump_fd;
  std::complex<double> jump_measured;
  std::complex<double> jump_expected;
};

/// Throws InvalidArgument if a sample lies within 2h of the origin or h <= 0.
SchrodingerResidual verify_schrodinger(const Eigenfunction& e, std::span<const double> x_samples, double h);

/// Grid points k with |1 + z^2/4k^2| < tol (where branch 2 cannot be normalized).
std::vector<double> singularity_scan(std::complex<double> z, std::span<const double> k_grid, double tol = 1e-2);

}  // namespace deltac::spectrum
