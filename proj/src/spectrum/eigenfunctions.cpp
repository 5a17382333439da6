#include "deltac/spectrum/eigenfunctions.hpp"

#include <cmath>
#include <numbers>

#include "deltac/errors.hpp"

namespace deltac::spectrum {

using cplx = std::complex<double>;

Eigenfunction::Eigenfunction(int branch, double k, Which which, cplx z)
    : branch_(branch), k_(k), which_(which), c_(which == Which::Psi ? z : std::conj(z)) {
  if (branch != 1 && branch != 2) throw InvalidArgument("Eigenfunction: branch must be 1 or 2");
  if (!(k > 0.0) || !std::isfinite(k)) throw InvalidArgument("Eigenfunction: k must be positive and finite");
  if (branch == 1) {
    root_ = std::sqrt(std::numbers::pi);
    return;
  }
  const cplx w = c_ * c_ / (4.0 * k * k);
  const cplx radicand = 1.0 + w;
  if (std::abs(radicand) <= 1e-12 * (1.0 + std::abs(w))) {
    throw SpectralSingularity("Eigenfunction: branch-2 normalization vanishes (z = +-2ik)");
  }
  root_ = std::sqrt(std::numbers::pi * radicand);
}

cplx Eigenfunction::operator()(double x) const {
  const double kx = k_ * x;
  if (branch_ == 1) return std::sin(kx) / root_;
  return (std::cos(kx) + c_ / (2.0 * k_) * std::sin(k_ * std::abs(x))) / root_;
}

cplx Eigenfunction::derivative(double x) const {
  const double kx = k_ * x;
  if (branch_ == 1) return k_ * std::cos(kx) / root_;
  return (-k_ * std::sin(kx) + 0.5 * c_ * std::cos(kx) * sgn(x)) / root_;
}

cplx Eigenfunction::derivative_right0() const {
  if (branch_ == 1) return k_ / root_;
  return 0.5 * c_ / root_;
}

cplx Eigenfunction::derivative_left0() const {
  if (branch_ == 1) return k_ / root_;
  return -0.5 * c_ / root_;
}

SchrodingerResidual verify_schrodinger(const Eigenfunction& e, std::span<const double> x_samples, double h) {
  if (!(h > 0.0)) throw InvalidArgument("verify_schrodinger: step must be positive");
  const double k2 = e.k() * e.k();
  SchrodingerResidual out{};
  for (double x : x_samples) {
    if (std::abs(x) < 2.0 * h) {
      throw InvalidArgument("verify_schrodinger: samples must stay at least 2h away from the origin");
    }
    const cplx d2 = (e(x + h) - 2.0 * e(x) + e(x - h)) / (h * h);
    out.bulk = std::max(out.bulk, std::abs(-d2 - k2 * e(x)));
  }
  const cplx psi0 = e(0.0);
  out.jump_expected = e.coupling() * psi0;
  out.jump_exact = std::abs(e.derivative_right0() - e.derivative_left0() - out.jump_expected);
  const cplx right = (-3.0 * psi0 + 4.0 * e(h) - e(2.0 * h)) / (2.0 * h);
  const cplx left = (3.0 * psi0 - 4.0 * e(-h) + e(-2.0 * h)) / (2.0 * h);
  out.jump_measured = right - left;
  out.jump_fd = std::abs(out.jump_measured - out.jump_expected);
  return out;
}

std::vector<double> singularity_scan(cplx z, std::span<const double> k_grid, double tol) {
  std::vector<double> out;
  for (double k : k_grid) {
    if (!(k > 0.0)) throw InvalidArgument("singularity_scan: grid must lie in (0, inf)");
    if (std::abs(1.0 + z * z / (4.0 * k * k)) < tol) out.push_back(k);
  }
  return out;
}

}  // namespace deltac::spectrum
