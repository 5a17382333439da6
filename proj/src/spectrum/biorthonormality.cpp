#include "deltac/spectrum/biorthonormality.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "deltac/errors.hpp"
#include "deltac/spectrum/eigenfunctions.hpp"

namespace deltac::spectrum {

using cplx = std::complex<double>;
namespace nm = numerics;

void MomentumProfile::validate() const {
  if (!g) throw InvalidArgument("MomentumProfile: profile function not set");
  if (!(k_lo > 0.0) || !(k_hi > k_lo) || !std::isfinite(k_hi)) {
    throw InvalidArgument("MomentumProfile: support must satisfy 0 < k_lo < k_hi < inf");
  }
}

MomentumProfile MomentumProfile::bump(double k_lo, double k_hi, cplx amplitude, double phase) {
  MomentumProfile p;
  p.k_lo = k_lo;
  p.k_hi = k_hi;
  p.g = [=](double k) -> cplx {
    const double t = (2.0 * k - k_lo - k_hi) / (k_hi - k_lo);
    if (!(std::abs(t) < 1.0)) return 0.0;
    return amplitude * std::exp(-1.0 / (1.0 - t * t)) * std::exp(cplx{0.0, phase * t});
  };
  p.validate();
  return p;
}

cplx profile_overlap(const MomentumProfile& g, const MomentumProfile& h, const nm::QuadratureSpec& spec) {
  g.validate();
  h.validate();
  const double lo = std::max(g.k_lo, h.k_lo);
  const double hi = std::min(g.k_hi, h.k_hi);
  if (!(lo < hi)) return 0.0;
  return nm::integrate_finite([&](double k) { return std::conj(g.g(k)) * h.g(k); }, lo, hi, spec).value;
}

namespace {

// int g(k) f_k(x) dk for the eigenfunction family of one branch
class Packet {
 public:
  Packet(int branch, Which which, cplx z, const MomentumProfile& p, const nm::QuadratureSpec& spec)
      : branch_(branch), which_(which), z_(z), p_(p), spec_(spec) {}

  cplx operator()(double x) const {
    auto f = [&](double k) { return p_.g(k) * Eigenfunction(branch_, k, which_, z_)(x); };
    return nm::integrate_finite(f, p_.k_lo, p_.k_hi, spec_).value;
  }

 private:
  int branch_;
  Which which_;
  cplx z_;
  const MomentumProfile& p_;
  nm::QuadratureSpec spec_;
};

}  // namespace

SmearedResult smeared_inner_product(int bra_branch, int ket_branch, const MomentumProfile& g,
                                    const MomentumProfile& h, cplx z, const nm::QuadratureSpec& spec) {
  spec.validate();
  g.validate();
  h.validate();
  if (z.real() == 0.0) {
    throw SpectralSingularity(
        "smeared_inner_product: Re(z) = 0; branch 2 is not biorthonormal at k = |z|/2 (spectral singularity)");
  }
  if (z.real() < 0.0) {
    throw InvalidArgument("smeared_inner_product: Re(z) < 0 adds a bound state; continuum system is incomplete");
  }
  // Eigenfunction construction validates branches.
  Eigenfunction(bra_branch, g.k_lo, Which::Psi, z);
  Eigenfunction(ket_branch, h.k_lo, Which::Phi, z);

  nm::QuadratureSpec inner = spec.scaled(1e-2);
  const Packet bra(bra_branch, Which::Psi, z, g, inner);
  const Packet ket(ket_branch, Which::Phi, z, h, inner);
  auto integrand = [&](double x) { return std::conj(bra(x)) * ket(x); };

  // Panels of about one oscillation of the slowest packet component.
  const double panel = 2.0 * std::numbers::pi / std::max(g.k_hi, h.k_hi) * 4.0;
  auto band = [&](double lo, double hi) {
    std::vector<double> br;
    const int n = std::max(1, static_cast<int>(std::ceil((hi - lo) / panel)));
    for (int i = 0; i <= n; ++i) br.push_back(lo + (hi - lo) * i / n);
    return nm::integrate_piecewise(integrand, br, spec);
  };

  SmearedResult out{};
  out.expected = bra_branch == ket_branch ? profile_overlap(g, h, spec.scaled(1e-2)) : cplx{};
  double X = 32.0;
  auto total = band(-X, 0.0);
  total += band(0.0, X);
  out.converged = total.converged;
  constexpr double kMaxX = 4096.0;
  const double shell_tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(total.value));
  while (true) {
    auto shell = band(X, 2.0 * X);
    shell += band(-2.0 * X, -X);
    total += shell;
    X *= 2.0;
    out.tail_bound = std::abs(shell.value);
    if (out.tail_bound <= shell_tol) break;
    if (X >= kMaxX) {
      out.converged = false;
      break;
    }
  }
  out.converged = out.converged && total.converged;
  out.value = total.value;
  out.est_error = total.est_error + out.tail_bound;
  out.x_max = X;
  return out;
}

}  // namespace deltac::spectrum
