#include "deltac/metric/kernels.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "deltac/errors.hpp"
#include "deltac/spectrum/eigenfunctions.hpp"

namespace deltac::metric {

using cplx = std::complex<double>;
using spectrum::sgn;
using std::numbers::pi;
namespace nm = numerics;

namespace {

double theta(double t) { return 0.5 * (1.0 + sgn(t)); }

InResult In_by_source(int n, double r, const Coupling& c, Source source, const nm::QuadratureSpec& spec) {
  return source == Source::Series ? In_series(n, r, c) : In_quadrature(n, r, c, spec);
}

}  // namespace

KernelSample abg_kernels(Abg which, double x, double y, const Coupling& c, Source source,
                         const nm::QuadratureSpec& spec) {
  require_positive_re(c, "abg_kernels");
  auto I = [&](int n, double r) { return In_by_source(n, r, c, source, spec); };
  KernelSample out;
  switch (which) {
    case Abg::Alpha: {
      const InResult p = I(0, x + y), m = I(0, x - y);
      out.delta_anti = p.delta_coeff / (4.0 * pi);
      out.delta_diag = m.delta_coeff / (4.0 * pi);
      out.smooth = (p.smooth + m.smooth) / (4.0 * pi);
      break;
    }
    case Abg::Beta:
      out.smooth = (I(1, x + y).smooth + I(1, y - x).smooth) / cplx{0.0, 8.0 * pi};
      break;
    case Abg::Gamma:
      out.smooth = (I(2, x - y).smooth - I(2, x + y).smooth) / (16.0 * pi);
      break;
  }
  return out;
}

EtaAssembler::EtaAssembler(const Coupling& c, Source source, const nm::QuadratureSpec& spec)
    : c_(c), source_(source), spec_(spec) {
  require_positive_re(c, "eta_assemble");
  spec.validate();
  if (source == Source::Series) warning_ = check_epsilon(c.epsilon());
}

InResult EtaAssembler::In(int n, double r) {
  const double ar = std::abs(r);
  auto it = cache_.find({n, ar});
  if (it == cache_.end()) {
    InResult v = In_by_source(n, ar, c_, source_, spec_);
    converged_ = converged_ && v.converged;
    it = cache_.emplace(std::make_pair(n, ar), v).first;
  }
  InResult v = it->second;
  if (n == 1 && r < 0.0) v.smooth = -v.smooth;  // I1 odd, I0 and I2 even
  return v;
}

KernelSample EtaAssembler::operator()(double x, double y) {
  const InResult i0p = In(0, x + y), i0m = In(0, x - y);
  const InResult i1p = In(1, x + y), i1m = In(1, x - y);
  const InResult i2p = In(2, x + y), i2m = In(2, x - y);

  const cplx alpha = (i0p.smooth + i0m.smooth) / (4.0 * pi);
  const cplx beta_xy = (i1p.smooth - i1m.smooth) / cplx{0.0, 8.0 * pi};  // I1(y-x) = -I1(x-y)
  const cplx beta_yx = (i1p.smooth + i1m.smooth) / cplx{0.0, 8.0 * pi};
  const cplx gamma = (i2m.smooth - i2p.smooth) / (16.0 * pi);
  const cplx z = c_.z;

  KernelSample out;
  out.delta_diag = 0.5 + i0m.delta_coeff / (4.0 * pi);
  out.delta_anti = -0.5 + i0p.delta_coeff / (4.0 * pi);
  out.smooth = alpha + z * beta_xy * sgn(y) + std::conj(z) * beta_yx * sgn(x) + std::norm(z) * gamma * sgn(x) * sgn(y);
  return out;
}

KernelSample eta_assemble(const Coupling& c, double x, double y, Source source, const nm::QuadratureSpec& spec) {
  EtaAssembler eta(c, source, spec);
  return eta(x, y);
}

std::complex<double> eta_order_kernel(int m, const Coupling& c, double x, double y, KernelVariant variant) {
  if (m < 0 || m > 3) throw Unsupported("eta_order_kernel: only orders 0..3 are available");
  require_positive_re(c, "eta_order_kernel");
  if (m == 0) return 0.0;
  const double rho = c.re();
  const double p = x * y;
  const double dm = std::abs(x - y);
  const double dp = std::abs(x + y);
  const double em = std::exp(-0.5 * rho * dm);
  const double ep = std::exp(-0.5 * rho * dp);
  const double s = sgn(y * y - x * x);
  const double tp = theta(p), tn = theta(-p);
  switch (m) {
    case 1:
      return cplx{0.0, 0.25 * rho * (tp * em + tn * ep) * s};
    case 2:
      if (variant == KernelVariant::AsPrinted) {
        return rho / 16.0 * ((-rho * dm * tp + tn) * em + (-rho * dp * tn + tp) * ep);
      }
      return rho / 16.0 * (((2.0 - rho * dm) * tp - tn) * em + ((2.0 - rho * dp) * tn - tp) * ep);
    default:
      return cplx{0.0, rho * rho / 32.0 *
                           (tp * dm * (1.0 - 0.5 * rho * dm) * em + tn * dp * (1.0 - 0.5 * rho * dp) * ep) * s};
  }
}

MetricExpansion make_expansion(const Coupling& c, KernelVariant variant) {
  require_positive_re(c, "make_expansion");
  MetricExpansion out{c, {}, check_epsilon(c.epsilon())};
  SingularSmoothKernel identity;
  identity.delta_diag = [](double) { return cplx{1.0, 0.0}; };
  identity.delta_anti = [](double) { return cplx{}; };
  identity.smooth = [](double, double) { return cplx{}; };
  identity.hermitian = identity.parity = true;
  out.orders.push_back(identity);
  for (int m = 1; m <= 3; ++m) {
    SingularSmoothKernel k = identity;
    k.delta_diag = [](double) { return cplx{}; };
    k.smooth = [m, c, variant](double x, double y) { return eta_order_kernel(m, c, x, y, variant); };
    out.orders.push_back(k);
  }
  return out;
}

double bound_constant(int m, const Coupling& c) {
  require_positive_re(c, "bound_constant");
  switch (m) {
    case 1: return 2.0;
    case 2: return 2.0 / std::numbers::e;
    case 3: return 3.0 / std::numbers::e - 0.5;
    default: throw Unsupported("bound_constant: m must be 1, 2 or 3");
  }
}

double naive_envelope_integral(int m, const Coupling& c) {
  require_positive_re(c, "naive_envelope_integral");
  if (m < 1 || m > 3) throw Unsupported("naive_envelope_integral: m must be 1, 2 or 3");
  // sup_x |eta^(m)(x, y)| is attained near x = y and does not decay in y.
  return std::numeric_limits<double>::infinity();
}

}  // namespace deltac::metric
