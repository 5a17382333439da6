#pragma once

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "deltac/metric/reduced_integrals.hpp"

namespace deltac::metric {

/// Value of a kernel at (x, y): c_d delta(x-y) + c_a delta(x+y) + smooth.
struct KernelSample {
  std::complex<double> delta_diag{};
  std::complex<double> delta_anti{};
  std::complex<double> smooth{};
};

/// Two-point kernel with the delta lines kept symbolic.
struct SingularSmoothKernel {
  std::function<std::complex<double>(double)> delta_diag;  // multiplies delta(x - y)
  std::function<std::complex<double>(double)> delta_anti;  // multiplies delta(x + y)
  std::function<std::complex<double>(double, double)> smooth;
  bool hermitian = false;
  bool parity = false;

  KernelSample operator()(double x, double y) const { return {delta_diag(x), delta_anti(x), smooth(x, y)}; }
};

enum class Abg { Alpha, Beta, Gamma };

/// alpha = [I0(x+y) + I0(x-y)] / 4pi, beta = [I1(x+y) + I1(y-x)] / 8pi i,
/// gamma = [I2(x-y) - I2(x+y)] / 16pi.
KernelSample abg_kernels(Abg which, double x, double y, const Coupling& c, Source source,
                         const numerics::QuadratureSpec& spec = {});

/// Evaluates eta_+(x, y) and caches I_n by |r|. Not for concurrent use; give
/// each thread its own instance.
class EtaAssembler {
 public:
  /// Throws per require_positive_re; the series source also applies check_epsilon.
  EtaAssembler(const Coupling& c, Source source, const numerics::QuadratureSpec& spec = {});

  /// delta bookkeeping from the explicit 1/2[delta(x-y) - delta(x+y)] plus
  /// the 2 pi delta(r) parts of alpha, and the smooth remainder.
  KernelSample operator()(double x, double y);

  const std::optional<std::string>& warning() const { return warning_; }
  /// false if any cached quadrature missed its tolerance
  bool converged() const { return converged_; }

 private:
  InResult In(int n, double r);

  Coupling c_;
  Source source_;
  numerics::QuadratureSpec spec_;
  std::map<std::pair<int, double>, InResult> cache_;
  std::optional<std::string> warning_;
  bool converged_ = true;
};

/// One-shot evaluation through a temporary EtaAssembler.
KernelSample eta_assemble(const Coupling& c, double x, double y, Source source,
                          const numerics::QuadratureSpec& spec = {});

enum class KernelVariant {
  Derived,    // order 2 recomputed from the alpha/beta/gamma assembly
  AsPrinted,  // literal closed form of order 2
};

/// Smooth part of the order-m kernel eta^(m)(x, y), m = 0..3 (0 for m = 0).
/// Depends on Re(z) only. Throws Unsupported for m outside 0..3.
std::complex<double> eta_order_kernel(int m, const Coupling& c, double x, double y,
                                      KernelVariant variant = KernelVariant::Derived);

/// eta_+ = sum_m eps^m eta^(m), orders 0..3.
struct MetricExpansion {
  Coupling coupling;
  std::vector<SingularSmoothKernel> orders;
  std::optional<std::string> warning;
};

/// Throws per require_positive_re and check_epsilon.
MetricExpansion make_expansion(const Coupling& c, KernelVariant variant = KernelVariant::Derived);

/// Schur bound sup_x int |eta^(m)(x, y)| dy >= ||eta^(m)||, m = 1..3.
/// Closed form, independent of Re(z): c1 = 2, c2 = 2/e, c3 = 3/e - 1/2.
double bound_constant(int m, const Coupling& c);

/// int sup_x |eta^(m)(x, y)| dy. Infinite for every m: each kernel has a
/// piece depending on x - y alone.
double naive_envelope_integral(int m, const Coupling& c);

}  // namespace deltac::metric
