#include <cmath>
#include <complex>
#include <algorithm>
#include <numbers>
#include <random>
#include <vector>

#include "deltac/errors.hpp"
#include "deltac/metric/apply.hpp"
#include "deltac/metric/kernels.hpp"
#include "deltac/metric/reduced_integrals.hpp"
#include "deltac/numerics/quadrature.hpp"
#include "doctest.h"

using namespace deltac::metric;
using cplx = std::complex<double>;
using std::numbers::pi;
namespace nm = deltac::numerics;

TEST_CASE("f and its series") {
  for (double q : {0.0, 0.3, 1.0, 7.0}) CHECK(f_eval(q, 0.0) == 1.0);
  for (double e : {0.1, 0.5, 0.9}) CHECK(f_eval(1.0, e) == doctest::Approx(1.0 / std::sqrt(1.0 + std::pow(e, 4) / 4.0)));
  CHECK(f_eval(0.0, 1.0) == doctest::Approx(0.5));
  CHECK(f_series(0.0, 0.1, 4) == doctest::Approx(0.9901).epsilon(1e-14));
  // q = 1: eps^2 coefficient vanishes, eps^4 coefficient -1/8
  CHECK(f_series(1.0, 0.2, 2) == 1.0);
  CHECK(f_series(1.0, 0.2, 4) == doctest::Approx(1.0 - 0.0016 / 8.0).epsilon(1e-15));
  for (double q : {0.0, 0.5, 2.0}) {
    const double r1 = std::abs(f_eval(q, 0.1) - f_series(q, 0.1, 4));
    const double r2 = std::abs(f_eval(q, 0.05) - f_series(q, 0.05, 4));
    CHECK(r1 / r2 == doctest::Approx(64.0).epsilon(0.05));
  }
  CHECK_THROWS_AS(f_series(0.0, 0.1, 5), deltac::Unsupported);
  CHECK_THROWS_AS(f_eval(0.0, std::nan("")), deltac::InvalidArgument);
}

TEST_CASE("epsilon guard and coupling checks") {
  CHECK_FALSE(check_epsilon(0.1).has_value());
  CHECK(check_epsilon(-0.5).has_value());
  CHECK_THROWS_AS(check_epsilon(1.0), deltac::OutOfRegime);
  CHECK_THROWS_AS(make_expansion(Coupling{{2.0, 3.0}}), deltac::OutOfRegime);
  CHECK_THROWS_AS(make_expansion(Coupling{{0.0, 3.0}}), deltac::SpectralSingularity);
  CHECK_THROWS_AS(In_quadrature(0, 1.0, Coupling{{-1.0, 0.1}}), deltac::InvalidArgument);
  CHECK(make_expansion(Coupling{{2.0, 0.8}}).warning.has_value());
}

TEST_CASE("I_n quadrature examples") {
  const Coupling herm{{2.0, 0.0}};  // a = 1, eps = 0
  const auto i2 = In_quadrature(2, 1.0, herm);
  CHECK(i2.converged);
  CHECK(std::abs(i2.smooth - cplx{pi / std::exp(1.0), 0.0}) < 1e-9);
  CHECK(In_quadrature(1, 0.0, Coupling{{2.0, 0.3}}).smooth == cplx{});
  for (double a : {0.25, 1.0, 4.0}) {
    const Coupling c{{2.0 * std::sqrt(a), 0.0}};
    for (double r : {0.3, 1.0, 2.5}) {
      const auto i0 = In_quadrature(0, r, c);
      CHECK(i0.delta_coeff == 2.0 * pi);
      CHECK(std::abs(i0.smooth + pi * std::sqrt(a) * std::exp(-std::sqrt(a) * r)) < 1e-9);
    }
  }
}

TEST_CASE("I_n series examples") {
  const Coupling c{{2.0, 0.2}};  // a = 1, eps = 0.1
  const auto i0 = In_series(0, 0.0, c);
  CHECK(i0.delta_coeff == 2.0 * pi);
  CHECK(i0.smooth.real() == doctest::Approx(2.0 * pi * -0.49875).epsilon(1e-15));
  const Coupling h{{3.0, 0.0}};
  const double sa = 1.5;
  CHECK(In_series(2, 0.7, h).smooth.real() == doctest::Approx(pi / sa * std::exp(-sa * 0.7)));
  const double s = 1.5 * 0.7;
  const Coupling g{{3.0, 0.3}};
  CHECK(In_series(1, 0.7, g).smooth.imag() ==
        doctest::Approx(pi * std::exp(-s) * (1.0 + 0.25 * (1.0 - s) * s * 0.01)).epsilon(1e-14));
}

TEST_CASE("I_n parity in r") {
  const Coupling c{{1.4, 0.1}};
  for (double r : {0.2, 1.3, 3.1}) {
    for (int n : {0, 1, 2}) {
      const double sign = n == 1 ? -1.0 : 1.0;
      CHECK(std::abs(In_series(n, -r, c).smooth - sign * In_series(n, r, c).smooth) < 1e-15);
      CHECK(std::abs(In_quadrature(n, -r, c).smooth - sign * In_quadrature(n, r, c).smooth) < 1e-12);
    }
  }
}

TEST_CASE("I_n series against quadrature: fourth-order residual") {
  for (int n : {0, 1, 2}) {
    for (double r : {0.5, 2.0}) {
      const double d1 = std::abs(In_series(n, r, Coupling::from_re_eps(2.0, 0.1)).smooth -
                                 In_quadrature(n, r, Coupling::from_re_eps(2.0, 0.1)).smooth);
      const double d2 = std::abs(In_series(n, r, Coupling::from_re_eps(2.0, 0.05)).smooth -
                                 In_quadrature(n, r, Coupling::from_re_eps(2.0, 0.05)).smooth);
      INFO("n=" << n << " r=" << r << " d1=" << d1 << " d2=" << d2);
      CHECK(d1 < 1e-3);
      CHECK(d1 / d2 >= 12.0);
      CHECK(d1 / d2 <= 20.0);
    }
  }
}

TEST_CASE("alpha, beta, gamma") {
  const Coupling h{{2.0, 0.0}};
  for (double x : {0.3, 1.0}) {
    const auto g = abg_kernels(Abg::Gamma, x, x, h, Source::Series);
    CHECK(g.smooth.real() == doctest::Approx((1.0 - std::exp(-2.0 * x)) / 16.0).epsilon(1e-14));
    const auto gq = abg_kernels(Abg::Gamma, x, x, h, Source::Quadrature);
    CHECK(std::abs(gq.smooth - g.smooth) < 1e-10);
  }
  CHECK(abg_kernels(Abg::Beta, 0.0, 0.0, Coupling{{2.0, 0.2}}, Source::Quadrature).smooth == cplx{});
  CHECK(abg_kernels(Abg::Beta, 0.0, 0.0, Coupling{{2.0, 0.2}}, Source::Series).smooth == cplx{});
  const Coupling c{{2.0, 0.2}};
  const auto as = abg_kernels(Abg::Alpha, 0.5, 1.5, c, Source::Series);
  const auto aq = abg_kernels(Abg::Alpha, 0.5, 1.5, c, Source::Quadrature);
  CHECK(std::abs(as.smooth - aq.smooth) < 1e-6);
  CHECK(aq.delta_diag == cplx{0.5, 0.0});
  CHECK(aq.delta_anti == cplx{0.5, 0.0});
}

TEST_CASE("eta assembly: delta bookkeeping and Hermitian limit") {
  for (double eps : {0.0, 0.05, 0.2}) {
    const Coupling c = Coupling::from_re_eps(2.0, eps);
    for (Source src : {Source::Series, Source::Quadrature}) {
      const auto k = eta_assemble(c, 0.7, -1.2, src);
      CHECK(k.delta_diag == cplx{1.0, 0.0});
      CHECK(k.delta_anti == cplx{0.0, 0.0});
    }
  }
  const Coupling h{{2.0, 0.0}};
  EtaAssembler series(h, Source::Series), quad(h, Source::Quadrature);
  for (double x : {-1.5, -0.2, 0.4, 2.0}) {
    for (double y : {-0.9, 0.1, 1.7}) {
      CHECK(std::abs(series(x, y).smooth) < 1e-14);
      CHECK(std::abs(quad(x, y).smooth) < 1e-9);
    }
  }
}

TEST_CASE("eta assembly against the order kernels") {
  const double xs[][2] = {{1.0, 2.0}, {0.5, 1.5}, {-0.7, 1.3}, {0.3, -2.2}, {1.1, 0.4}};
  for (const auto& p : xs) {
    double d[2];
    int i = 0;
    for (double eps : {0.1, 0.05}) {
      const Coupling c = Coupling::from_re_eps(2.0, eps);
      cplx sum{};
      for (int m = 1; m <= 3; ++m) sum += std::pow(eps, m) * eta_order_kernel(m, c, p[0], p[1]);
      d[i++] = std::abs(eta_assemble(c, p[0], p[1], Source::Quadrature).smooth - sum);
    }
    INFO("(x,y)=(" << p[0] << "," << p[1] << ") d=" << d[0] << "," << d[1]);
    CHECK(d[0] < 1e-4);
    CHECK(d[0] / d[1] > 12.0);
    CHECK(d[0] / d[1] < 20.0);
  }
}

TEST_CASE("order kernels: examples") {
  const Coupling c{{2.0, 0.2}};
  CHECK(std::abs(eta_order_kernel(1, c, 1.0, 2.0) - cplx{0.0, 0.5 * std::exp(-1.0)}) < 1e-16);
  for (double x : {0.2, 1.0, 3.0}) {
    CHECK(eta_order_kernel(1, c, x, x) == cplx{});
    CHECK(eta_order_kernel(2, c, x, x, KernelVariant::AsPrinted).real() ==
          doctest::Approx(std::exp(-2.0 * x) / 8.0).epsilon(1e-15));
    CHECK(eta_order_kernel(2, c, x, x).real() == doctest::Approx((2.0 - std::exp(-2.0 * x)) / 8.0).epsilon(1e-15));
  }
  CHECK(eta_order_kernel(0, c, 0.3, 0.1) == cplx{});
  CHECK_THROWS_AS(eta_order_kernel(4, c, 0.0, 0.0), deltac::Unsupported);
  CHECK_THROWS_AS(eta_order_kernel(-1, c, 0.0, 0.0), deltac::Unsupported);
  // orders 1 and 3 imaginary, 2 real
  CHECK(eta_order_kernel(1, c, 0.3, -1.1).real() == 0.0);
  CHECK(eta_order_kernel(3, c, 0.3, -1.1).real() == 0.0);
  CHECK(eta_order_kernel(2, c, 0.3, -1.1).imag() == 0.0);
}

TEST_CASE("order kernels: Hermiticity and parity on random pairs") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  std::uniform_real_distribution<double> rr(0.3, 4.0);
  for (int i = 0; i < 200; ++i) {
    const Coupling c{{rr(rng), 0.1}};
    const double x = u(rng), y = u(rng);
    for (int m = 1; m <= 3; ++m) {
      for (auto v : {KernelVariant::Derived, KernelVariant::AsPrinted}) {
        const cplx k = eta_order_kernel(m, c, x, y, v);
        CHECK(std::abs(std::conj(k) - eta_order_kernel(m, c, y, x, v)) <= 1e-12);
        CHECK(std::abs(k - eta_order_kernel(m, c, -x, -y, v)) <= 1e-12);
      }
    }
  }
  const auto e = make_expansion(Coupling{{2.0, 0.2}});
  REQUIRE(e.orders.size() == 4);
  CHECK(e.orders[0](0.3, 0.3).delta_diag == cplx{1.0, 0.0});
  CHECK(e.orders[0](0.3, -0.3).delta_anti == cplx{});
  CHECK(e.orders[2](0.3, 0.4).smooth == eta_order_kernel(2, e.coupling, 0.3, 0.4));
}

TEST_CASE("Schur bound constants") {
  CHECK(std::isinf(naive_envelope_integral(1, Coupling{{2.0, 0.1}})));
  for (double rho : {0.5, 2.0}) {
    const Coupling c{{rho, 0.0}};
    for (int m = 1; m <= 3; ++m) {
      const double bound = bound_constant(m, c);
      double best = 0.0;
      for (double x : {0.0, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 40.0 / rho}) {
        std::vector<double> br = {-60.0 / rho - x, -x, 0.0, x, 60.0 / rho + x};
        br.erase(std::unique(br.begin(), br.end()), br.end());
        const double row =
            nm::integrate_piecewise([&](double y) { return std::abs(eta_order_kernel(m, c, x, y)); }, br).value;
        CHECK(row <= bound * (1.0 + 1e-9));
        best = std::max(best, row);
      }
      CHECK(best >= bound * (1.0 - 1e-6));
    }
  }
  CHECK_THROWS_AS(bound_constant(4, Coupling{{1.0, 0.0}}), deltac::Unsupported);
}

namespace {

GridFunction random_packet(std::mt19937_64& rng, const std::vector<double>& grid, bool odd = false) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double c1 = 1.5 * u(rng), c2 = 1.5 * u(rng);
  const double k1 = 2.0 * u(rng), k2 = 2.0 * u(rng);
  const cplx a1{u(rng), u(rng)}, a2{u(rng), u(rng)};
  const double w = 0.6 + 0.3 * (u(rng) + 1.0);
  auto f = [=](double x) {
    return a1 * std::exp(cplx{-(x - c1) * (x - c1) / (2 * w * w), k1 * x}) +
           a2 * std::exp(cplx{-(x - c2) * (x - c2) / (2 * w * w), k2 * x});
  };
  if (odd) return GridFunction::sample(grid, [&](double x) { return f(x) - f(-x); });
  return GridFunction::sample(grid, f);
}

double l2(const GridFunction& g) { return std::sqrt(inner_product(g, g).real()); }

}  // namespace

TEST_CASE("apply_metric") {
  const Coupling c = Coupling::from_re_eps(2.0, 0.1);
  const auto e = make_expansion(c);
  const auto grid = default_grid(-18.0, 18.0, 2.0);
  std::mt19937_64 rng(23);
  const auto psi = random_packet(rng, grid);

  const auto same = apply_metric(psi, e, 0);
  CHECK(same.values() == psi.values());

  const auto odd = random_packet(rng, grid, true);
  const auto q = inner_product(odd, apply_metric(odd, e, 3));
  CHECK(std::abs(q.imag()) <= 1e-9 * std::abs(q));

  const auto g = GridFunction::sample(grid, [](double x) { return std::exp(-x * x); });
  const auto e2 = make_expansion(Coupling::from_re_eps(2.0, 0.05));
  auto deviation = [&](const MetricExpansion& ex) {
    const auto out = apply_metric(g, ex, 3);
    std::vector<cplx> d;
    for (std::size_t i = 0; i < out.values().size(); ++i) d.push_back(out.values()[i] - g.values()[i]);
    return l2(GridFunction(grid, d));
  };
  CHECK(deviation(e) / deviation(e2) == doctest::Approx(2.0).epsilon(0.1));

  const auto narrow = GridFunction::sample(default_grid(-4.0, 4.0, 2.0), [](double x) { return std::exp(-x * x); });
  try {
    apply_metric(narrow, e, 1);
    FAIL("expected MarginError");
  } catch (const deltac::MarginError& err) {
    CHECK(err.required_lo() < -4.0);
    CHECK(err.required_hi() > 4.0);
  }
  CHECK_THROWS_AS(apply_metric(psi, e, 4), deltac::Unsupported);
}

TEST_CASE("operator norm below the Schur bound") {
  const Coupling c = Coupling::from_re_eps(2.0, 0.1);
  const auto e = make_expansion(c);
  const auto grid = default_grid(-18.0, 18.0, 2.0);
  std::mt19937_64 rng(29);
  for (int i = 0; i < 20; ++i) {
    const auto psi = random_packet(rng, grid);
    for (int m = 1; m <= 3; ++m) {
      CHECK(l2(apply_order(psi, e, m)) <= bound_constant(m, c) * l2(psi));
    }
  }
}

TEST_CASE("Gram matrix positive definite for small eps") {
  const auto grid = default_grid(-18.0, 18.0, 2.0);
  std::mt19937_64 rng(31);
  std::vector<GridFunction> fam;
  for (int i = 0; i < 8; ++i) fam.push_back(random_packet(rng, grid));
  for (double eps : {0.01, 0.05, 0.1}) {
    const auto rep = gram_matrix(fam, make_expansion(Coupling::from_re_eps(2.0, eps)), 3);
    CHECK(rep.n == 8);
    CHECK(rep.eigenvalues.front() > 0.0);
    // limited by cubic interpolation at spacing 0.05
    CHECK(rep.hermiticity_defect < 1e-5);
  }
}

TEST_CASE("GridFunction") {
  CHECK_THROWS_AS(GridFunction({0.0, 1.0, 2.0}, {1.0, 1.0, 1.0}), deltac::InvalidArgument);
  CHECK_THROWS_AS(GridFunction({0.0, 1.0, 1.0, 2.0}, {1.0, 1.0, 1.0, 1.0}), deltac::InvalidArgument);
  CHECK_THROWS_AS(GridFunction({0.0, 1.0, 2.0, 3.0}, {1.0, NAN, 1.0, 1.0}), deltac::InvalidArgument);
  CHECK_THROWS_AS(GridFunction({0.0, 1.0, 2.0, 3.0}, {1.0, 1.0, 1.0, 1.0}, {1.5}), deltac::InvalidArgument);
  std::vector<double> nodes;
  for (int i = 0; i <= 200; ++i) nodes.push_back(-5.0 + 0.05 * i);
  const auto g = GridFunction::sample(nodes, [](double x) { return std::exp(-x * x); });
  for (double x : {-1.234, 0.01, 2.7}) CHECK(std::abs(g(x) - std::exp(-x * x)) < 1e-5);
  CHECK(g(6.0) == cplx{});
  // cubics are reproduced exactly, and a kink at a break node costs nothing
  const auto cubic = GridFunction::sample(nodes, [](double x) { return x * x * x - 2.0 * x; });
  CHECK(std::abs(cubic(1.2345) - (std::pow(1.2345, 3) - 2.0 * 1.2345)) < 1e-12);
  const auto kink = GridFunction::sample(nodes, [](double x) { return std::abs(x); }, {0.0});
  CHECK(std::abs(kink(0.013) - 0.013) < 1e-14);
  CHECK(std::abs(kink(-0.013) - 0.013) < 1e-14);
  const auto grid = default_grid(-1.03, 2.0, 2.0);
  CHECK(std::binary_search(grid.begin(), grid.end(), 0.0));
  for (std::size_t i = 1; i < grid.size(); ++i) CHECK(grid[i] - grid[i - 1] <= 0.05 + 1e-12);
  const auto [lo, hi] = g.support(1e-6);
  CHECK(lo == doctest::Approx(-3.7).epsilon(0.02));
  CHECK(hi == doctest::Approx(3.7).epsilon(0.02));
}
