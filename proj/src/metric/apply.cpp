#include "deltac/metric/apply.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <initializer_list>
#include <cmath>

#include "deltac/errors.hpp"

namespace deltac::metric {

using cplx = std::complex<double>;

GridFunction::GridFunction(std::vector<double> nodes, std::vector<cplx> values, std::vector<double> breaks)
    : nodes_(std::move(nodes)), values_(std::move(values)), breaks_(std::move(breaks)) {
  const std::size_t n = nodes_.size();
  if (n < 4) throw InvalidArgument("GridFunction: at least four nodes required");
  if (values_.size() != n) throw InvalidArgument("GridFunction: nodes and values differ in size");
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(nodes_[i]) || !std::isfinite(values_[i].real()) || !std::isfinite(values_[i].imag())) {
      throw InvalidArgument("GridFunction: non-finite node or value");
    }
    if (i > 0 && !(nodes_[i] > nodes_[i - 1])) throw InvalidArgument("GridFunction: nodes must increase strictly");
  }
  std::sort(breaks_.begin(), breaks_.end());
  for (double b : breaks_) {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), b);
    if (it == nodes_.end() || *it != b) throw InvalidArgument("GridFunction: breaks must be grid nodes");
    break_index_.push_back(static_cast<std::size_t>(it - nodes_.begin()));
  }
}

cplx GridFunction::operator()(double x) const {
  if (x < nodes_.front() || x > nodes_.back()) return 0.0;
  auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x);
  const std::size_t n = nodes_.size();
  const std::size_t i = it == nodes_.end() ? n - 2 : static_cast<std::size_t>(it - nodes_.begin()) - 1;
  // the smooth piece containing cell [i, i+1]
  std::size_t lo = 0, hi = n - 1;
  for (std::size_t b : break_index_) {
    if (b <= i) lo = b;
    if (b >= i + 1) {
      hi = b;
      break;
    }
  }
  std::size_t first = i >= 1 ? i - 1 : 0;
  first = std::max(first, lo);
  if (first + 3 > hi) first = hi >= 3 ? std::max(lo, hi - 3) : lo;
  const std::size_t count = std::min<std::size_t>(4, hi - first + 1);
  cplx out{};
  for (std::size_t j = first; j < first + count; ++j) {
    double w = 1.0;
    for (std::size_t k = first; k < first + count; ++k) {
      if (k != j) w *= (x - nodes_[k]) / (nodes_[j] - nodes_[k]);
    }
    out += w * values_[j];
  }
  return out;
}

std::pair<double, double> GridFunction::support(double threshold) const {
  double peak = 0.0;
  for (const auto& v : values_) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) return {0.0, 0.0};
  const double cut = threshold * peak;
  std::size_t lo = 0, hi = values_.size() - 1;
  while (std::abs(values_[lo]) <= cut) ++lo;
  while (std::abs(values_[hi]) <= cut) --hi;
  return {nodes_[lo], nodes_[hi]};
}

std::vector<double> default_grid(double lo, double hi, double re_z) {
  if (!(hi > lo) || !(re_z > 0.0)) throw InvalidArgument("default_grid: need lo < hi and Re(z) > 0");
  const double step = 0.05 * 2.0 / re_z;
  auto uniform = [step](double a, double b, std::vector<double>& out) {
    const auto n = static_cast<std::size_t>(std::ceil((b - a) / step));
    for (std::size_t i = 0; i <= n; ++i) {
      const double x = a + (b - a) * static_cast<double>(i) / static_cast<double>(n);
      if (out.empty() || x > out.back()) out.push_back(x);
    }
  };
  std::vector<double> out;
  if (lo < 0.0 && hi > 0.0) {
    uniform(lo, 0.0, out);
    out.back() = 0.0;
    uniform(0.0, hi, out);
  } else {
    uniform(lo, hi, out);
  }
  return out;
}

double metric_margin(double re_z) { return 10.0 / re_z; }

namespace {

void check_margin(const GridFunction& psi, double re_z) {
  const auto [slo, shi] = psi.support();
  const double margin = metric_margin(re_z);
  const double need_lo = slo - margin, need_hi = shi + margin;
  if (psi.nodes().front() > need_lo || psi.nodes().back() < need_hi) {
    throw MarginError("apply_metric: grid must cover [" + std::to_string(need_lo) + ", " + std::to_string(need_hi) +
                          "] (support plus 10/Re(z))",
                      need_lo, need_hi);
  }
}

constexpr std::array<double, 4> kGlNodes = {0.1834346424956498049, 0.5255324099163289858,
                                            0.7966664774136267396, 0.9602898564975362317};
constexpr std::array<double, 4> kGlWeights = {0.3626837833783619830, 0.3137066458778872873,
                                              0.2223810344533744706, 0.1012285362903762591};

// 8-point Gauss-Legendre on every cell between consecutive cuts.
template <class F>
cplx cell_quadrature(F&& f, const std::vector<double>& cuts) {
  cplx total{};
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double c = 0.5 * (cuts[i] + cuts[i + 1]);
    const double h = 0.5 * (cuts[i + 1] - cuts[i]);
    cplx part{};
    for (std::size_t j = 0; j < kGlNodes.size(); ++j) {
      part += kGlWeights[j] * (f(c - h * kGlNodes[j]) + f(c + h * kGlNodes[j]));
    }
    total += h * part;
  }
  return total;
}

// Grid nodes inside [lo, hi] plus the extra cuts, sorted and unique.
std::vector<double> cuts_between(const std::vector<double>& nodes, double lo, double hi,
                                 std::initializer_list<double> extra, const std::vector<double>& more = {}) {
  std::vector<double> out = {lo, hi};
  for (auto it = std::upper_bound(nodes.begin(), nodes.end(), lo); it != nodes.end() && *it < hi; ++it) {
    out.push_back(*it);
  }
  for (double b : extra) {
    if (b > lo && b < hi) out.push_back(b);
  }
  for (double b : more) {
    if (b > lo && b < hi) out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// int K(x, y) psi(y) dy over the support of psi. The interpolant is a cubic
// on each cell and the kernels are smooth off y = 0, +-x, so cells split at
// those points are integrated essentially exactly.
template <class K>
cplx integrate_row(const GridFunction& psi, std::pair<double, double> range, double x, K&& kernel) {
  const auto cuts = cuts_between(psi.nodes(), range.first, range.second, {-std::abs(x), 0.0, std::abs(x)}, psi.breaks());
  return cell_quadrature([&](double y) { return kernel(x, y) * psi(y); }, cuts);
}

// support widened by one cell on each side, clipped to the grid
std::pair<double, double> integration_range(const GridFunction& psi) {
  auto [lo, hi] = psi.support(1e-16);
  const auto& n = psi.nodes();
  auto ilo = std::lower_bound(n.begin(), n.end(), lo);
  auto ihi = std::lower_bound(n.begin(), n.end(), hi);
  lo = ilo == n.begin() ? n.front() : *(ilo - 1);
  hi = (ihi == n.end() || ihi + 1 == n.end()) ? n.back() : *(ihi + 1);
  if (!(lo < hi)) return {n.front(), n.back()};
  return {lo, hi};
}

std::vector<double> output_breaks(const GridFunction& psi) {
  std::vector<double> br = psi.breaks();
  const auto& nodes = psi.nodes();
  if (std::binary_search(nodes.begin(), nodes.end(), 0.0) && !std::binary_search(br.begin(), br.end(), 0.0)) {
    br.push_back(0.0);
  }
  return br;
}

}  // namespace

GridFunction apply_order(const GridFunction& psi, const MetricExpansion& expansion, int m) {
  if (m < 0 || m > 3) throw Unsupported("apply_order: only orders 0..3 are available");
  if (m == 0) return psi;
  check_margin(psi, expansion.coupling.re());
  const auto& kern = expansion.orders.at(static_cast<std::size_t>(m)).smooth;
  std::vector<cplx> out;
  out.reserve(psi.nodes().size());
  const auto range = integration_range(psi);
  for (double x : psi.nodes()) out.push_back(integrate_row(psi, range, x, kern));
  return GridFunction(psi.nodes(), std::move(out), output_breaks(psi));
}

GridFunction apply_metric(const GridFunction& psi, const MetricExpansion& expansion, int order) {
  if (order < 0) throw InvalidArgument("apply_metric: order must be >= 0");
  if (order > 3) throw Unsupported("apply_metric: only orders up to 3 are available");
  if (order == 0) return psi;
  check_margin(psi, expansion.coupling.re());
  const double eps = expansion.coupling.epsilon();
  auto kern = [&](double x, double y) {
    cplx sum{};
    double p = 1.0;
    for (int m = 1; m <= order; ++m) {
      p *= eps;
      sum += p * expansion.orders[static_cast<std::size_t>(m)].smooth(x, y);
    }
    return sum;
  };
  std::vector<cplx> out;
  out.reserve(psi.nodes().size());
  const auto range = integration_range(psi);
  for (std::size_t i = 0; i < psi.nodes().size(); ++i) {
    const double x = psi.nodes()[i];
    out.push_back(psi.values()[i] + integrate_row(psi, range, x, kern));
  }
  return GridFunction(psi.nodes(), std::move(out), output_breaks(psi));
}

cplx inner_product(const GridFunction& u, const GridFunction& v) {
  const double lo = std::max(u.nodes().front(), v.nodes().front());
  const double hi = std::min(u.nodes().back(), v.nodes().back());
  if (!(lo < hi)) return 0.0;
  std::vector<double> br = v.breaks();
  br.insert(br.end(), u.breaks().begin(), u.breaks().end());
  br.insert(br.end(), v.nodes().begin(), v.nodes().end());
  const auto cuts = cuts_between(u.nodes(), lo, hi, {}, br);
  return cell_quadrature([&](double x) { return std::conj(u(x)) * v(x); }, cuts);
}

cplx integrate_weighted(const GridFunction& psi, const std::function<double(double)>& w,
                        std::span<const double> kinks) {
  std::vector<double> br = psi.breaks();
  br.insert(br.end(), kinks.begin(), kinks.end());
  br.insert(br.end(), psi.nodes().begin(), psi.nodes().end());
  const auto cuts = cuts_between(psi.nodes(), psi.nodes().front(), psi.nodes().back(), {}, br);
  return cell_quadrature([&](double x) { return w(x) * psi(x); }, cuts);
}

GramReport gram_matrix(std::span<const GridFunction> family, const MetricExpansion& expansion, int order) {
  GramReport out;
  out.n = static_cast<int>(family.size());
  std::vector<GridFunction> images;
  images.reserve(family.size());
  for (const auto& f : family) images.push_back(apply_metric(f, expansion, order));
  Eigen::MatrixXcd G(out.n, out.n);
  for (int i = 0; i < out.n; ++i) {
    for (int j = 0; j < out.n; ++j) G(i, j) = inner_product(family[i], images[j]);
  }
  out.matrix.resize(static_cast<std::size_t>(out.n * out.n));
  for (int i = 0; i < out.n; ++i) {
    for (int j = 0; j < out.n; ++j) {
      out.matrix[static_cast<std::size_t>(i * out.n + j)] = G(i, j);
      out.hermiticity_defect = std::max(out.hermiticity_defect, std::abs(G(i, j) - std::conj(G(j, i))));
    }
  }
  const Eigen::MatrixXcd H = 0.5 * (G + G.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(H, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  out.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  return out;
}

}  // namespace deltac::metric
