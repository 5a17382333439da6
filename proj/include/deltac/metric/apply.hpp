#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "deltac/metric/kernels.hpp"

namespace deltac::metric {

/// Samples on a strictly increasing grid. Interpolation is piecewise cubic:
/// on each cell, the cubic through the four nearest nodes, with stencils not
/// crossing a break node (where the function may have a kink). Evaluates to 0
/// outside the grid.
class GridFunction {
 public:
  /// Throws InvalidArgument for fewer than 4 nodes, non-increasing nodes,
  /// mismatched sizes, non-finite values, or breaks that are not nodes.
  GridFunction(std::vector<double> nodes, std::vector<std::complex<double>> values,
               std::vector<double> breaks = {});

  template <class F>
  static GridFunction sample(std::vector<double> nodes, F&& f, std::vector<double> breaks = {}) {
    std::vector<std::complex<double>> v;
    v.reserve(nodes.size());
    for (double x : nodes) v.push_back(f(x));
    return GridFunction(std::move(nodes), std::move(v), std::move(breaks));
  }

  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<std::complex<double>>& values() const { return values_; }
  const std::vector<double>& breaks() const { return breaks_; }
  static constexpr int degree = 3;

  std::complex<double> operator()(double x) const;

  /// [lo, hi] spanned by nodes with |value| > threshold * max |value|.
  std::pair<double, double> support(double threshold = 1e-12) const;

 private:
  std::vector<double> nodes_;
  std::vector<std::complex<double>> values_;
  std::vector<double> breaks_;
  std::vector<std::size_t> break_index_;  // sorted node indices of the breaks
};

/// Grid on [lo, hi] with spacing at most 0.05 * 2/Re(z), uniform on each side
/// of 0 and with 0 as a node when lo < 0 < hi.
std::vector<double> default_grid(double lo, double hi, double re_z);

/// Margin the metric needs beyond the support: 10 / Re(z).
double metric_margin(double re_z);

/// The result carries a break at x = 0 when 0 is a node (kernels have a
/// derivative kink there).
/// (eta_+ psi)(x) = psi(x) + sum_{m=1}^{N} eps^m int eta^(m)(x, y) psi(y) dy at
/// every node. The y integral runs over the support of psi, cell by cell with
/// 8-point Gauss-Legendre, cells split at y = 0, +-x. Throws MarginError if the
/// grid does not extend metric_margin past the support of psi, Unsupported
/// for N > 3.
GridFunction apply_metric(const GridFunction& psi, const MetricExpansion& expansion, int order);

/// Only the order-m term int eta^(m)(x, y) psi(y) dy (no eps factor).
GridFunction apply_order(const GridFunction& psi, const MetricExpansion& expansion, int m);

/// int conj(u) v dx over the common grid range, cell by cell.
std::complex<double> inner_product(const GridFunction& u, const GridFunction& v);

/// int w(x) psi(x) dx over the grid range, cell by cell, with extra cuts
/// where w has kinks.
std::complex<double> integrate_weighted(const GridFunction& psi, const std::function<double(double)>& w,
                                        std::span<const double> kinks = {});

struct GramReport {
  int n = 0;
  std::vector<std::complex<double>> matrix;  // row-major <psi_i | eta psi_j>
  std::vector<double> eigenvalues;           // ascending, of the Hermitian part
  double hermiticity_defect = 0.0;           // max |G_ij - conj(G_ji)|
};

GramReport gram_matrix(std::span<const GridFunction> family, const MetricExpansion& expansion, int order);

}  // namespace deltac::metric
