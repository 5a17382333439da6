#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "deltac/cli/cli.hpp"
#include "deltac/hermitian/estimate.hpp"
#include "deltac/io/table.hpp"
#include "deltac/numerics/quadrature.hpp"

namespace deltac::cli {

inline constexpr std::uint64_t kDefaultSeed = 12345;

struct CheckRow {
  std::string suite;
  std::string name;
  double measured;
  double threshold;
  bool pass;
};

/// suite: biortho | metric | hermitian | all. Throws SpectralSingularity for
/// Re(z) = 0 and InvalidArgument for Re(z) < 0.
std::vector<CheckRow> run_verify_suite(const std::string& suite, std::complex<double> z,
                                       const std::vector<double>& eps_grid,
                                       const numerics::QuadratureSpec& spec, std::uint64_t seed);
io::Table verify_table(const std::vector<CheckRow>& rows);

/// m: "0".."3" or "h2". Columns x, y, m, re_eta, im_eta (smooth part); h2
/// appends delta_x_coeff, delta_y_coeff (its smooth part is zero).
/// Throws Unsupported for any other m.
io::Table kernel_table(const std::string& m, std::complex<double> z, const Range& grid, bool printed);

struct SweepOptions {
  std::string target = "omega";  // omega | gamma | energy
  Range sigma{0.05, 3.0, 0.05};
  std::vector<double> k{0.0, 1.0, 2.0, 4.0};
  Range a{-4.0, 4.0, 0.05};
  std::vector<double> sigmas{0.5, 1.0, 2.0, 3.0};  // gamma target
  double L = 1.0;
  double im_ratio = 0.1;
  bool quadrature = false;  // energy target
};

/// Columns sigma, k_or_xmean, L, omega_or_gamma, E_kinetic, E_coupling,
/// E_nonhermitian, E_total, method (natural units, m = hbar = 1).
io::Table sweep_table(const SweepOptions& opt);

io::Table estimate_table(const hermitian::DefectReport& r);

}  // namespace deltac::cli
