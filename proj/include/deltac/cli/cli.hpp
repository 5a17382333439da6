#pragma once

#include <complex>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace deltac::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kInvalidInput = 2,
  kNumericalError = 3,
  kBoundState = 10,
  kSpectralSingularity = 11,
};

/// "a+bi" with optional signs and exponents, no spaces: "2", "-2", "2i",
/// "-i", "2+0.2i", "1e-3-4e-2i". Throws InvalidArgument otherwise.
std::complex<double> parse_complex(std::string_view text);

/// "lo:hi:step" with step > 0 and lo <= hi; points lo + i*step up to hi
/// (inclusive within step/1e6). At most 100001 points.
struct Range {
  double lo;
  double hi;
  double step;
  std::vector<double> points() const;
};
Range parse_range(std::string_view text);

/// Comma-separated doubles, at least one.
std::vector<double> parse_list(std::string_view text);

/// Runs the command line (without the program name). Data goes to `out`
/// (or the --out file), diagnostics to `err`. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace deltac::cli
