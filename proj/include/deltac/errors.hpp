#pragma once

#include <stdexcept>
#include <string>

namespace deltac {

// Input outside an operation's precondition. CLI maps the whole family to exit 2.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// z = 0: the free particle, which none of the constructions cover.
class DegenerateCoupling : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Re(z) = 0 with Im(z) != 0, or a vanishing branch-2 normalization.
class SpectralSingularity : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Grid does not extend far enough past the support of the input.
class MarginError : public InvalidArgument {
 public:
  MarginError(const std::string& what, double required_lo, double required_hi)
      : InvalidArgument(what), required_lo_(required_lo), required_hi_(required_hi) {}

  double required_lo() const noexcept { return required_lo_; }
  double required_hi() const noexcept { return required_hi_; }

 private:
  double required_lo_;
  double required_hi_;
};

// Asymptotic branch requested outside its guard rails.
class OutOfRegime : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Request beyond what is implemented: order > 3, f-series beyond eps^4,
// closed form for a general packet, non-decaying oscillatory tails.
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A self-check inside a computation failed (e.g. a result that must be real
// came out with an imaginary residue).
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace deltac
