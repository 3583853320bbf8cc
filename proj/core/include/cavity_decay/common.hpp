#pragma once

#include <array>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cavity_decay {

using Complex = std::complex<double>;
using Vec3 = std::array<double, 3>;
using CVec3 = std::array<Complex, 3>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

// All library errors derive from Error so callers can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

// The requested evaluation would leave the representable range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// A truncated series did not reach its tolerance before the order cap.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, int order_reached, double residual)
      : Error(what), order_reached_(order_reached), residual_(residual) {}

  int order_reached() const noexcept { return order_reached_; }
  double residual() const noexcept { return residual_; }

 private:
  int order_reached_;
  double residual_;
};

class IoError : public Error {
 public:
  IoError(const std::string& what, std::string path)
      : Error(what + ": " + path), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

inline bool is_finite(Complex z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace cavity_decay
