#pragma once

// Spherical Bessel/Hankel functions of complex argument and associated
// Legendre functions, restricted to what the multipole Green-tensor algebra
// needs: integer orders 0..max_order() and arguments with |Im z| <= 600.

#include <vector>

#include "cavity_decay/common.hpp"

namespace cavity_decay::specfun {

inline constexpr int kDefaultMaxOrder = 64;
inline constexpr double kMaxAbsArgument = 1.0e5;
inline constexpr double kMaxImagArgument = 600.0;

/// Highest Bessel order accepted. Defaults to 64 and can be lowered or raised
/// (up to 1000) through the CAVITY_DECAY_MAX_ORDER environment variable, read
/// once on first use.
int max_order();

/// j_n(z). Downward Miller recurrence normalised against sin z / z or j_1.
Complex sph_bessel_j(int n, Complex z);

/// h_n^(1)(z) = j_n(z) + i y_n(z), by upward recurrence from the closed
/// forms of orders 0 and 1. Throws DomainError at z = 0 and OverflowError
/// when the value leaves double range.
Complex sph_hankel1(int n, Complex z);

/// j_0..j_nmax in one pass.
std::vector<Complex> sph_bessel_j_table(int n_max, Complex z);

/// h_0..h_nmax in one pass.
std::vector<Complex> sph_hankel1_table(int n_max, Complex z);

enum class RiccatiKind { J, H };

/// (1/z) d[z f_n(z)]/dz for f = j_n or h_n^(1). Requires z != 0.
Complex riccati_derivative(RiccatiKind kind, int n, Complex z);

/// Ordinary derivative f_n'(z), reconstructed from the Riccati form.
Complex sph_derivative(RiccatiKind kind, int n, Complex z);

/// P_n^m(x) without the Condon-Shortley phase: P_1^1(x) = +sqrt(1 - x^2).
double assoc_legendre(int n, int m, double x);

/// Angular factors for one polar angle, for all 0 <= m <= n <= n_max.
///
/// Built from cos(theta) and sin(theta) directly so nothing is lost near the
/// poles. At theta in {0, pi} the quotient m P_n^m / sin(theta) and the
/// derivative dP_n^m/dtheta take their analytic limits instead of dividing.
class LegendreTable {
 public:
  LegendreTable(int n_max, double theta);

  int n_max() const noexcept { return n_max_; }
  double p(int n, int m) const { return p_[index(n, m)]; }
  double dp_dtheta(int n, int m) const { return dp_[index(n, m)]; }
  double m_p_over_sin(int n, int m) const { return mps_[index(n, m)]; }

 private:
  std::size_t index(int n, int m) const;

  int n_max_;
  std::vector<double> p_;
  std::vector<double> dp_;
  std::vector<double> mps_;
};

}  // namespace cavity_decay::specfun
