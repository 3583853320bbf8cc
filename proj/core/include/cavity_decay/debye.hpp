#pragma once

// Even/odd vector Debye potentials M (TE) and N (TM) regular at the origin.

#include <vector>

#include "cavity_decay/common.hpp"
#include "cavity_decay/specfun.hpp"

namespace cavity_decay {

struct SphericalPoint {
  double r = 0.0;
  double theta = 0.0;  ///< [0, pi]
  double phi = 0.0;

  Vec3 cartesian() const;
  static SphericalPoint from_cartesian(const Vec3& x);
};

enum class Parity { Even, Odd };

/// Spherical (r, theta, phi) components to Cartesian at the given angles.
CVec3 spherical_to_cartesian(const CVec3& v, double theta, double phi);

/// M in spherical components:
///   even (0, -(m/sin) j P sin(m phi), -j dP/dtheta cos(m phi))
///   odd  (0,  (m/sin) j P cos(m phi), -j dP/dtheta sin(m phi))
/// with j = j_n(k r), P = P_n^m(cos theta).
CVec3 debye_M(Parity parity, int n, int m, const SphericalPoint& p, Complex k);

/// N in spherical components, with J' = (1/kr) d[kr j_n(kr)]/d(kr):
///   even (n(n+1) j/(kr) P cos, J' dP/dtheta cos, -J' (m/sin) P sin)
///   odd  (n(n+1) j/(kr) P sin, J' dP/dtheta sin,  J' (m/sin) P cos)
/// At r = 0 the radial factors take their limits (1/3 and 2/3 for n = 1).
CVec3 debye_N(Parity parity, int n, int m, const SphericalPoint& p, Complex k);

/// All potentials with 1 <= n <= n_max at one point, in Cartesian
/// components. Bessel and Legendre tables are built once.
class DebyeBasis {
 public:
  DebyeBasis(int n_max, const SphericalPoint& p, Complex k);

  int n_max() const noexcept { return n_max_; }
  CVec3 M(Parity parity, int n, int m) const;
  CVec3 N(Parity parity, int n, int m) const;
  CVec3 M_spherical(Parity parity, int n, int m) const;
  CVec3 N_spherical(Parity parity, int n, int m) const;

 private:
  CVec3 to_cart(const CVec3& v) const;

  int n_max_;
  SphericalPoint p_;
  std::vector<Complex> j_;        // j_n(kr)
  std::vector<Complex> j_over_x_;  // j_n(kr)/(kr)
  std::vector<Complex> dj_;       // Riccati derivative
  specfun::LegendreTable legendre_;
};

}  // namespace cavity_decay
