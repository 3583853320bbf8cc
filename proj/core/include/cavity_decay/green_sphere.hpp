#pragma once

// Scattering part of the Green tensor inside an empty spherical cavity
// embedded in a homogeneous medium. The vacuum part is green_bulk with eps = 1.

#include "cavity_decay/debye.hpp"
#include "cavity_decay/geometry.hpp"
#include "cavity_decay/green_bulk.hpp"

namespace cavity_decay {

struct SeriesOptions {
  /// Stop once two consecutive orders each add less than tol times the
  /// largest entry seen so far.
  double tol = 1.0e-12;
  /// 0 selects the automatic cap ceil(omega R) + 20 (bounded by the Bessel
  /// order cap). A positive value forces that many orders with no
  /// convergence check.
  int max_order = 0;
  bool include_te = true;
  bool include_tm = true;
};

struct ScatteringSeries {
  GreenTensor value;
  int orders_used = 0;
  /// Largest entry of the last order added, relative to the running maximum.
  double last_relative_term = 0.0;
};

/// Multipole series over orders n >= 1, m = 0..n and both parities, with
/// prefactor i omega/(4 pi) and weight (2n+1)/(n(n+1)) (n-m)!/(n+m)! (2 - delta_m0).
/// Both points must lie inside the cavity. Throws ConvergenceError (with the
/// achieved relative residual) if the automatic cap is reached first.
ScatteringSeries scattering_green_series(const SphericalPoint& r1, const SphericalPoint& r2, double omega,
                                         Complex eps, const CavityGeometry& geom,
                                         const SeriesOptions& opts = {});

GreenTensor scattering_green(const SphericalPoint& r1, const SphericalPoint& r2, double omega, Complex eps,
                             const CavityGeometry& geom, double tol = 1.0e-12);

/// Cartesian-position overload.
GreenTensor scattering_green(const Vec3& r1, const Vec3& r2, double omega, Complex eps,
                             const CavityGeometry& geom, double tol = 1.0e-12);

/// Value at r1 = r2 = centre: (i omega/(6 pi)) C1N delta.
GreenTensor scattering_green_center(double omega, Complex eps, const CavityGeometry& geom);

}  // namespace cavity_decay
