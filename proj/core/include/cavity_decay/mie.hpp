#pragma once

// Reflection coefficients of an empty spherical cavity in a homogeneous
// medium, and the dipole (n = 1, TM) coefficient C1N that sets the
// real-cavity decay rate.

#include <vector>

#include "cavity_decay/common.hpp"
#include "cavity_decay/geometry.hpp"

namespace cavity_decay {

struct MieCoefficients {
  int order = 1;
  Complex c_m;  ///< TE
  Complex c_n;  ///< TM
};

/// Coefficients of one order from the transmission/reflection quotients with
/// k1 = sqrt(eps) omega (medium) and k2 = omega (cavity). Bessel overflow
/// propagates as OverflowError.
MieCoefficients mie_coefficients(int order, double omega, Complex eps, const CavityGeometry& geom);

/// Orders 1..n_max sharing one Bessel evaluation. Element i holds order i+1.
std::vector<MieCoefficients> mie_coefficient_table(int n_max, double omega, Complex eps,
                                                   const CavityGeometry& geom);

/// Closed form of the order-1 TM coefficient, evaluated internally in
/// 113-bit precision. Returns 0 when |eps - 1| < 1e-8.
Complex c1n_exact(double omega, Complex eps, const CavityGeometry& geom);

inline constexpr double kC1nSeriesMaxZ = 0.5;
inline constexpr double kUnitEpsTolerance = 1.0e-8;

enum class RangePolicy { Reject, Allow };

/// Small-cavity expansion through O(R^0):
/// -3i(eps-1)/(2eps+1) z^-3 - (9i/5)(4eps^2-3eps-1)/(2eps+1)^2 z^-1
///   + 9 n^5/(2eps+1)^2 - 1.
/// Rejects z > 0.5 with DomainError unless policy is Allow.
Complex c1n_series(double omega, Complex eps, const CavityGeometry& geom,
                   RangePolicy policy = RangePolicy::Reject);

}  // namespace cavity_decay
