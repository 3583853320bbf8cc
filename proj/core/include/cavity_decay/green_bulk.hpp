#pragma once

// Dyadic Green tensor of a homogeneous dielectric in reduced units
// (c = 1, lengths in c/omega_ref).

#include "cavity_decay/common.hpp"

namespace cavity_decay {

enum class GreenPart { Longitudinal, Transverse, Total, Scattering };

/// 3x3 complex tensor tagged with the part of the field it represents.
struct GreenTensor {
  std::array<std::array<Complex, 3>, 3> m{};
  GreenPart part = GreenPart::Total;
  /// The longitudinal part carries a delta(rho) contact term that is never
  /// sampled numerically; this records that it was omitted.
  bool contact_term_omitted = false;

  Complex& operator()(int a, int b) { return m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  Complex operator()(int a, int b) const { return m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }

  GreenTensor transposed() const;
  double max_abs() const;
  Complex trace() const { return m[0][0] + m[1][1] + m[2][2]; }
};

GreenTensor operator+(const GreenTensor& a, const GreenTensor& b);
GreenTensor operator-(const GreenTensor& a, const GreenTensor& b);

/// -(1/(4 pi omega^2 eps)) (delta - 3 rho rho / rho^2) / rho^3, contact term
/// excluded. Throws DomainError for rho = 0.
GreenTensor green_longitudinal(const Vec3& rho, double omega, Complex eps);

/// Transverse part with k = sqrt(eps) omega. Below |k rho| = 0.5 the
/// near-cancelling combinations are summed as power series.
GreenTensor green_transverse(const Vec3& rho, double omega, Complex eps);

/// Small-|k rho| form:
/// (1/4pi)[rho rho/(2 rho^3) + delta/(2 rho) + (2i omega/3) n delta].
GreenTensor green_transverse_small(const Vec3& rho, double omega, Complex eps);

/// Longitudinal plus transverse.
GreenTensor green_total(const Vec3& rho, double omega, Complex eps);

/// Im G_kk at coincidence in vacuum: omega / (6 pi).
double im_green_vacuum_coincidence(double omega);

}  // namespace cavity_decay
