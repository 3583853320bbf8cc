#pragma once

#include "cavity_decay/common.hpp"

namespace cavity_decay {

enum class RadiusMode { Absolute, FractionOfWavelength };

/// Cavity radius, either in reference length units (c/omega_ref) or as a
/// fraction of the transition wavelength 2 pi c / omega.
class CavityGeometry {
 public:
  static CavityGeometry absolute(double radius);
  static CavityGeometry fraction_of_wavelength(double fraction);

  RadiusMode mode() const noexcept { return mode_; }
  double value() const noexcept { return value_; }

  /// z = omega R. In fraction mode this is 2 pi R/lambda for every omega.
  double size_parameter(double omega) const;
  double radius(double omega) const;

 private:
  CavityGeometry(RadiusMode mode, double value) : mode_(mode), value_(value) {}

  RadiusMode mode_;
  double value_;
};

}  // namespace cavity_decay
