#pragma once

#include <filesystem>
#include <memory>
#include <span>
#include <variant>
#include <vector>

#include "cavity_decay/common.hpp"

namespace cavity_decay {

/// n = eta + i kappa with kappa >= 0.
struct RefractiveIndex {
  double eta = 1.0;
  double kappa = 0.0;

  Complex value() const { return {eta, kappa}; }
};

/// Single-resonance oscillator parameters, all in units of the reference
/// frequency (normally omega_T itself).
struct LorentzParameters {
  double omega_t = 1.0;
  double omega_p = 0.0;
  double gamma = 0.05;

  void validate() const;
};

/// Permittivity sampled on a strictly increasing frequency grid.
struct PermittivityTable {
  std::vector<double> omega;
  std::vector<double> eps_re;
  std::vector<double> eps_im;

  void validate() const;
};

/// Reads `omega,eps_re,eps_im` CSV. Lines starting with '#' are skipped.
PermittivityTable load_permittivity_table(const std::filesystem::path& path);

/// Two-column variant: one `omega,eps_re` file and one `omega,eps_im` file
/// sharing the same grid.
PermittivityTable load_permittivity_table(const std::filesystem::path& real_part,
                                          const std::filesystem::path& imag_part);

enum class ModelKind { PaperLorentz, StandardLorentz, Constant, Tabulated };

/// Source of eps(omega). Immutable once built.
class DielectricModel {
 public:
  /// 1 + wp^2 / (wt^2 - w^2 - i gamma wt): damping fixed at the resonance.
  static DielectricModel paper_lorentz(const LorentzParameters& p);
  /// 1 + wp^2 / (wt^2 - w^2 - i gamma w).
  static DielectricModel standard_lorentz(const LorentzParameters& p);
  static DielectricModel constant(Complex eps);
  /// Monotone cubic (PCHIP) interpolation of each component.
  static DielectricModel tabulated(PermittivityTable table);

  ModelKind kind() const noexcept { return kind_; }
  const LorentzParameters& lorentz() const;

  /// Frequency range where eval() is defined.
  double omega_min() const noexcept;
  double omega_max() const noexcept;

  Complex eval(double omega) const;

 private:
  struct Interpolant;

  ModelKind kind_ = ModelKind::Constant;
  LorentzParameters lorentz_{};
  Complex constant_{1.0, 0.0};
  std::shared_ptr<const Interpolant> table_;
};

Complex eval_permittivity(const DielectricModel& model, double omega);

/// Principal square root, negated if needed so kappa >= 0.
RefractiveIndex refractive_index(Complex eps);

/// sqrt(wt^2 + wp^2).
double longitudinal_frequency(const LorentzParameters& p);

/// Principal-value Hilbert transform of eps_im on `grid`, compared with
/// eps_re - 1. Returns max|KK - (eps_re - 1)| / max|eps_re - 1| over the
/// interior nodes, or 0 when both sides vanish. The grid must be strictly
/// increasing with at least 64 nodes.
double kramers_kronig_residual(const DielectricModel& model, std::span<const double> grid);

struct StaticCheck {
  bool ok = true;
  double magnitude = 1.0;
};

inline constexpr double kStaticProbeOmega = 1.0e-9;
inline constexpr double kStaticWarnThreshold = 10.0;

/// |eps| just above zero frequency; warns at or above 10. Tabulated models are
/// probed at their lowest node.
StaticCheck static_permittivity_check(const DielectricModel& model);

}  // namespace cavity_decay
