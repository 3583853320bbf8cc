#pragma once

// Spontaneous-decay rates normalised to the free-space rate Gamma_0.
// z = omega_A R is the cavity size parameter.

#include "cavity_decay/common.hpp"
#include "cavity_decay/geometry.hpp"
#include "cavity_decay/mie.hpp"

namespace cavity_decay {

struct AtomicTransition {
  double omega_a = 1.0;
  /// Dipole magnitude; only the absolute-rate path uses it.
  double mu = 1.0;
};

/// SI inputs for the absolute free-space rate.
struct SiTransition {
  double omega_a_rad_per_s = 0.0;
  double dipole_coulomb_metre = 0.0;
};

/// omega^3 mu^2 / (3 pi hbar eps0 c^3) in 1/s.
double gamma0_absolute(const SiTransition& t);

/// Reduced pipeline: Gamma_0 / Gamma_0.
double gamma0(const AtomicTransition& t);

struct BaselineRates {
  double n_gamma0 = 1.0;   ///< eta
  double cm_factor = 1.0;  ///< ((eta^2 + 2)/3)^2
  double gl_factor = 1.0;  ///< (3 eta^2/(2 eta^2 + 1))^2
  double abs_cm = 1.0;     ///< |(n^2 + 2)/3|^2, complex n
  double abs_gl = 1.0;     ///< |3 n^2/(2 n^2 + 1)|^2, complex n
};

BaselineRates baseline_rates(Complex eps);

struct CmRates {
  double total = 1.0;
  double perp = 1.0;
  double par = 0.0;
};

/// Virtual-cavity rates. perp includes the R^-3, R^-1 and R^0 transverse
/// pieces, par the R^-3 longitudinal piece. Throws for non-positive R.
CmRates gamma_cm(const AtomicTransition& t, Complex eps, const CavityGeometry& geom);

/// 1 + Re C1N, assembled from the imaginary part of the coincident
/// transverse Green tensor (vacuum plus cavity scattering).
double gamma_gl_exact(const AtomicTransition& t, Complex eps, const CavityGeometry& geom);

struct GlExpansion {
  double total = 1.0;
  double r_minus3 = 0.0;
  double r_minus1 = 0.0;
  double r0 = 1.0;
};

/// Real-part of the small-cavity expansion, split by power of R:
///   r_minus3 = 9 eps_I/|2eps+1|^2 z^-3
///   r_minus1 = 9 eps_I (28|eps|^2 + 16 eps_R + 1)/(5|2eps+1|^4) z^-1
///   r0 = 9 eta (4|eps|^4 + 4 eps_R |eps|^2 + eps_R^2 - eps_I^2)/|2eps+1|^4
///        - 9 kappa eps_I (4|eps|^2 + 2 eps_R)/|2eps+1|^4
/// Rejects z > 0.5 unless policy is Allow.
GlExpansion gamma_gl_expanded(const AtomicTransition& t, Complex eps, const CavityGeometry& geom,
                              RangePolicy policy = RangePolicy::Reject);

/// Gamma/Gamma_0 = Im G_kk(r_A, r_A) / (omega_A/(6 pi)). Negative input is
/// rejected as non-passive.
double gamma_from_green(const AtomicTransition& t, double im_green_diag);

enum class MarkovStatus { Ok = 0, Warn = 1, Fail = 2 };

struct MarkovValidity {
  MarkovStatus status = MarkovStatus::Ok;
  double z = 0.0;
};

inline constexpr double kMarkovWarnZ = 0.5;
inline constexpr double kMarkovFailZ = 1.0;

/// Annotation only: warn above z = 0.5, fail above z = 1.
MarkovValidity markov_validity(const CavityGeometry& geom, const AtomicTransition& t);

/// Everything at one transition frequency.
struct DecayRateBreakdown {
  double gamma_cm_total = 1.0;
  double gamma_cm_perp = 1.0;
  double gamma_cm_par = 0.0;
  double gamma_gl_exact = 1.0;
  double gamma_gl_expanded = 1.0;
  GlExpansion gl_terms;
  /// The real-cavity rate is built from the transverse tensor only.
  double gl_longitudinal = 0.0;
  BaselineRates baselines;
  MarkovValidity markov;
  bool static_eps_ok = true;
};

/// The expansion is always evaluated here (RangePolicy::Allow); consult
/// `markov` for its validity.
DecayRateBreakdown decay_rate_breakdown(const AtomicTransition& t, Complex eps, const CavityGeometry& geom,
                                        bool static_eps_ok = true);

}  // namespace cavity_decay
