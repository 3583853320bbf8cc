#include "cavity_decay/rates.hpp"

#include <cmath>

#include "cavity_decay/dielectric.hpp"
#include "cavity_decay/green_bulk.hpp"
#include "cavity_decay/green_sphere.hpp"

namespace cavity_decay {
namespace {

constexpr double kHbar = 1.054571817e-34;
constexpr double kEpsilon0 = 8.8541878128e-12;
constexpr double kSpeedOfLight = 299792458.0;

void check_transition(const AtomicTransition& t) {
  if (!(t.omega_a > 0.0) || !std::isfinite(t.omega_a)) throw DomainError("transition frequency must be positive");
}

}  // namespace

double gamma0_absolute(const SiTransition& t) {
  if (!(t.omega_a_rad_per_s > 0.0)) throw DomainError("transition frequency must be positive");
  const double w = t.omega_a_rad_per_s;
  const double mu = t.dipole_coulomb_metre;
  return w * w * w * mu * mu / (3.0 * kPi * kHbar * kEpsilon0 * kSpeedOfLight * kSpeedOfLight * kSpeedOfLight);
}

double gamma0(const AtomicTransition& t) {
  check_transition(t);
  return 1.0;
}

BaselineRates baseline_rates(Complex eps) {
  const RefractiveIndex idx = refractive_index(eps);
  const double eta = idx.eta;
  const double e2 = eta * eta;
  const double cm = (e2 + 2.0) / 3.0;
  const double gl = 3.0 * e2 / (2.0 * e2 + 1.0);
  const Complex n2 = idx.value() * idx.value();
  return {eta, cm * cm, gl * gl, std::norm((n2 + 2.0) / 3.0), std::norm(3.0 * n2 / (2.0 * n2 + 1.0))};
}

CmRates gamma_cm(const AtomicTransition& t, Complex eps, const CavityGeometry& geom) {
  check_transition(t);
  const double z = geom.size_parameter(t.omega_a);
  const RefractiveIndex idx = refractive_index(eps);
  const double er = eps.real(), ei = eps.imag();
  const double iz = 1.0 / z;
  const double iz3 = iz * iz * iz;
  CmRates r;
  r.par = 4.0 * ei / (27.0 * std::norm(eps)) * iz3;
  r.perp = idx.eta * (std::norm((eps + 2.0) / 3.0) - 2.0 * ei * ei / 9.0) +
           ei * (er + 2.0) * (8.0 / 15.0 * iz - 2.0 / 9.0 * idx.kappa) + 25.0 * ei / 54.0 * iz3;
  r.total = r.perp + r.par;
  return r;
}

double gamma_gl_exact(const AtomicTransition& t, Complex eps, const CavityGeometry& geom) {
  check_transition(t);
  const double vacuum = im_green_vacuum_coincidence(t.omega_a);
  const GreenTensor scattered = scattering_green_center(t.omega_a, eps, geom);
  return gamma_from_green(t, vacuum + scattered(0, 0).imag());
}

GlExpansion gamma_gl_expanded(const AtomicTransition& t, Complex eps, const CavityGeometry& geom,
                              RangePolicy policy) {
  check_transition(t);
  const double z = geom.size_parameter(t.omega_a);
  if (policy == RangePolicy::Reject && z > kC1nSeriesMaxZ) {
    throw DomainError("size parameter " + std::to_string(z) + " too large for the small-cavity expansion");
  }
  const RefractiveIndex idx = refractive_index(eps);
  const double er = eps.real(), ei = eps.imag();
  const double e2 = std::norm(eps);
  const double d2 = std::norm(2.0 * eps + 1.0);
  const double d4 = d2 * d2;
  GlExpansion g;
  g.r_minus3 = 9.0 * ei / d2 / (z * z * z);
  g.r_minus1 = 9.0 * ei * (28.0 * e2 + 16.0 * er + 1.0) / (5.0 * d4) / z;
  g.r0 = 9.0 * idx.eta * (4.0 * e2 * e2 + 4.0 * er * e2 + er * er - ei * ei) / d4 -
         9.0 * idx.kappa * ei * (4.0 * e2 + 2.0 * er) / d4;
  g.total = g.r_minus3 + g.r_minus1 + g.r0;
  return g;
}

double gamma_from_green(const AtomicTransition& t, double im_green_diag) {
  check_transition(t);
  if (im_green_diag < 0.0 || !std::isfinite(im_green_diag)) {
    throw DomainError("negative imaginary Green tensor violates passivity");
  }
  return im_green_diag / im_green_vacuum_coincidence(t.omega_a);
}

MarkovValidity markov_validity(const CavityGeometry& geom, const AtomicTransition& t) {
  check_transition(t);
  const double z = geom.size_parameter(t.omega_a);
  MarkovValidity v{MarkovStatus::Ok, z};
  if (z > kMarkovFailZ) {
    v.status = MarkovStatus::Fail;
  } else if (z > kMarkovWarnZ) {
    v.status = MarkovStatus::Warn;
  }
  return v;
}

DecayRateBreakdown decay_rate_breakdown(const AtomicTransition& t, Complex eps, const CavityGeometry& geom,
                                        bool static_eps_ok) {
  DecayRateBreakdown b;
  const CmRates cm = gamma_cm(t, eps, geom);
  b.gamma_cm_total = cm.total;
  b.gamma_cm_perp = cm.perp;
  b.gamma_cm_par = cm.par;
  b.gamma_gl_exact = gamma_gl_exact(t, eps, geom);
  b.gl_terms = gamma_gl_expanded(t, eps, geom, RangePolicy::Allow);
  b.gamma_gl_expanded = b.gl_terms.total;
  b.baselines = baseline_rates(eps);
  b.markov = markov_validity(geom, t);
  b.static_eps_ok = static_eps_ok;
  return b;
}

}  // namespace cavity_decay
