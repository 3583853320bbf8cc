#include "cavity_decay/mie.hpp"

#include <cmath>

#include "c1n_kernels.hpp"
#include "cavity_decay/c1n_extended.hpp"
#include "cavity_decay/dielectric.hpp"
#include "cavity_decay/specfun.hpp"

namespace cavity_decay {

CavityGeometry CavityGeometry::absolute(double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) throw DomainError("cavity radius must be positive");
  return {RadiusMode::Absolute, radius};
}

CavityGeometry CavityGeometry::fraction_of_wavelength(double fraction) {
  if (!(fraction > 0.0) || !std::isfinite(fraction)) throw DomainError("radius fraction must be positive");
  return {RadiusMode::FractionOfWavelength, fraction};
}

double CavityGeometry::size_parameter(double omega) const {
  if (!(omega > 0.0)) throw DomainError("size parameter needs omega > 0");
  return mode_ == RadiusMode::Absolute ? omega * value_ : 2.0 * kPi * value_;
}

double CavityGeometry::radius(double omega) const {
  if (!(omega > 0.0)) throw DomainError("radius needs omega > 0");
  return mode_ == RadiusMode::Absolute ? value_ : 2.0 * kPi * value_ / omega;
}

namespace {

struct RadialValues {
  std::vector<Complex> j;
  std::vector<Complex> h;
  std::vector<Complex> dj;  // Riccati forms (1/x) d[x f]/dx
  std::vector<Complex> dh;
};

RadialValues radial_values(int n_max, Complex x) {
  RadialValues v;
  v.j = specfun::sph_bessel_j_table(n_max, x);
  v.h = specfun::sph_hankel1_table(n_max, x);
  v.dj.resize(v.j.size());
  v.dh.resize(v.h.size());
  for (int n = 1; n <= n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    v.dj[i] = v.j[i - 1] - static_cast<double>(n) * v.j[i] / x;
    v.dh[i] = v.h[i - 1] - static_cast<double>(n) * v.h[i] / x;
  }
  return v;
}

void check_eps(Complex eps) {
  if (eps == Complex{} || !is_finite(eps)) throw DomainError("permittivity must be finite and non-zero");
}

}  // namespace

std::vector<MieCoefficients> mie_coefficient_table(int n_max, double omega, Complex eps,
                                                   const CavityGeometry& geom) {
  check_eps(eps);
  if (n_max < 1) throw DomainError("Mie order must be >= 1");
  const double z = geom.size_parameter(omega);
  const double radius = geom.radius(omega);
  const Complex k1 = refractive_index(eps).value() * omega;  // medium
  const Complex k2 = omega;                                  // cavity
  std::vector<MieCoefficients> out;
  out.reserve(static_cast<std::size_t>(n_max));
  if (eps == Complex(1.0, 0.0)) {
    for (int n = 1; n <= n_max; ++n) out.push_back({n, {}, {}});
    return out;
  }
  const RadialValues med = radial_values(n_max, k1 * radius);
  const RadialValues cav = radial_values(n_max, Complex(z, 0.0));
  for (int n = 1; n <= n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    const Complex J1 = med.j[i], H1 = med.h[i], Jp1 = med.dj[i], Hp1 = med.dh[i];
    const Complex J2 = cav.j[i], H2 = cav.h[i], Jp2 = cav.dj[i], Hp2 = cav.dh[i];

    const Complex r_hp = (k2 * Hp2 * H1 - k1 * Hp1 * H2) / (k2 * J1 * Hp2 - k1 * Jp1 * H2);
    const Complex r_vp = (k2 * H2 * Hp1 - k1 * H1 * Hp2) / (k2 * Jp1 * H2 - k1 * J1 * Hp2);
    const Complex t_hp = k2 * (J2 * Hp2 - Jp2 * H2) / (k2 * J1 * Hp2 - k1 * Jp1 * H2);
    const Complex t_vp = k2 * (Jp2 * H2 - J2 * Hp2) / (k2 * Jp1 * H2 - k1 * J1 * Hp2);
    const Complex t_hf = k2 * (Jp2 * H2 - J2 * Hp2) / (k2 * Jp2 * H1 - k1 * J2 * Hp1);
    const Complex t_vf = k2 * (J2 * Hp2 - Jp2 * H2) / (k2 * J2 * Hp1 - k1 * Jp2 * H1);

    MieCoefficients c{n, t_hf * r_hp / t_hp, t_vf * r_vp / t_vp};
    if (!is_finite(c.c_m) || !is_finite(c.c_n)) {
      throw OverflowError("Mie coefficient of order " + std::to_string(n) + " is not finite");
    }
    out.push_back(c);
  }
  return out;
}

MieCoefficients mie_coefficients(int order, double omega, Complex eps, const CavityGeometry& geom) {
  if (order < 1) throw DomainError("Mie order must be >= 1");
  return mie_coefficient_table(order, omega, eps, geom).back();
}

Complex c1n_exact(double omega, Complex eps, const CavityGeometry& geom) {
  check_eps(eps);
  const double z = geom.size_parameter(omega);
  if (std::abs(eps - 1.0) < kUnitEpsTolerance) return {};
  const auto q = extended::c1n_exact(eps, z);
  return {static_cast<double>(q.real()), static_cast<double>(q.imag())};
}

Complex c1n_series(double omega, Complex eps, const CavityGeometry& geom, RangePolicy policy) {
  check_eps(eps);
  const double z = geom.size_parameter(omega);
  if (policy == RangePolicy::Reject && z > kC1nSeriesMaxZ) {
    throw DomainError("size parameter " + std::to_string(z) + " too large for the small-cavity expansion");
  }
  return detail::c1n_expansion(eps, z);
}

}  // namespace cavity_decay
