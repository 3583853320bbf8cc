#include "cavity_decay/debye.hpp"

#include <algorithm>
#include <cmath>

namespace cavity_decay {

Vec3 SphericalPoint::cartesian() const {
  const double s = std::sin(theta);
  return {r * s * std::cos(phi), r * s * std::sin(phi), r * std::cos(theta)};
}

SphericalPoint SphericalPoint::from_cartesian(const Vec3& x) {
  const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
  if (r == 0.0) return {};
  return {r, std::acos(std::clamp(x[2] / r, -1.0, 1.0)), std::atan2(x[1], x[0])};
}

CVec3 spherical_to_cartesian(const CVec3& v, double theta, double phi) {
  const double ct = std::cos(theta), st = std::sin(theta);
  const double cp = std::cos(phi), sp = std::sin(phi);
  return {v[0] * (st * cp) + v[1] * (ct * cp) - v[2] * sp,
          v[0] * (st * sp) + v[1] * (ct * sp) + v[2] * cp,
          v[0] * ct - v[1] * st};
}

DebyeBasis::DebyeBasis(int n_max, const SphericalPoint& p, Complex k)
    : n_max_(n_max), p_(p), legendre_(n_max, p.theta) {
  if (n_max < 1) throw DomainError("Debye basis needs n_max >= 1");
  if (!(p.r >= 0.0)) throw DomainError("negative radial coordinate");
  const Complex x = k * p.r;
  j_ = specfun::sph_bessel_j_table(n_max, x);
  j_over_x_.assign(j_.size(), Complex{});
  dj_.assign(j_.size(), Complex{});
  if (x == Complex{}) {
    j_over_x_[1] = 1.0 / 3.0;
    dj_[1] = 2.0 / 3.0;
    return;
  }
  for (int n = 1; n <= n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    j_over_x_[i] = j_[i] / x;
    dj_[i] = j_[i - 1] - static_cast<double>(n) * j_over_x_[i];
  }
}

CVec3 DebyeBasis::to_cart(const CVec3& v) const { return spherical_to_cartesian(v, p_.theta, p_.phi); }

CVec3 DebyeBasis::M(Parity parity, int n, int m) const { return to_cart(M_spherical(parity, n, m)); }

CVec3 DebyeBasis::N(Parity parity, int n, int m) const { return to_cart(N_spherical(parity, n, m)); }

CVec3 DebyeBasis::M_spherical(Parity parity, int n, int m) const {
  const auto i = static_cast<std::size_t>(n);
  const double mps = legendre_.m_p_over_sin(n, m);
  const double dp = legendre_.dp_dtheta(n, m);
  const double c = std::cos(m * p_.phi), s = std::sin(m * p_.phi);
  const Complex j = j_[i];
  if (parity == Parity::Even) return {Complex{}, -mps * j * s, -j * dp * c};
  return {Complex{}, mps * j * c, -j * dp * s};
}

CVec3 DebyeBasis::N_spherical(Parity parity, int n, int m) const {
  const auto i = static_cast<std::size_t>(n);
  const double p = legendre_.p(n, m);
  const double mps = legendre_.m_p_over_sin(n, m);
  const double dp = legendre_.dp_dtheta(n, m);
  const double c = std::cos(m * p_.phi), s = std::sin(m * p_.phi);
  const Complex radial = static_cast<double>(n) * (n + 1.0) * j_over_x_[i];
  const Complex d = dj_[i];
  if (parity == Parity::Even) return {radial * p * c, d * dp * c, -d * mps * s};
  return {radial * p * s, d * dp * s, d * mps * c};
}

namespace {

void check_nm(int n, int m) {
  if (n < 1 || m < 0 || m > n) throw DomainError("Debye potential needs n >= 1 and 0 <= m <= n");
}

}  // namespace

CVec3 debye_M(Parity parity, int n, int m, const SphericalPoint& p, Complex k) {
  check_nm(n, m);
  return DebyeBasis(n, p, k).M_spherical(parity, n, m);
}

CVec3 debye_N(Parity parity, int n, int m, const SphericalPoint& p, Complex k) {
  check_nm(n, m);
  if (k == Complex{}) throw DomainError("Debye potential N needs k != 0");
  return DebyeBasis(n, p, k).N_spherical(parity, n, m);
}

}  // namespace cavity_decay
