#include "cavity_decay/green_bulk.hpp"

#include <algorithm>
#include <cmath>

#include "cavity_decay/dielectric.hpp"

namespace cavity_decay {

GreenTensor GreenTensor::transposed() const {
  GreenTensor t = *this;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) t(a, b) = (*this)(b, a);
  return t;
}

double GreenTensor::max_abs() const {
  double v = 0.0;
  for (const auto& row : m)
    for (const auto& x : row) v = std::max(v, std::abs(x));
  return v;
}

GreenTensor operator+(const GreenTensor& a, const GreenTensor& b) {
  GreenTensor r;
  r.part = a.part == b.part ? a.part : GreenPart::Total;
  r.contact_term_omitted = a.contact_term_omitted || b.contact_term_omitted;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

GreenTensor operator-(const GreenTensor& a, const GreenTensor& b) {
  GreenTensor r = a;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = a(i, j) - b(i, j);
  return r;
}

namespace {

double norm(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

double checked_separation(const Vec3& rho) {
  const double r = norm(rho);
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("Green tensor at zero or non-finite separation");
  return r;
}

void check_inputs(double omega, Complex eps) {
  if (!(omega > 0.0)) throw DomainError("Green tensor needs omega > 0");
  if (eps == Complex{} || !is_finite(eps)) throw DomainError("Green tensor needs finite non-zero eps");
}

GreenTensor assemble(const Vec3& rho, double r, Complex diag, Complex radial, GreenPart part) {
  GreenTensor g;
  g.part = part;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const double pp = rho[static_cast<std::size_t>(a)] * rho[static_cast<std::size_t>(b)] / (r * r);
      g(a, b) = (a == b ? diag : Complex{}) + radial * pp;
    }
  return g;
}

// A(x) = 1 + (x^2 + ix - 1) e^{ix},  B(x) = -3 - (x^2 + 3ix - 3) e^{ix}.
void transverse_factors(Complex x, Complex& a, Complex& b) {
  if (std::abs(x) < 0.5) {
    // Taylor coefficients of A and B start at x^2; the constant and linear
    // pieces cancel exactly.
    a = 0.0;
    b = 0.0;
    Complex ip = -1.0;  // i^p at p = 2
    Complex xp = x * x;
    double f_p = 2.0, f_p1 = 1.0, f_p2 = 1.0;  // p!, (p-1)!, (p-2)!
    for (int p = 2; p < 40; ++p) {
      const Complex ta = ip * (-1.0 / f_p + 1.0 / f_p1 - 1.0 / f_p2) * xp;
      const Complex tb = ip * (3.0 / f_p - 3.0 / f_p1 + 1.0 / f_p2) * xp;
      a += ta;
      b += tb;
      if (std::abs(ta) + std::abs(tb) < 1e-18 * (std::abs(a) + std::abs(b))) break;
      ip *= kI;
      xp *= x;
      f_p2 = f_p1;
      f_p1 = f_p;
      f_p *= p + 1.0;
    }
    return;
  }
  const Complex e = std::exp(kI * x);
  a = 1.0 + (x * x + kI * x - 1.0) * e;
  b = -3.0 - (x * x + 3.0 * kI * x - 3.0) * e;
}

}  // namespace

GreenTensor green_longitudinal(const Vec3& rho, double omega, Complex eps) {
  check_inputs(omega, eps);
  const double r = checked_separation(rho);
  const Complex pre = -1.0 / (4.0 * kPi * omega * omega * eps * r * r * r);
  GreenTensor g = assemble(rho, r, pre, -3.0 * pre, GreenPart::Longitudinal);
  g.contact_term_omitted = true;
  return g;
}

GreenTensor green_transverse(const Vec3& rho, double omega, Complex eps) {
  check_inputs(omega, eps);
  const double r = checked_separation(rho);
  const Complex k = refractive_index(eps).value() * omega;
  Complex a, b;
  transverse_factors(k * r, a, b);
  const Complex pre = 1.0 / (4.0 * kPi * k * k * r * r * r);
  return assemble(rho, r, pre * a, pre * b, GreenPart::Transverse);
}

GreenTensor green_transverse_small(const Vec3& rho, double omega, Complex eps) {
  check_inputs(omega, eps);
  const double r = checked_separation(rho);
  const Complex n = refractive_index(eps).value();
  const Complex diag = (0.5 / r + 2.0 * kI * omega * n / 3.0) / (4.0 * kPi);
  const Complex radial = 0.5 / r / (4.0 * kPi);
  return assemble(rho, r, diag, radial, GreenPart::Transverse);
}

GreenTensor green_total(const Vec3& rho, double omega, Complex eps) {
  GreenTensor g = green_longitudinal(rho, omega, eps) + green_transverse(rho, omega, eps);
  g.part = GreenPart::Total;
  return g;
}

double im_green_vacuum_coincidence(double omega) {
  if (!(omega > 0.0)) throw DomainError("vacuum Green tensor needs omega > 0");
  return omega / (6.0 * kPi);
}

}  // namespace cavity_decay
