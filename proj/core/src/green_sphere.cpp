#include "cavity_decay/green_sphere.hpp"

#include <algorithm>
#include <cmath>

#include "cavity_decay/mie.hpp"
#include "cavity_decay/specfun.hpp"

namespace cavity_decay {
namespace {

// Highest order whose reflection coefficients stay finite, searched downward.
std::vector<MieCoefficients> mie_up_to(int n_cap, double omega, Complex eps, const CavityGeometry& geom) {
  for (int n = n_cap; n >= 1; --n) {
    try {
      return mie_coefficient_table(n, omega, eps, geom);
    } catch (const OverflowError&) {
    }
  }
  throw OverflowError("no finite reflection coefficient for this cavity");
}

// (n-m)!/(n+m)!
double factorial_ratio(int n, int m) {
  double r = 1.0;
  for (int k = n - m + 1; k <= n + m; ++k) r /= k;
  return r;
}

}  // namespace

ScatteringSeries scattering_green_series(const SphericalPoint& r1, const SphericalPoint& r2, double omega,
                                         Complex eps, const CavityGeometry& geom, const SeriesOptions& opts) {
  if (!(opts.tol > 0.0)) throw DomainError("series tolerance must be positive");
  const double radius = geom.radius(omega);
  if (!(r1.r < radius) || !(r2.r < radius)) throw DomainError("Green tensor points must lie inside the cavity");

  const bool forced = opts.max_order > 0;
  int n_cap = forced ? opts.max_order
                     : static_cast<int>(std::ceil(geom.size_parameter(omega))) + 20;
  n_cap = std::min(n_cap, specfun::max_order());

  ScatteringSeries out;
  out.value.part = GreenPart::Scattering;
  if (std::abs(eps - 1.0) == 0.0) return out;

  const auto mie = mie_up_to(n_cap, omega, eps, geom);
  n_cap = static_cast<int>(mie.size());
  const Complex k = omega;  // potentials live inside the cavity
  const DebyeBasis b1(n_cap, r1, k);
  const DebyeBasis b2(n_cap, r2, k);

  std::array<std::array<Complex, 3>, 3> acc{};
  double running = 0.0;
  int quiet = 0;
  double last = 0.0;
  int n = 1;
  for (; n <= n_cap; ++n) {
    const auto& c = mie[static_cast<std::size_t>(n) - 1];
    std::array<std::array<Complex, 3>, 3> term{};
    for (int m = 0; m <= n; ++m) {
      const double w = (2.0 * n + 1.0) / (n * (n + 1.0)) * factorial_ratio(n, m) * (m == 0 ? 1.0 : 2.0);
      for (Parity par : {Parity::Even, Parity::Odd}) {
        if (m == 0 && par == Parity::Odd) continue;  // vanishes identically
        if (opts.include_te) {
          const CVec3 a = b1.M(par, n, m), bb = b2.M(par, n, m);
          for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) term[i][j] += w * c.c_m * a[i] * bb[j];
        }
        if (opts.include_tm) {
          const CVec3 a = b1.N(par, n, m), bb = b2.N(par, n, m);
          for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) term[i][j] += w * c.c_n * a[i] * bb[j];
        }
      }
    }
    double term_max = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        acc[i][j] += term[i][j];
        term_max = std::max(term_max, std::abs(term[i][j]));
        running = std::max(running, std::abs(acc[i][j]));
      }
    last = running > 0.0 ? term_max / running : 0.0;
    if (!forced) {
      quiet = term_max <= opts.tol * running ? quiet + 1 : 0;
      if (quiet >= 2) break;
    }
  }
  out.orders_used = std::min(n, n_cap);
  out.last_relative_term = last;
  if (!forced && quiet < 2) {
    throw ConvergenceError("scattering Green series did not converge by order " + std::to_string(n_cap), n_cap,
                           last);
  }
  const Complex pre = kI * omega / (4.0 * kPi);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out.value(i, j) = pre * acc[i][j];
  return out;
}

GreenTensor scattering_green(const SphericalPoint& r1, const SphericalPoint& r2, double omega, Complex eps,
                             const CavityGeometry& geom, double tol) {
  SeriesOptions opts;
  opts.tol = tol;
  return scattering_green_series(r1, r2, omega, eps, geom, opts).value;
}

GreenTensor scattering_green(const Vec3& r1, const Vec3& r2, double omega, Complex eps,
                             const CavityGeometry& geom, double tol) {
  return scattering_green(SphericalPoint::from_cartesian(r1), SphericalPoint::from_cartesian(r2), omega, eps,
                          geom, tol);
}

GreenTensor scattering_green_center(double omega, Complex eps, const CavityGeometry& geom) {
  const Complex v = kI * omega / (6.0 * kPi) * c1n_exact(omega, eps, geom);
  GreenTensor g;
  g.part = GreenPart::Scattering;
  for (int i = 0; i < 3; ++i) g(i, i) = v;
  return g;
}

}  // namespace cavity_decay
