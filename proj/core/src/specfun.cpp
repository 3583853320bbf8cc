#include "cavity_decay/specfun.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <string>

namespace cavity_decay::specfun {
namespace {

constexpr int kHardOrderLimit = 1000;
constexpr double kRescaleAbove = 1.0e250;

int read_max_order() {
  const char* env = std::getenv("CAVITY_DECAY_MAX_ORDER");
  if (env == nullptr) return kDefaultMaxOrder;
  int value = 0;
  const char* end = env + std::strlen(env);
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc{} || ptr != end || value < 1 || value > kHardOrderLimit) {
    return kDefaultMaxOrder;
  }
  return value;
}

void check_order(int n) {
  if (n < 0) throw DomainError("negative Bessel order " + std::to_string(n));
  if (n > max_order()) {
    throw DomainError("Bessel order " + std::to_string(n) + " exceeds cap " +
                      std::to_string(max_order()));
  }
}

void check_argument(Complex z) {
  if (!is_finite(z)) throw DomainError("non-finite Bessel argument");
  if (std::abs(z.imag()) > kMaxImagArgument || std::abs(z) > kMaxAbsArgument) {
    throw OverflowError("Bessel argument outside |Im z| <= 600, |z| <= 1e5");
  }
}

Complex j0_closed(Complex z) { return std::sin(z) / z; }

Complex j1_closed(Complex z) {
  if (std::abs(z) < 0.5) {
    // z/3 * sum (-z^2/2)^k / (k! (5)(7)...(2k+3))
    const Complex w = -0.5 * z * z;
    Complex term = 1.0;
    Complex sum = 1.0;
    for (int k = 1; k < 30; ++k) {
      term *= w / (static_cast<double>(k) * (2.0 * k + 3.0));
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return z / 3.0 * sum;
  }
  return std::sin(z) / (z * z) - std::cos(z) / z;
}

// Miller's algorithm. Values far below the normalisation scale may underflow
// to zero, which is the correct double result.
std::vector<Complex> bessel_j_miller(int n_max, Complex z) {
  std::vector<Complex> out(static_cast<std::size_t>(n_max) + 1, Complex{});
  if (z == Complex{}) {
    out[0] = 1.0;
    return out;
  }
  const int start = n_max + static_cast<int>(std::ceil(std::abs(z))) + 40;
  Complex f_next = 0.0;
  Complex f = 1.0e-300;
  Complex f0 = 0.0;
  Complex f1 = 0.0;
  for (int n = start; n >= 1; --n) {
    const Complex f_prev = (2.0 * n + 1.0) / z * f - f_next;
    f_next = f;
    f = f_prev;
    if (n - 1 <= n_max) out[static_cast<std::size_t>(n - 1)] = f;
    if (n <= n_max) out[static_cast<std::size_t>(n)] = f_next;
    if (std::abs(f) > kRescaleAbove) {
      const double s = 1.0 / kRescaleAbove;
      f *= s;
      f_next *= s;
      for (auto& v : out) v *= s;
    }
  }
  f0 = f;
  f1 = f_next;
  const Complex j0 = j0_closed(z);
  const Complex j1 = j1_closed(z);
  const Complex scale = std::abs(j0) >= std::abs(j1) ? j0 / f0 : j1 / f1;
  for (auto& v : out) v *= scale;
  out[0] = j0;
  if (n_max >= 1) out[1] = j1;
  return out;
}

std::vector<Complex> hankel_upward(int n_max, Complex z) {
  std::vector<Complex> out(static_cast<std::size_t>(n_max) + 1);
  const Complex e = std::exp(kI * z);
  out[0] = -kI * e / z;
  if (n_max >= 1) out[1] = -e * (z + kI) / (z * z);
  for (int n = 1; n < n_max; ++n) {
    out[static_cast<std::size_t>(n) + 1] =
        (2.0 * n + 1.0) / z * out[static_cast<std::size_t>(n)] - out[static_cast<std::size_t>(n) - 1];
  }
  for (const auto& v : out) {
    if (!is_finite(v)) throw OverflowError("spherical Hankel function overflows double range");
  }
  return out;
}

}  // namespace

int max_order() {
  static const int cap = read_max_order();
  return cap;
}

std::vector<Complex> sph_bessel_j_table(int n_max, Complex z) {
  check_order(n_max);
  check_argument(z);
  return bessel_j_miller(n_max, z);
}

std::vector<Complex> sph_hankel1_table(int n_max, Complex z) {
  check_order(n_max);
  check_argument(z);
  if (z == Complex{}) throw DomainError("spherical Hankel function at zero argument");
  return hankel_upward(n_max, z);
}

Complex sph_bessel_j(int n, Complex z) { return sph_bessel_j_table(n, z).back(); }

Complex sph_hankel1(int n, Complex z) { return sph_hankel1_table(n, z).back(); }

Complex riccati_derivative(RiccatiKind kind, int n, Complex z) {
  check_order(n);
  check_argument(z);
  if (z == Complex{}) throw DomainError("Riccati derivative at zero argument");
  const int top = n == 0 ? 1 : n;
  const auto f = kind == RiccatiKind::J ? bessel_j_miller(top, z) : hankel_upward(top, z);
  if (n == 0) return f[0] / z - f[1];
  return f[static_cast<std::size_t>(n) - 1] - static_cast<double>(n) * f[static_cast<std::size_t>(n)] / z;
}

Complex sph_derivative(RiccatiKind kind, int n, Complex z) {
  const Complex f = kind == RiccatiKind::J ? sph_bessel_j(n, z) : sph_hankel1(n, z);
  return riccati_derivative(kind, n, z) - f / z;
}

namespace {

// P_n^m for all 0 <= m <= n <= n_max, row-major by n.
std::vector<double> legendre_rows(int n_max, double x, double s) {
  const auto size = static_cast<std::size_t>(n_max + 1) * static_cast<std::size_t>(n_max + 2) / 2;
  std::vector<double> p(size, 0.0);
  auto at = [](int n, int m) { return static_cast<std::size_t>(n) * (n + 1) / 2 + m; };
  double pmm = 1.0;
  for (int m = 0; m <= n_max; ++m) {
    if (m > 0) pmm *= (2.0 * m - 1.0) * s;
    p[at(m, m)] = pmm;
    if (m + 1 <= n_max) p[at(m + 1, m)] = x * (2.0 * m + 1.0) * pmm;
    for (int n = m + 1; n < n_max; ++n) {
      p[at(n + 1, m)] = ((2.0 * n + 1.0) * x * p[at(n, m)] - (n + m) * p[at(n - 1, m)]) / (n - m + 1.0);
    }
  }
  return p;
}

}  // namespace

double assoc_legendre(int n, int m, double x) {
  if (!(std::abs(x) <= 1.0)) throw DomainError("Legendre argument outside [-1, 1]");
  if (n < 0 || m < 0 || m > n) throw DomainError("Legendre indices require 0 <= m <= n");
  const double s = std::sqrt((1.0 - x) * (1.0 + x));
  const auto p = legendre_rows(n, x, s);
  return p[static_cast<std::size_t>(n) * (n + 1) / 2 + m];
}

LegendreTable::LegendreTable(int n_max, double theta) : n_max_(n_max) {
  if (n_max < 0) throw DomainError("negative Legendre order");
  const double x = std::cos(theta);
  const double s = std::abs(std::sin(theta));
  // One extra row feeds the pole-safe raising and lowering identities.
  const auto q = legendre_rows(n_max + 1, x, s);
  auto at = [](int n, int m) { return static_cast<std::size_t>(n) * (n + 1) / 2 + m; };
  auto pq = [&](int n, int m) { return (m < 0 || m > n) ? 0.0 : q[at(n, m)]; };

  const auto size = static_cast<std::size_t>(n_max + 1) * static_cast<std::size_t>(n_max + 2) / 2;
  p_.resize(size);
  dp_.resize(size);
  mps_.resize(size);
  for (int n = 0; n <= n_max; ++n) {
    for (int m = 0; m <= n; ++m) {
      const auto i = at(n, m);
      p_[i] = pq(n, m);
      if (m == 0) {
        dp_[i] = -pq(n, 1);
        mps_[i] = 0.0;
      } else {
        dp_[i] = 0.5 * ((n + m) * (n - m + 1.0) * pq(n, m - 1) - pq(n, m + 1));
        mps_[i] = 0.5 * (pq(n + 1, m + 1) + (n - m + 1.0) * (n - m + 2.0) * pq(n + 1, m - 1));
      }
    }
  }
}

std::size_t LegendreTable::index(int n, int m) const {
  if (n < 0 || n > n_max_ || m < 0 || m > n) throw DomainError("Legendre table index out of range");
  return static_cast<std::size_t>(n) * (n + 1) / 2 + m;
}

}  // namespace cavity_decay::specfun
