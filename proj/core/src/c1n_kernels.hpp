#pragma once

// Order-1 TM coefficient kernels, generic over the complex type so the same
// expressions run in double and in 113-bit precision.

namespace cavity_decay::detail {

template <class C>
C index_branch(const C& eps) {
  using std::sqrt;
  C n = sqrt(eps);
  if (n.imag() < 0) n = -n;
  return n;
}

template <class C, class R>
C c1n_closed_form(const C& eps, const R& z) {
  using std::cos;
  using std::exp;
  using std::sin;
  const C i(R(0), R(1));
  const C n = index_branch(eps);
  const C one(R(1), R(0));
  const C s(sin(z), R(0));
  const C c(cos(z), R(0));
  const C zc(z, R(0));
  const C z2 = zc * zc;
  const C z3 = z2 * zc;
  const C num = (i + zc * (n + one) - i * z2 * n - z3 * eps / (n + one)) * exp(i * zc);
  const C den = s - zc * (c + i * n * s) + i * z2 * n * c - z3 * (c - i * n * s) * eps / (eps - one);
  return num / den;
}

template <class C, class R>
C c1n_expansion(const C& eps, const R& z) {
  const C i(R(0), R(1));
  const C one(R(1), R(0));
  const C n = index_branch(eps);
  const C d = R(2) * eps + one;
  const C zc(z, R(0));
  const C t3 = -R(3) * i * (eps - one) / d / (zc * zc * zc);
  const C t1 = -(R(9) / R(5)) * i * (R(4) * eps * eps - R(3) * eps - one) / (d * d) / zc;
  const C t0 = R(9) * n * eps * eps / (d * d) - one;
  return t3 + t1 + t0;
}

}  // namespace cavity_decay::detail
