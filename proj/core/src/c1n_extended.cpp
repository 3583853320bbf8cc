#include "cavity_decay/c1n_extended.hpp"

#include "c1n_kernels.hpp"

namespace cavity_decay::extended {

namespace {

QuadComplex to_quad(Complex v) { return QuadComplex(QuadReal(v.real()), QuadReal(v.imag())); }

}  // namespace

QuadComplex c1n_exact(Complex eps, double z) {
  if (!(z > 0.0)) throw DomainError("size parameter must be positive");
  if (eps == Complex(1.0, 0.0)) return QuadComplex(0);
  return detail::c1n_closed_form(to_quad(eps), QuadReal(z));
}

QuadComplex c1n_series(Complex eps, double z) {
  if (!(z > 0.0)) throw DomainError("size parameter must be positive");
  return detail::c1n_expansion(to_quad(eps), QuadReal(z));
}

}  // namespace cavity_decay::extended
