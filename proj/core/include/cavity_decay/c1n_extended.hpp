#pragma once

// Extended-precision access to the order-1 TM coefficient. Both sides grow
// like z^-3 while their difference is O(z), so comparisons at z ~ 1e-5 need
// more than double precision.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "cavity_decay/common.hpp"

namespace cavity_decay::extended {

using QuadReal = boost::multiprecision::cpp_bin_float_quad;
using QuadComplex = boost::multiprecision::cpp_complex_quad;

/// Closed form at size parameter z. eps exactly 1 gives 0.
QuadComplex c1n_exact(Complex eps, double z);

/// Small-cavity expansion at size parameter z, no range check.
QuadComplex c1n_series(Complex eps, double z);

}  // namespace cavity_decay::extended
