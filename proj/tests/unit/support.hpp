#pragma once

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <random>
#include <string>

#include "cavity_decay/common.hpp"

namespace test_support {

inline std::filesystem::path data_dir() { return CAVITY_DECAY_TEST_DATA; }

inline double rel_err(cavity_decay::Complex got, cavity_decay::Complex want) {
  const double scale = std::abs(want);
  return scale == 0.0 ? std::abs(got) : std::abs(got - want) / scale;
}

inline double rel_err(double got, double want) {
  return want == 0.0 ? std::abs(got) : std::abs(got - want) / std::abs(want);
}

#define EXPECT_CNEAR(got, want, rtol)                                        \
  EXPECT_LE(::test_support::rel_err((got), (want)), (rtol))                  \
      << "got " << (got) << " want " << (want)

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(0x5eed1234ULL);
  return g;
}

inline double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng()); }

}  // namespace test_support
