#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cavity_decay/dielectric.hpp"
#include "cavity_decay/geometry.hpp"
#include "cavity_decay/rates.hpp"

namespace cavity_decay {

/// Evenly spaced nodes in units of omega_T; the last node is exactly `stop`.
struct FrequencyGrid {
  double start = 0.9;
  double stop = 1.3;
  int count = 600;

  void validate() const;
  std::vector<double> nodes() const;
};

struct SweepSpec {
  DielectricModel model = DielectricModel::paper_lorentz({1.0, 0.46, 0.05});
  CavityGeometry geometry = CavityGeometry::fraction_of_wavelength(0.02);
  FrequencyGrid grid;
  /// omega_T in reference units; grid nodes are multiplied by it.
  double omega_t = 1.0;
  std::optional<std::string> preset;
};

struct SweepRow {
  double omega_over_omegaT = 0.0;
  double eps_re = 1.0;
  double eps_im = 0.0;
  double eta = 1.0;
  double kappa = 0.0;
  double gamma_gl_exact = 1.0;
  double gamma_gl_expanded = 1.0;
  double gamma_cm_total = 1.0;
  double gamma_cm_perp = 1.0;
  double gamma_cm_par = 0.0;
  double baseline_gl = 1.0;
  double baseline_cm = 1.0;
  int markov_flag = 0;

  bool operator==(const SweepRow&) const = default;
};

inline constexpr std::string_view kSweepColumns[] = {
    "omega_over_omegaT", "eps_re",        "eps_im",        "eta",          "kappa",
    "gamma_gl_exact",    "gamma_gl_expanded", "gamma_cm_total", "gamma_cm_perp", "gamma_cm_par",
    "baseline_gl",       "baseline_cm",   "markov_flag"};

struct SweepResult {
  std::vector<SweepRow> rows;
  StaticCheck static_check;
};

/// Failure at one grid node; wraps the underlying message.
class SweepError : public Error {
 public:
  SweepError(const std::string& what, double omega) : Error(what), omega_(omega) {}
  double omega() const noexcept { return omega_; }

 private:
  double omega_;
};

/// Rows in ascending frequency. Expanded rates are reported at every node,
/// with markov_flag marking where the expansion is out of range.
SweepResult run_sweep(const SweepSpec& spec);

/// Figure presets fig1..fig6 (omega_P = 0.46, 600 nodes).
const std::vector<std::string>& preset_names();
SweepSpec preset_spec(std::string_view name);
/// True for presets on the band below resonance, whose plots include the
/// bulk real-cavity baseline.
bool is_far_band_preset(std::string_view name);

}  // namespace cavity_decay
