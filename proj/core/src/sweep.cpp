#include "cavity_decay/sweep.hpp"

#include <cmath>

namespace cavity_decay {

void FrequencyGrid::validate() const {
  if (count < 2) throw DomainError("frequency grid needs at least 2 nodes");
  if (!std::isfinite(start) || !std::isfinite(stop) || !(start < stop)) {
    throw DomainError("frequency grid needs start < stop");
  }
  if (!(start > 0.0)) throw DomainError("frequency grid must start above zero");
}

std::vector<double> FrequencyGrid::nodes() const {
  validate();
  std::vector<double> out(static_cast<std::size_t>(count));
  const double step = (stop - start) / (count - 1);
  for (int i = 0; i < count - 1; ++i) out[static_cast<std::size_t>(i)] = start + i * step;
  out.back() = stop;
  return out;
}

SweepResult run_sweep(const SweepSpec& spec) {
  if (!(spec.omega_t > 0.0)) throw DomainError("omega_T must be positive");
  SweepResult result;
  result.static_check = static_permittivity_check(spec.model);
  const auto nodes = spec.grid.nodes();
  result.rows.reserve(nodes.size());
  for (double x : nodes) {
    const double omega = x * spec.omega_t;
    try {
      const Complex eps = spec.model.eval(omega);
      const AtomicTransition t{omega, 1.0};
      const DecayRateBreakdown b = decay_rate_breakdown(t, eps, spec.geometry, result.static_check.ok);
      SweepRow r;
      r.omega_over_omegaT = x;
      r.eps_re = eps.real();
      r.eps_im = eps.imag();
      r.eta = b.baselines.n_gamma0;
      r.kappa = refractive_index(eps).kappa;
      r.gamma_gl_exact = b.gamma_gl_exact;
      r.gamma_gl_expanded = b.gamma_gl_expanded;
      r.gamma_cm_total = b.gamma_cm_total;
      r.gamma_cm_perp = b.gamma_cm_perp;
      r.gamma_cm_par = b.gamma_cm_par;
      r.baseline_gl = r.eta * b.baselines.gl_factor;
      r.baseline_cm = r.eta * b.baselines.cm_factor;
      r.markov_flag = static_cast<int>(b.markov.status);
      result.rows.push_back(r);
    } catch (const Error& e) {
      throw SweepError("sweep failed at omega/omega_T = " + std::to_string(x) + ": " + e.what(), x);
    }
  }
  return result;
}

namespace {

struct Preset {
  const char* name;
  double gamma;
  double radius_lambda;
  bool far_band;
};

constexpr Preset kPresets[] = {
    {"fig1", 0.05, 0.02, false}, {"fig2", 0.05, 0.02, true},  {"fig3", 0.2, 0.02, false},
    {"fig4", 0.2, 0.02, true},   {"fig5", 0.05, 0.2, false},  {"fig6", 0.2, 0.2, false},
};

constexpr double kPresetOmegaP = 0.46;
constexpr int kPresetNodes = 600;

const Preset& find_preset(std::string_view name) {
  for (const auto& p : kPresets) {
    if (name == p.name) return p;
  }
  throw DomainError("unknown preset '" + std::string(name) + "'");
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& p : kPresets) v.emplace_back(p.name);
    return v;
  }();
  return names;
}

SweepSpec preset_spec(std::string_view name) {
  const Preset& p = find_preset(name);
  SweepSpec s;
  s.model = DielectricModel::paper_lorentz({1.0, kPresetOmegaP, p.gamma});
  s.geometry = CavityGeometry::fraction_of_wavelength(p.radius_lambda);
  s.grid = p.far_band ? FrequencyGrid{0.2, 0.9, kPresetNodes} : FrequencyGrid{0.9, 1.3, kPresetNodes};
  s.omega_t = 1.0;
  s.preset = std::string(name);
  return s;
}

bool is_far_band_preset(std::string_view name) { return find_preset(name).far_band; }

}  // namespace cavity_decay
