#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cavity_decay/sweep.hpp"

namespace cavity_decay {

/// Header plus one LF-terminated line per row, 17 significant digits.
std::string format_csv(const std::vector<SweepRow>& rows);
std::vector<SweepRow> parse_csv(const std::string& text);
std::vector<SweepRow> read_csv(const std::filesystem::path& path);

/// Array of objects keyed by column name.
std::string format_json(const std::vector<SweepRow>& rows);

void write_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& path);
void write_json(const std::vector<SweepRow>& rows, const std::filesystem::path& path);

/// Line roles follow the published figures: the real-cavity curve there is
/// the small-cavity expansion.
struct PlotSelection {
  bool gamma_gl_expanded = true;  ///< solid
  bool gamma_gl_exact = false;    ///< solid, grey
  bool gamma_cm_total = true;     ///< dotted
  bool gamma_cm_perp = true;      ///< dash-dot
  bool baseline_gl = false;       ///< dashed

  bool empty() const {
    return !(gamma_gl_expanded || gamma_gl_exact || gamma_cm_total || gamma_cm_perp || baseline_gl);
  }
};

/// Curve set of a preset; baseline_gl only on the far band.
PlotSelection default_plot_selection(const std::optional<std::string>& preset);

/// gnuplot script drawing the selected columns of `csv_path`.
std::string format_plot_script(const std::vector<SweepRow>& rows, const std::string& csv_path,
                               const PlotSelection& selection, const std::string& title);

/// Throws DomainError for empty rows or selection, before touching the file.
void write_plot_script(const std::vector<SweepRow>& rows, const std::string& csv_path,
                       const PlotSelection& selection, const std::string& title,
                       const std::filesystem::path& path);

/// Sweep settings as read from a config file or the command line. Unset
/// fields fall through to the next layer.
struct SweepSettings {
  std::optional<std::string> preset;
  std::optional<std::string> model;  ///< paper-lorentz, standard-lorentz, constant, tabulated
  std::optional<double> omega_t;
  std::optional<double> omega_p;
  std::optional<double> gamma;
  std::optional<double> eps_re;
  std::optional<double> eps_im;
  std::optional<std::string> table;
  std::optional<std::string> table_imag;
  std::optional<double> radius_lambda;
  std::optional<double> radius;
  std::optional<double> omega_start;
  std::optional<double> omega_stop;
  std::optional<int> count;
  std::optional<std::string> out;
  std::optional<std::string> plot_script;
  std::optional<bool> json;
};

/// INI file with [sweep], [model], [geometry], [grid] and [output] sections.
/// Unknown keys are errors.
SweepSettings load_settings(const std::filesystem::path& path);

/// Fields set in `top` win over `base`.
SweepSettings merge_settings(const SweepSettings& base, const SweepSettings& top);

/// Builds a spec. A preset fixes model, geometry and grid; other fields then
/// only affect output.
SweepSpec build_spec(const SweepSettings& s);

}  // namespace cavity_decay
