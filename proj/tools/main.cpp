// cavity-decay: decay-rate sweeps over the transition frequency.

#include <CLI11.hpp>
#include <iostream>

#include "cavity_decay/sweep.hpp"
#include "cavity_decay/sweep_io.hpp"

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kNumerical = 2, kIo = 3 };

using cavity_decay::SweepSettings;

template <class T>
void add_setting(CLI::App& app, const std::string& name, std::optional<T>& slot, const std::string& help) {
  app.add_option_function<T>(name, [&slot](const T& v) { slot = v; }, help);
}

int run(const SweepSettings& cli, const std::optional<std::string>& config_path) {
  SweepSettings settings;
  try {
    if (config_path) settings = cavity_decay::load_settings(*config_path);
  } catch (const cavity_decay::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  }
  settings = cavity_decay::merge_settings(settings, cli);
  // A preset named on the command line beats everything in the file.
  if (cli.preset) settings.preset = cli.preset;

  const bool json = settings.json.value_or(false);
  if (json && settings.plot_script) {
    std::cerr << "error: --json cannot be combined with --plot-script\n";
    return kUsage;
  }
  if (settings.plot_script && !settings.out) {
    std::cerr << "error: --plot-script needs --out for the data file\n";
    return kUsage;
  }

  cavity_decay::SweepSpec spec;
  try {
    spec = cavity_decay::build_spec(settings);
  } catch (const cavity_decay::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const cavity_decay::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  cavity_decay::SweepResult result;
  try {
    result = cavity_decay::run_sweep(spec);
  } catch (const cavity_decay::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumerical;
  }

  if (!result.static_check.ok) {
    std::cerr << "warning: |eps(0+)| = " << result.static_check.magnitude
              << " >= 10; virtual-cavity results are unreliable\n";
  }
  std::size_t flagged = 0;
  for (const auto& r : result.rows) flagged += r.markov_flag != 0;
  if (flagged) {
    std::cerr << "warning: " << flagged << " of " << result.rows.size()
              << " rows have omega R/c > 0.5 (markov_flag)\n";
  }

  try {
    if (settings.out) {
      if (json) {
        cavity_decay::write_json(result.rows, *settings.out);
      } else {
        cavity_decay::write_csv(result.rows, *settings.out);
      }
    } else {
      std::cout << (json ? cavity_decay::format_json(result.rows) : cavity_decay::format_csv(result.rows));
    }
    if (settings.plot_script) {
      const auto selection = cavity_decay::default_plot_selection(spec.preset);
      const std::string title = spec.preset.value_or("sweep");
      cavity_decay::write_plot_script(result.rows, *settings.out, selection, title, *settings.plot_script);
    }
  } catch (const cavity_decay::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const cavity_decay::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumerical;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spontaneous-decay rates of an atom in an absorbing dielectric"};
  app.require_subcommand(1);
  CLI::App* sweep = app.add_subcommand("sweep", "Tabulate rates over a frequency grid");

  SweepSettings cli;
  std::optional<std::string> config;
  bool json = false;
  add_setting(*sweep, "--config", config, "INI file with default settings");
  sweep->add_option_function<std::string>("--preset", [&cli](const std::string& v) { cli.preset = v; },
                                          "fig1..fig6; overrides model, geometry and grid")
      ->check(CLI::IsMember(cavity_decay::preset_names()));
  sweep->add_option_function<std::string>("--model", [&cli](const std::string& v) { cli.model = v; },
                                          "paper-lorentz | standard-lorentz | constant | tabulated")
      ->check(CLI::IsMember({"paper-lorentz", "standard-lorentz", "constant", "tabulated"}));
  add_setting(*sweep, "--omega-t", cli.omega_t, "Resonance frequency");
  add_setting(*sweep, "--omega-p", cli.omega_p, "Plasma frequency");
  add_setting(*sweep, "--gamma", cli.gamma, "Damping");
  add_setting(*sweep, "--eps-re", cli.eps_re, "Constant model: real part");
  add_setting(*sweep, "--eps-im", cli.eps_im, "Constant model: imaginary part");
  add_setting(*sweep, "--table", cli.table, "Tabulated model: omega,eps_re,eps_im CSV (or omega,eps_re)");
  add_setting(*sweep, "--table-imag", cli.table_imag, "Tabulated model: omega,eps_im CSV");
  add_setting(*sweep, "--radius-lambda", cli.radius_lambda, "Cavity radius as a fraction of the wavelength");
  add_setting(*sweep, "--radius", cli.radius, "Cavity radius in units of c/omega_T");
  add_setting(*sweep, "--omega-start", cli.omega_start, "First frequency (units of omega_T)");
  add_setting(*sweep, "--omega-stop", cli.omega_stop, "Last frequency (units of omega_T)");
  add_setting(*sweep, "--count", cli.count, "Number of grid nodes");
  add_setting(*sweep, "--out", cli.out, "Output file (stdout if omitted)");
  add_setting(*sweep, "--plot-script", cli.plot_script, "Write a gnuplot script for the CSV");
  sweep->add_flag("--json", json, "Write JSON instead of CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  if (json) cli.json = true;
  return run(cli, config);
}
