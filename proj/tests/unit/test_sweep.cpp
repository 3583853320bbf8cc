#include <fstream>
#include <sstream>

#include "cavity_decay/sweep.hpp"
#include "cavity_decay/sweep_io.hpp"
#include "support.hpp"

using namespace cavity_decay;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "cavity_decay_sweep_tests";
  fs::create_directories(dir);
  return dir / name;
}

void write_file(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SweepSpec small_spec(int count = 3) {
  SweepSpec s;
  s.grid = {0.95, 1.05, count};
  return s;
}

}  // namespace

TEST(FrequencyGrid, Nodes) {
  const auto n = FrequencyGrid{0.9, 1.3, 5}.nodes();
  ASSERT_EQ(n.size(), 5u);
  EXPECT_EQ(n.front(), 0.9);
  EXPECT_EQ(n.back(), 1.3);
  EXPECT_NEAR(n[2], 1.1, 1e-15);
  EXPECT_THROW((FrequencyGrid{0.9, 1.3, 1}.validate()), DomainError);
  EXPECT_THROW((FrequencyGrid{1.3, 0.9, 10}.validate()), DomainError);
}

TEST(Presets, Table) {
  const std::vector<std::string> want{"fig1", "fig2", "fig3", "fig4", "fig5", "fig6"};
  EXPECT_EQ(preset_names(), want);
  struct Row {
    double gamma, frac, start, stop;
  };
  const Row rows[] = {{0.05, 0.02, 0.9, 1.3}, {0.05, 0.02, 0.2, 0.9}, {0.2, 0.02, 0.9, 1.3},
                      {0.2, 0.02, 0.2, 0.9},  {0.05, 0.2, 0.9, 1.3},  {0.2, 0.2, 0.9, 1.3}};
  for (std::size_t i = 0; i < want.size(); ++i) {
    const auto s = preset_spec(want[i]);
    EXPECT_EQ(s.model.kind(), ModelKind::PaperLorentz);
    EXPECT_EQ(s.model.lorentz().omega_p, 0.46);
    EXPECT_EQ(s.model.lorentz().omega_t, 1.0);
    EXPECT_EQ(s.model.lorentz().gamma, rows[i].gamma);
    EXPECT_EQ(s.geometry.value(), rows[i].frac);
    EXPECT_NEAR(s.geometry.size_parameter(0.5), 2 * kPi * rows[i].frac, 1e-15);
    EXPECT_EQ(s.grid.start, rows[i].start);
    EXPECT_EQ(s.grid.stop, rows[i].stop);
    EXPECT_EQ(s.grid.count, 600);
    EXPECT_EQ(is_far_band_preset(want[i]), rows[i].start < 0.5);
  }
  EXPECT_THROW(preset_spec("fig7"), DomainError);
}

TEST(RunSweep, VacuumGivesUnitRates) {
  SweepSpec s;
  s.model = DielectricModel::constant({1.0, 0.0});
  s.grid = {0.5, 1.5, 7};
  for (const auto& r : run_sweep(s).rows) {
    EXPECT_NEAR(r.gamma_gl_exact, 1.0, 1e-12);
    EXPECT_NEAR(r.gamma_gl_expanded, 1.0, 1e-12);
    EXPECT_NEAR(r.gamma_cm_total, 1.0, 1e-12);
    EXPECT_NEAR(r.gamma_cm_perp, 1.0, 1e-12);
    EXPECT_EQ(r.gamma_cm_par, 0.0);
    EXPECT_NEAR(r.baseline_gl, 1.0, 1e-12);
    EXPECT_NEAR(r.baseline_cm, 1.0, 1e-12);
  }
}

TEST(RunSweep, AscendingAndDeterministic) {
  const auto a = run_sweep(small_spec(11)).rows;
  const auto b = run_sweep(small_spec(11)).rows;
  ASSERT_EQ(a.size(), 11u);
  EXPECT_EQ(a, b);
  for (std::size_t i = 1; i < a.size(); ++i) EXPECT_GT(a[i].omega_over_omegaT, a[i - 1].omega_over_omegaT);
}

TEST(RunSweep, MarkovFlagCoverage) {
  for (const char* name : {"fig5", "fig6"}) {
    for (const auto& r : run_sweep(preset_spec(name)).rows) EXPECT_GE(r.markov_flag, 1) << name;
  }
  for (const auto& r : run_sweep(small_spec(5)).rows) EXPECT_EQ(r.markov_flag, 0);
}

TEST(RunSweep, GoldenCurves) {
  for (const auto& name : preset_names()) {
    const auto got = run_sweep(preset_spec(name)).rows;
    const auto want = read_csv(test_support::data_dir() / "golden" / (name + ".csv"));
    ASSERT_EQ(got.size(), want.size()) << name;
    double worst = 0.0;
    for (std::size_t i = 0; i < got.size(); ++i) {
      const auto& g = got[i];
      const auto& w = want[i];
      EXPECT_EQ(g.omega_over_omegaT, w.omega_over_omegaT);
      EXPECT_EQ(g.markov_flag, w.markov_flag);
      for (auto [x, y] : {std::pair{g.eps_re, w.eps_re}, {g.eps_im, w.eps_im}, {g.eta, w.eta},
                          {g.kappa, w.kappa}, {g.gamma_gl_exact, w.gamma_gl_exact},
                          {g.gamma_gl_expanded, w.gamma_gl_expanded}, {g.gamma_cm_total, w.gamma_cm_total},
                          {g.gamma_cm_perp, w.gamma_cm_perp}, {g.gamma_cm_par, w.gamma_cm_par},
                          {g.baseline_gl, w.baseline_gl}, {g.baseline_cm, w.baseline_cm}}) {
        worst = std::max(worst, std::abs(x - y) / std::max(1.0, std::abs(y)));
      }
    }
    EXPECT_LT(worst, 1e-9) << name;
  }
}

TEST(Csv, LineCountAndRoundTrip) {
  const auto rows = run_sweep(small_spec(3)).rows;
  const auto text = format_csv(rows);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 4);
  EXPECT_EQ(text.find('\r'), std::string::npos);
  EXPECT_EQ(text.substr(0, text.find('\n')),
            "omega_over_omegaT,eps_re,eps_im,eta,kappa,gamma_gl_exact,gamma_gl_expanded,gamma_cm_total,"
            "gamma_cm_perp,gamma_cm_par,baseline_gl,baseline_cm,markov_flag");
  EXPECT_EQ(parse_csv(text), rows);
  const auto path = scratch("rows.csv");
  write_csv(rows, path);
  EXPECT_EQ(read_csv(path), rows);
  EXPECT_THROW(format_csv({}), DomainError);
  EXPECT_THROW(parse_csv("a,b\n1,2\n"), DomainError);
}

TEST(Csv, IoErrorsCarryPath) {
  const fs::path missing = scratch("absent") / "nowhere" / "rows.csv";
  try {
    write_csv(run_sweep(small_spec(2)).rows, missing);
    FAIL();
  } catch (const IoError& e) {
    EXPECT_EQ(e.path(), missing.string());
  }
  EXPECT_THROW(read_csv(missing), IoError);
}

TEST(Json, MirrorsRows) {
  const auto rows = run_sweep(small_spec(2)).rows;
  const auto text = format_json(rows);
  EXPECT_EQ(text.front(), '[');
  for (auto col : kSweepColumns) EXPECT_NE(text.find("\"" + std::string(col) + "\""), std::string::npos);
  EXPECT_LT(text.find("\"omega_over_omegaT\""), text.find("\"markov_flag\""));
}

TEST(PlotScript, FigureLineRoles) {
  const auto rows = run_sweep(small_spec(2)).rows;
  const auto fig2 = format_plot_script(rows, "fig2.csv", default_plot_selection("fig2"), "fig2");
  EXPECT_NE(fig2.find("using 1:11"), std::string::npos);
  EXPECT_NE(fig2.find("'fig2.csv'"), std::string::npos);
  const auto fig1 = format_plot_script(rows, "fig1.csv", default_plot_selection("fig1"), "fig1");
  EXPECT_EQ(fig1.find("using 1:11"), std::string::npos);
  EXPECT_NE(fig1.find("using 1:7 skip 1 with lines lc rgb 'black' dashtype 1"), std::string::npos);
  EXPECT_NE(fig1.find("using 1:8 "), std::string::npos);
  EXPECT_NE(fig1.find("using 1:9 "), std::string::npos);

  PlotSelection none{false, false, false, false, false};
  const auto path = scratch("empty.gp");
  fs::remove(path);
  EXPECT_THROW(write_plot_script(rows, "x.csv", none, "t", path), DomainError);
  EXPECT_FALSE(fs::exists(path));
  EXPECT_THROW(write_plot_script({}, "x.csv", PlotSelection{}, "t", path), DomainError);
  EXPECT_FALSE(fs::exists(path));
}

TEST(Settings, LoadMergeBuild) {
  const auto path = scratch("sweep.ini");
  write_file(path,
             "[model]\nkind = paper-lorentz\ngamma = 0.2\n"
             "[geometry]\nradius_lambda = 0.1\n"
             "[grid]\nstart = 0.95\nstop = 1.1\ncount = 4\n"
             "[output]\nout = rows.csv\njson = true\n");
  const auto file = load_settings(path);
  EXPECT_EQ(file.gamma, 0.2);
  EXPECT_EQ(file.count, 4);
  EXPECT_EQ(file.json, true);
  EXPECT_FALSE(file.preset);

  SweepSettings cli;
  cli.count = 9;
  const auto merged = merge_settings(file, cli);
  EXPECT_EQ(merged.count, 9);
  EXPECT_EQ(merged.gamma, 0.2);
  const auto spec = build_spec(merged);
  EXPECT_EQ(spec.grid.count, 9);
  EXPECT_EQ(spec.grid.start, 0.95);
  EXPECT_EQ(spec.model.lorentz().gamma, 0.2);
  EXPECT_EQ(spec.geometry.value(), 0.1);

  SweepSettings preset;
  preset.preset = "fig3";
  const auto p = build_spec(merge_settings(merged, preset));
  EXPECT_EQ(p.grid.count, 600);
  EXPECT_EQ(p.model.lorentz().gamma, 0.2);
  EXPECT_EQ(p.geometry.value(), 0.02);
}

TEST(Settings, Rejections) {
  const auto bad_key = scratch("bad_key.ini");
  write_file(bad_key, "[model]\ncolour = red\n");
  EXPECT_THROW(load_settings(bad_key), IoError);
  const auto bad_section = scratch("bad_section.ini");
  write_file(bad_section, "[extras]\nx = 1\n");
  EXPECT_THROW(load_settings(bad_section), IoError);
  const auto bad_number = scratch("bad_number.ini");
  write_file(bad_number, "[grid]\ncount = many\n");
  EXPECT_THROW(load_settings(bad_number), IoError);
  EXPECT_THROW(load_settings(scratch("missing.ini")), IoError);

  SweepSettings s;
  s.model = "drude";
  EXPECT_THROW(build_spec(s), DomainError);
  s.model = "tabulated";
  EXPECT_THROW(build_spec(s), DomainError);
  SweepSettings both;
  both.radius = 0.1;
  both.radius_lambda = 0.02;
  EXPECT_THROW(build_spec(both), DomainError);
}
