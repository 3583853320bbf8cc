#include "cavity_decay/sweep_io.hpp"

#include <array>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

namespace cavity_decay {
namespace {

constexpr int kCsvDigits = 17;

void append_double(std::string& out, double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, kCsvDigits);
  if (ec != std::errc{}) throw DomainError("cannot format value");
  out.append(buf.data(), ptr);
}

std::array<double*, 12> double_fields(SweepRow& r) {
  return {&r.omega_over_omegaT, &r.eps_re,        &r.eps_im,        &r.eta,          &r.kappa,
          &r.gamma_gl_exact,    &r.gamma_gl_expanded, &r.gamma_cm_total, &r.gamma_cm_perp, &r.gamma_cm_par,
          &r.baseline_gl,       &r.baseline_cm};
}

std::array<double, 12> double_values(const SweepRow& r) {
  return {r.omega_over_omegaT, r.eps_re,        r.eps_im,        r.eta,          r.kappa,
          r.gamma_gl_exact,    r.gamma_gl_expanded, r.gamma_cm_total, r.gamma_cm_perp, r.gamma_cm_par,
          r.baseline_gl,       r.baseline_cm};
}

std::string header_line() {
  std::string h;
  for (std::size_t i = 0; i < std::size(kSweepColumns); ++i) {
    if (i) h += ',';
    h += kSweepColumns[i];
  }
  return h;
}

void write_text(const std::string& text, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing", path.string());
  out << text;
  out.flush();
  if (!out) throw IoError("write failed", path.string());
}

void require_rows(const std::vector<SweepRow>& rows) {
  if (rows.empty()) throw DomainError("no rows to write");
}

}  // namespace

std::string format_csv(const std::vector<SweepRow>& rows) {
  require_rows(rows);
  std::string out = header_line();
  out += '\n';
  for (const auto& r : rows) {
    for (double v : double_values(r)) {
      append_double(out, v);
      out += ',';
    }
    out += std::to_string(r.markov_flag);
    out += '\n';
  }
  return out;
}

std::vector<SweepRow> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != header_line()) throw DomainError("CSV header does not match sweep columns");
  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    SweepRow r;
    auto fields = double_fields(r);
    const char* p = line.data();
    const char* end = line.data() + line.size();
    for (double* f : fields) {
      auto [next, ec] = std::from_chars(p, end, *f);
      if (ec != std::errc{} || next == end || *next != ',') throw DomainError("malformed CSV row: " + line);
      p = next + 1;
    }
    auto [next, ec] = std::from_chars(p, end, r.markov_flag);
    if (ec != std::errc{} || next != end) throw DomainError("malformed CSV row: " + line);
    rows.push_back(r);
  }
  return rows;
}

std::vector<SweepRow> read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading", path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_csv(ss.str());
}

std::string format_json(const std::vector<SweepRow>& rows) {
  require_rows(rows);
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json o;
    const auto vals = double_values(r);
    for (std::size_t i = 0; i < vals.size(); ++i) o[std::string(kSweepColumns[i])] = vals[i];
    o["markov_flag"] = r.markov_flag;
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + "\n";
}

void write_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& path) {
  write_text(format_csv(rows), path);
}

void write_json(const std::vector<SweepRow>& rows, const std::filesystem::path& path) {
  write_text(format_json(rows), path);
}

PlotSelection default_plot_selection(const std::optional<std::string>& preset) {
  PlotSelection s;
  s.baseline_gl = preset.has_value() && is_far_band_preset(*preset);
  return s;
}

std::string format_plot_script(const std::vector<SweepRow>& rows, const std::string& csv_path,
                               const PlotSelection& selection, const std::string& title) {
  require_rows(rows);
  if (selection.empty()) throw DomainError("plot script needs at least one series");
  struct Series {
    bool on;
    int column;
    const char* label;
    int dash;  // gnuplot dashtype
    const char* colour;
  };
  // Column numbers follow kSweepColumns (1-based).
  const Series series[] = {
      {selection.gamma_gl_expanded, 7, "real cavity", 1, "black"},
      {selection.gamma_gl_exact, 6, "real cavity, exact", 1, "grey50"},
      {selection.gamma_cm_total, 8, "virtual cavity", 3, "black"},
      {selection.gamma_cm_perp, 9, "virtual cavity, transverse", 4, "black"},
      {selection.baseline_gl, 11, "real cavity, bulk", 2, "black"},
  };
  std::ostringstream s;
  s << "set datafile separator ','\n";
  s << "set title \"" << title << "\"\n";
  s << "set xlabel \"omega_A / omega_T\"\n";
  s << "set ylabel \"Gamma / Gamma_0\"\n";
  s << "set key top left\n";
  s << "plot ";
  bool first = true;
  for (const auto& sr : series) {
    if (!sr.on) continue;
    if (!first) s << ", \\\n     ";
    first = false;
    s << "'" << csv_path << "' using 1:" << sr.column << " skip 1 with lines lc rgb '" << sr.colour << "' dashtype " << sr.dash
      << " title \"" << sr.label << "\"";
  }
  s << "\n";
  return s.str();
}

void write_plot_script(const std::vector<SweepRow>& rows, const std::string& csv_path,
                       const PlotSelection& selection, const std::string& title,
                       const std::filesystem::path& path) {
  write_text(format_plot_script(rows, csv_path, selection, title), path);
}

namespace {

namespace pt = boost::property_tree;

template <class T>
std::optional<T> take(const pt::ptree& section, const std::string& key, std::set<std::string>& seen,
                      const std::filesystem::path& path) {
  auto v = section.get_optional<std::string>(key);
  if (!v) return std::nullopt;
  seen.insert(key);
  if constexpr (std::is_same_v<T, std::string>) {
    return *v;
  } else if constexpr (std::is_same_v<T, bool>) {
    if (*v == "true" || *v == "1" || *v == "yes") return true;
    if (*v == "false" || *v == "0" || *v == "no") return false;
    throw IoError("bad boolean for '" + key + "'", path.string());
  } else {
    T out{};
    const char* b = v->data();
    const char* e = b + v->size();
    auto [ptr, ec] = std::from_chars(b, e, out);
    if (ec != std::errc{} || ptr != e) throw IoError("bad number for '" + key + "'", path.string());
    return out;
  }
}

}  // namespace

SweepSettings load_settings(const std::filesystem::path& path) {
  pt::ptree tree;
  try {
    pt::read_ini(path.string(), tree);
  } catch (const pt::ini_parser_error& e) {
    throw IoError(e.message(), path.string());
  }
  SweepSettings s;
  const std::set<std::string> sections{"sweep", "model", "geometry", "grid", "output"};
  for (const auto& [name, section] : tree) {
    if (!sections.count(name)) throw IoError("unknown section [" + name + "]", path.string());
    std::set<std::string> seen;
    if (name == "sweep") {
      s.preset = take<std::string>(section, "preset", seen, path);
    } else if (name == "model") {
      s.model = take<std::string>(section, "kind", seen, path);
      s.omega_t = take<double>(section, "omega_t", seen, path);
      s.omega_p = take<double>(section, "omega_p", seen, path);
      s.gamma = take<double>(section, "gamma", seen, path);
      s.eps_re = take<double>(section, "eps_re", seen, path);
      s.eps_im = take<double>(section, "eps_im", seen, path);
      s.table = take<std::string>(section, "table", seen, path);
      s.table_imag = take<std::string>(section, "table_imag", seen, path);
    } else if (name == "geometry") {
      s.radius_lambda = take<double>(section, "radius_lambda", seen, path);
      s.radius = take<double>(section, "radius", seen, path);
    } else if (name == "grid") {
      s.omega_start = take<double>(section, "start", seen, path);
      s.omega_stop = take<double>(section, "stop", seen, path);
      s.count = take<int>(section, "count", seen, path);
    } else {
      s.out = take<std::string>(section, "out", seen, path);
      s.plot_script = take<std::string>(section, "plot_script", seen, path);
      s.json = take<bool>(section, "json", seen, path);
    }
    for (const auto& [key, value] : section) {
      if (!seen.count(key)) throw IoError("unknown key '" + key + "' in [" + name + "]", path.string());
    }
  }
  return s;
}

SweepSettings merge_settings(const SweepSettings& base, const SweepSettings& top) {
  SweepSettings m = base;
  auto pick = [](auto& dst, const auto& src) {
    if (src) dst = src;
  };
  pick(m.preset, top.preset);
  pick(m.model, top.model);
  pick(m.omega_t, top.omega_t);
  pick(m.omega_p, top.omega_p);
  pick(m.gamma, top.gamma);
  pick(m.eps_re, top.eps_re);
  pick(m.eps_im, top.eps_im);
  pick(m.table, top.table);
  pick(m.table_imag, top.table_imag);
  pick(m.radius_lambda, top.radius_lambda);
  pick(m.radius, top.radius);
  pick(m.omega_start, top.omega_start);
  pick(m.omega_stop, top.omega_stop);
  pick(m.count, top.count);
  pick(m.out, top.out);
  pick(m.plot_script, top.plot_script);
  pick(m.json, top.json);
  return m;
}

SweepSpec build_spec(const SweepSettings& s) {
  if (s.preset) return preset_spec(*s.preset);
  SweepSpec spec;
  const std::string kind = s.model.value_or("paper-lorentz");
  LorentzParameters p{s.omega_t.value_or(1.0), s.omega_p.value_or(0.46), s.gamma.value_or(0.05)};
  if (kind == "paper-lorentz") {
    spec.model = DielectricModel::paper_lorentz(p);
  } else if (kind == "standard-lorentz") {
    spec.model = DielectricModel::standard_lorentz(p);
  } else if (kind == "constant") {
    spec.model = DielectricModel::constant({s.eps_re.value_or(1.0), s.eps_im.value_or(0.0)});
  } else if (kind == "tabulated") {
    if (!s.table) throw DomainError("tabulated model needs a table file");
    spec.model = DielectricModel::tabulated(s.table_imag ? load_permittivity_table(*s.table, *s.table_imag)
                                                         : load_permittivity_table(*s.table));
  } else {
    throw DomainError("unknown model '" + kind + "'");
  }
  if (s.radius_lambda && s.radius) throw DomainError("give either a radius or a radius fraction, not both");
  if (s.radius) {
    spec.geometry = CavityGeometry::absolute(*s.radius);
  } else {
    spec.geometry = CavityGeometry::fraction_of_wavelength(s.radius_lambda.value_or(0.02));
  }
  spec.grid = FrequencyGrid{s.omega_start.value_or(0.9), s.omega_stop.value_or(1.3), s.count.value_or(600)};
  spec.grid.validate();
  spec.omega_t = s.omega_t.value_or(1.0);
  if (kind == "constant" || kind == "tabulated") spec.omega_t = 1.0;
  return spec;
}

}  // namespace cavity_decay
