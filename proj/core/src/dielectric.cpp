#include "cavity_decay/dielectric.hpp"

#include <math.h>  // pchip.hpp calls unqualified isnan

#include <algorithm>
#include <boost/math/interpolators/pchip.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

namespace cavity_decay {

void LorentzParameters::validate() const {
  if (!(omega_t > 0.0) || !std::isfinite(omega_t)) throw DomainError("omega_T must be positive");
  if (!(omega_p >= 0.0) || !std::isfinite(omega_p)) throw DomainError("omega_P must be non-negative");
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw DomainError("gamma must be positive");
}

void PermittivityTable::validate() const {
  if (omega.size() != eps_re.size() || omega.size() != eps_im.size()) {
    throw DomainError("permittivity table columns differ in length");
  }
  if (omega.size() < 4) throw DomainError("permittivity table needs at least 4 nodes");
  for (std::size_t i = 0; i < omega.size(); ++i) {
    if (!std::isfinite(omega[i]) || !std::isfinite(eps_re[i]) || !std::isfinite(eps_im[i])) {
      throw DomainError("non-finite value in permittivity table");
    }
    if (i > 0 && !(omega[i] > omega[i - 1])) {
      throw DomainError("permittivity table frequencies must be strictly increasing");
    }
    if (eps_im[i] < 0.0) throw DomainError("permittivity table has eps_im < 0");
  }
  if (!(omega.front() > 0.0)) throw DomainError("permittivity table frequencies must be positive");
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    const auto b = cell.find_first_not_of(" \t\r");
    const auto e = cell.find_last_not_of(" \t\r");
    cells.push_back(b == std::string::npos ? std::string{} : cell.substr(b, e - b + 1));
  }
  return cells;
}

double parse_number(const std::string& cell, const std::filesystem::path& path, int line_no) {
  double v = 0.0;
  const char* end = cell.data() + cell.size();
  auto [ptr, ec] = std::from_chars(cell.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw IoError("bad number '" + cell + "' on line " + std::to_string(line_no), path.string());
  }
  return v;
}

// Reads rows of `columns` numbers after a header whose names must match.
std::vector<std::vector<double>> read_columns(const std::filesystem::path& path,
                                              const std::vector<std::string>& header) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open permittivity table", path.string());
  std::vector<std::vector<double>> cols(header.size());
  std::string line;
  bool seen_header = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    auto cells = split_csv(line);
    if (!seen_header) {
      if (cells != header) throw IoError("unexpected header '" + line + "'", path.string());
      seen_header = true;
      continue;
    }
    if (cells.size() != header.size()) {
      throw IoError("wrong column count on line " + std::to_string(line_no), path.string());
    }
    for (std::size_t c = 0; c < cells.size(); ++c) cols[c].push_back(parse_number(cells[c], path, line_no));
  }
  if (!seen_header) throw IoError("missing header", path.string());
  return cols;
}

}  // namespace

PermittivityTable load_permittivity_table(const std::filesystem::path& path) {
  auto cols = read_columns(path, {"omega", "eps_re", "eps_im"});
  PermittivityTable t{std::move(cols[0]), std::move(cols[1]), std::move(cols[2])};
  t.validate();
  return t;
}

PermittivityTable load_permittivity_table(const std::filesystem::path& real_part,
                                          const std::filesystem::path& imag_part) {
  auto re = read_columns(real_part, {"omega", "eps_re"});
  auto im = read_columns(imag_part, {"omega", "eps_im"});
  if (re[0] != im[0]) throw DomainError("real and imaginary tables use different frequency grids");
  PermittivityTable t{std::move(re[0]), std::move(re[1]), std::move(im[1])};
  t.validate();
  return t;
}

struct DielectricModel::Interpolant {
  using Spline = boost::math::interpolators::pchip<std::vector<double>>;

  explicit Interpolant(const PermittivityTable& t)
      : lo(t.omega.front()),
        hi(t.omega.back()),
        re(std::vector<double>(t.omega), std::vector<double>(t.eps_re)),
        im(std::vector<double>(t.omega), std::vector<double>(t.eps_im)) {}

  double lo;
  double hi;
  Spline re;
  Spline im;
};

DielectricModel DielectricModel::paper_lorentz(const LorentzParameters& p) {
  p.validate();
  DielectricModel m;
  m.kind_ = ModelKind::PaperLorentz;
  m.lorentz_ = p;
  return m;
}

DielectricModel DielectricModel::standard_lorentz(const LorentzParameters& p) {
  p.validate();
  DielectricModel m;
  m.kind_ = ModelKind::StandardLorentz;
  m.lorentz_ = p;
  return m;
}

DielectricModel DielectricModel::constant(Complex eps) {
  if (!is_finite(eps)) throw DomainError("non-finite constant permittivity");
  DielectricModel m;
  m.kind_ = ModelKind::Constant;
  m.constant_ = eps;
  return m;
}

DielectricModel DielectricModel::tabulated(PermittivityTable table) {
  table.validate();
  DielectricModel m;
  m.kind_ = ModelKind::Tabulated;
  m.table_ = std::make_shared<const Interpolant>(table);
  return m;
}

const LorentzParameters& DielectricModel::lorentz() const {
  if (kind_ != ModelKind::PaperLorentz && kind_ != ModelKind::StandardLorentz) {
    throw DomainError("model has no Lorentz parameters");
  }
  return lorentz_;
}

double DielectricModel::omega_min() const noexcept { return table_ ? table_->lo : 0.0; }

double DielectricModel::omega_max() const noexcept {
  return table_ ? table_->hi : std::numeric_limits<double>::infinity();
}

Complex DielectricModel::eval(double omega) const {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw DomainError("permittivity requested at non-positive frequency");
  }
  switch (kind_) {
    case ModelKind::PaperLorentz: {
      const auto& p = lorentz_;
      return 1.0 + p.omega_p * p.omega_p /
                       Complex(p.omega_t * p.omega_t - omega * omega, -p.gamma * p.omega_t);
    }
    case ModelKind::StandardLorentz: {
      const auto& p = lorentz_;
      return 1.0 + p.omega_p * p.omega_p / Complex(p.omega_t * p.omega_t - omega * omega, -p.gamma * omega);
    }
    case ModelKind::Constant:
      return constant_;
    case ModelKind::Tabulated:
      if (omega < table_->lo || omega > table_->hi) {
        throw DomainError("frequency " + std::to_string(omega) + " outside permittivity table");
      }
      return {table_->re(omega), table_->im(omega)};
  }
  return constant_;
}

Complex eval_permittivity(const DielectricModel& model, double omega) { return model.eval(omega); }

RefractiveIndex refractive_index(Complex eps) {
  if (eps == Complex{}) throw DomainError("refractive index of zero permittivity");
  if (!is_finite(eps)) throw DomainError("non-finite permittivity");
  Complex n = std::sqrt(eps);
  if (n.imag() < 0.0) n = -n;
  return {n.real(), n.imag()};
}

double longitudinal_frequency(const LorentzParameters& p) {
  return std::sqrt(p.omega_t * p.omega_t + p.omega_p * p.omega_p);
}

double kramers_kronig_residual(const DielectricModel& model, std::span<const double> grid) {
  const std::size_t n = grid.size();
  if (n < 64) throw DomainError("Kramers-Kronig grid needs at least 64 nodes");
  for (std::size_t i = 1; i < n; ++i) {
    if (!(grid[i] > grid[i - 1])) throw DomainError("Kramers-Kronig grid must be strictly increasing");
  }
  std::vector<double> g(n);
  std::vector<double> target(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex e = model.eval(grid[i]);
    g[i] = grid[i] * e.imag();
    target[i] = e.real() - 1.0;
  }
  const double a = grid.front();
  const double b = grid.back();
  std::vector<double> w(n);
  w[0] = 0.5 * (grid[1] - grid[0]);
  w[n - 1] = 0.5 * (grid[n - 1] - grid[n - 2]);
  for (std::size_t i = 1; i + 1 < n; ++i) w[i] = 0.5 * (grid[i + 1] - grid[i - 1]);

  double worst = 0.0;
  double scale = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double x = grid[i];
    const double slope = (g[i + 1] - g[i - 1]) / (grid[i + 1] - grid[i - 1]);
    double pv = 0.0;
    double plain = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double d = grid[j] - x;
      pv += w[j] * (j == i ? slope : (g[j] - g[i]) / d);
      plain += w[j] * g[j] / (grid[j] + x);
    }
    pv += g[i] * std::log((b - x) / (x - a));
    const double kk = (pv - plain) / (kPi * x);
    worst = std::max(worst, std::abs(kk - target[i]));
    scale = std::max(scale, std::abs(target[i]));
  }
  if (scale == 0.0) return worst;
  return worst / scale;
}

StaticCheck static_permittivity_check(const DielectricModel& model) {
  const double probe = std::max(kStaticProbeOmega, model.omega_min());
  const double mag = std::abs(model.eval(probe));
  return {mag < kStaticWarnThreshold, mag};
}

}  // namespace cavity_decay
