#include "deltac/cli/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <json.hpp>
#include <sstream>

#include "deltac/cli/commands.hpp"
#include "deltac/errors.hpp"
#include "deltac/hermitian/estimate.hpp"
#include "deltac/io/table.hpp"
#include "deltac/spectrum/coupling.hpp"

namespace deltac::cli {

namespace {

double parse_double(std::string_view s, std::string_view what) {
  const std::string str(s);
  if (str.empty() || std::isspace(static_cast<unsigned char>(str[0]))) {
    throw InvalidArgument("cannot parse " + std::string(what) + " '" + str + "'");
  }
  char* end = nullptr;
  const double v = std::strtod(str.c_str(), &end);
  if (end != str.c_str() + str.size() || !std::isfinite(v)) {
    throw InvalidArgument("cannot parse " + std::string(what) + " '" + str + "'");
  }
  return v;
}

}  // namespace

std::complex<double> parse_complex(std::string_view text) {
  const std::string bad = "cannot parse complex number '" + std::string(text) + "' (expected a+bi)";
  if (text.empty()) throw InvalidArgument(bad);
  if (text.back() != 'i') return {parse_double(text, "complex number"), 0.0};
  const std::string_view body = text.substr(0, text.size() - 1);
  // split at the last sign that is not leading and not part of an exponent
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  const std::string_view re = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
  std::string_view im = split == std::string_view::npos ? body : body.substr(split);
  double im_value;
  if (im.empty() || im == "+") {
    im_value = 1.0;
  } else if (im == "-") {
    im_value = -1.0;
  } else {
    if (im.front() == '+') im.remove_prefix(1);
    try {
      im_value = parse_double(im, "imaginary part");
    } catch (const InvalidArgument&) {
      throw InvalidArgument(bad);
    }
  }
  double re_value = 0.0;
  if (!re.empty()) {
    try {
      re_value = parse_double(re, "real part");
    } catch (const InvalidArgument&) {
      throw InvalidArgument(bad);
    }
  }
  return {re_value, im_value};
}

std::vector<double> Range::points() const {
  const double span = (hi - lo) / step;
  const auto n = static_cast<long long>(std::floor(span + 1e-6));
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n + 1));
  // on a step-aligned start use integer multiples of step, so 0.1 stays 0.1
  const double k0 = std::round(lo / step);
  const bool aligned = std::abs(lo / step - k0) < 1e-9;
  for (long long i = 0; i <= n; ++i) {
    out.push_back(aligned ? (k0 + static_cast<double>(i)) * step : lo + static_cast<double>(i) * step);
  }
  return out;
}

Range parse_range(std::string_view text) {
  const auto a = text.find(':');
  const auto b = a == std::string_view::npos ? a : text.find(':', a + 1);
  if (b == std::string_view::npos || text.find(':', b + 1) != std::string_view::npos) {
    throw InvalidArgument("range must be lo:hi:step, got '" + std::string(text) + "'");
  }
  Range r{parse_double(text.substr(0, a), "range start"), parse_double(text.substr(a + 1, b - a - 1), "range end"),
          parse_double(text.substr(b + 1), "range step")};
  if (!(r.step > 0.0) || !(r.lo <= r.hi)) throw InvalidArgument("range needs lo <= hi and step > 0");
  if ((r.hi - r.lo) / r.step > 100000.0) throw InvalidArgument("range has more than 100001 points");
  return r;
}

std::vector<double> parse_list(std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_double(text.substr(start, comma - start), "list entry"));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

namespace {

enum class Format { Csv, Json };

struct Globals {
  std::string format = "csv";
  std::string out;
  std::uint64_t seed = kDefaultSeed;
  double tol = 0.0;  // 0: library defaults

  numerics::QuadratureSpec spec() const {
    numerics::QuadratureSpec s;
    if (tol > 0.0) s.abs_tol = s.rel_tol = tol;
    return s;
  }
};

nlohmann::json cell_json(const io::Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) {
    if (std::isfinite(*d)) return *d;
    return io::format_double(*d);
  }
  if (const auto* i = std::get_if<long long>(&c)) return *i;
  return std::get<std::string>(c);
}

std::string render(const io::Table& t, const Globals& g) {
  if (g.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : t.rows) {
      nlohmann::json o = nlohmann::json::object();
      for (std::size_t i = 0; i < r.size(); ++i) o[t.columns[i]] = cell_json(r[i]);
      rows.push_back(std::move(o));
    }
    nlohmann::json doc = {{"schema", "deltac-v1"}, {"columns", t.columns}, {"rows", std::move(rows)}};
    return doc.dump(2) + "\n";
  }
  return io::to_csv(t);
}

void emit(const std::string& text, const Globals& g, std::ostream& out) {
  if (g.out.empty()) {
    out << text;
  } else {
    io::write_atomic(g.out, text);
  }
}

std::string format_complex(std::complex<double> v) {
  if (v.imag() == 0.0) return io::format_double(v.real());
  std::string s = io::format_double(v.real());
  if (!std::signbit(v.imag())) s += '+';
  return s + io::format_double(v.imag()) + "i";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Complex delta-potential numerics: spectrum, metric operator, equivalent Hermitian Hamiltonian"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", g.out, "Write data to this file (atomically) instead of stdout");
  app.add_option("--seed", g.seed, "Seed for randomized batteries")->capture_default_str();
  app.add_option("--tol", g.tol, "Absolute and relative quadrature tolerance")->check(CLI::PositiveNumber);

  std::string z_text;

  auto* classify = app.add_subcommand("classify", "Spectral classification of H = -d^2/dx^2 + z delta(x)");
  classify->add_option("--z", z_text, "Coupling a+bi")->required();

  auto* verify = app.add_subcommand("verify", "Run invariant suites; exit 1 if any check fails");
  std::string suite = "all", eps_text = "0.05,0.1";
  std::string verify_z = "2+0.2i";
  verify->add_option("--suite", suite, "biortho|metric|hermitian|all")->capture_default_str();
  verify->add_option("--z", verify_z, "Coupling a+bi")->capture_default_str();
  verify->add_option("--eps-grid", eps_text, "Comma-separated eps values")->capture_default_str();

  auto* kernel = app.add_subcommand("kernel", "Sample eta^(m) or h2 on a square grid");
  std::string m_text, grid_text = "-3:3:0.1";
  std::string kernel_z = "2+0.2i";
  bool printed = false;
  kernel->add_option("--m", m_text, "0|1|2|3|h2")->required();
  kernel->add_option("--z", kernel_z, "Coupling a+bi")->capture_default_str();
  kernel->add_option("--grid", grid_text, "lo:hi:step for both x and y")->capture_default_str();
  kernel->add_flag("--printed", printed, "Order 2 in its literal closed form instead of the re-derived one");

  auto* sweep = app.add_subcommand("sweep", "Omega / Gamma / energy tables (natural units, m = hbar = 1)");
  SweepOptions sw;
  std::string sigma_text = "0.05:3:0.05", k_text = "0,1,2,4", a_text = "-4:4:0.05", sigmas_text = "0.5,1,2,3";
  std::string method = "closed";
  sweep->add_option("--target", sw.target, "omega|gamma|energy")->check(CLI::IsMember({"omega", "gamma", "energy"}));
  sweep->add_option("--sigma", sigma_text, "sigma range lo:hi:step (omega, energy)")->capture_default_str();
  sweep->add_option("--k", k_text, "k values (omega, energy)")->capture_default_str();
  sweep->add_option("--a", a_text, "mean position range lo:hi:step (gamma)")->capture_default_str();
  sweep->add_option("--sigmas", sigmas_text, "sigma values (gamma)")->capture_default_str();
  sweep->add_option("--L", sw.L, "length scale")->capture_default_str();
  sweep->add_option("--im-ratio", sw.im_ratio, "Im(zeta)/Re(zeta)")->capture_default_str();
  sweep->add_option("--method", method, "closed|quadrature (energy)")->check(CLI::IsMember({"closed", "quadrature"}));

  auto* estimate = app.add_subcommand("estimate", "Point-defect estimate of L and the eps bounds");
  std::string units = "ev-angstrom";
  double d = NAN, strength = NAN, mass = NAN, kT = NAN;
  estimate->add_option("--units", units, "ev-angstrom|si")->check(CLI::IsMember({"ev-angstrom", "si"}));
  estimate->add_option("--d", d, "defect size [A | m], default 1 A");
  estimate->add_option("--strength", strength, "real strength [eV | J], default 1 eV");
  estimate->add_option("--mass", mass, "mass [m_e | kg], default electron");
  estimate->add_option("--kT", kT, "thermal energy [eV | J], default 1e-2 eV");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    if (classify->parsed()) {
      const auto z = parse_complex(z_text);
      const auto r = spectrum::classify(z);
      if (g.format == "json") {
        nlohmann::json j = {{"kind", spectrum::to_string(r.kind)}, {"continuum", r.continuum}};
        if (r.special_E) j["E"] = {{"re", r.special_E->real()}, {"im", r.special_E->imag()}};
        emit(j.dump(2) + "\n", g, out);
      } else {
        std::string line = spectrum::to_string(r.kind);
        if (r.special_E) line += " E=" + format_complex(*r.special_E);
        line += " continuum=" + r.continuum + "\n";
        emit(line, g, out);
      }
      switch (r.kind) {
        case spectrum::SpectrumKind::BoundState: return kBoundState;
        case spectrum::SpectrumKind::SpectralSingularity: return kSpectralSingularity;
        case spectrum::SpectrumKind::CleanContinuum: return kOk;
      }
    }
    if (verify->parsed()) {
      const auto rows = run_verify_suite(suite, parse_complex(verify_z), parse_list(eps_text), g.spec(), g.seed);
      emit(render(verify_table(rows), g), g, out);
      bool ok = true;
      for (const auto& r : rows) {
        if (!r.pass) {
          err << "FAILED " << r.suite << "/" << r.name << ": measured " << io::format_double(r.measured)
              << " threshold " << io::format_double(r.threshold) << "\n";
          ok = false;
        }
      }
      return ok ? kOk : kVerifyFailed;
    }
    if (kernel->parsed()) {
      emit(render(kernel_table(m_text, parse_complex(kernel_z), parse_range(grid_text), printed), g), g, out);
      return kOk;
    }
    if (sweep->parsed()) {
      sw.sigma = parse_range(sigma_text);
      sw.k = parse_list(k_text);
      sw.a = parse_range(a_text);
      sw.sigmas = parse_list(sigmas_text);
      sw.quadrature = method == "quadrature";
      emit(render(sweep_table(sw), g), g, out);
      return kOk;
    }
    if (estimate->parsed()) {
      const bool si = units == "si";
      using namespace hermitian::constants;
      hermitian::DefectInputs in{si ? meter_per_angstrom : 1.0, si ? joule_per_ev : 1.0,
                                 si ? electron_mass_kg : 1.0, si ? 1e-2 * joule_per_ev : 1e-2};
      if (!std::isnan(d)) in.d = d;
      if (!std::isnan(strength)) in.strength = strength;
      if (!std::isnan(mass)) in.mass = mass;
      if (!std::isnan(kT)) in.temperature = kT;
      const auto sys = si ? hermitian::UnitSystem::si() : hermitian::UnitSystem::ev_angstrom();
      emit(render(estimate_table(hermitian::defect_estimate(in, sys)), g), g, out);
      return kOk;
    }
  } catch (const SpectralSingularity& e) {
    err << "error: spectral singularity: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const Unsupported& e) {
    err << "error: unsupported: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kNumericalError;
  }
  return kInvalidInput;
}

}  // namespace deltac::cli
