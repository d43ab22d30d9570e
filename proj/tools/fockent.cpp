// fockent: reduced density matrices, spectra and entanglement measures of
// two-mode multiphoton polarization states.

#include "fockent/dump.hpp"
#include "fockent/error.hpp"
#include "fockent/figures.hpp"
#include "fockent/spectrum.hpp"
#include "fockent/table.hpp"
#include "fockent/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <boost/version.hpp>

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using fockent::Complex;
using fockent::NumericalError;
using fockent::ValidationError;
using nlohmann::json;

constexpr const char* kVersion = "1.0.0";

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kInvalidInput = 2, kNumericalFailure = 3 };

struct GlobalArgs {
  std::string output;
  std::string format;  // empty: command default
  unsigned jobs = 1;
  bool timings = false;
};

struct StateArgs {
  std::vector<unsigned> fock;
  std::string amplitudes;
  std::string amplitudes_file;
  std::vector<double> gaussian;
};

class Stopwatch {
 public:
  void mark(const std::string& stage) {
    const auto now = std::chrono::steady_clock::now();
    stages_[stage] = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
  }
  json to_json() const { return stages_; }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
  std::map<std::string, double> stages_;
};

double parse_double(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ValidationError("cannot parse number '" + std::string(text) + "'");
  }
  return value;
}

// "re" or "re:im"
Complex parse_complex(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) return parse_double(text);
  return {parse_double(text.substr(0, colon)), parse_double(text.substr(colon + 1))};
}

std::vector<Complex> parse_inline_amplitudes(const std::string& list) {
  std::vector<Complex> raw;
  std::string_view rest(list);
  while (true) {
    const auto comma = rest.find(',');
    raw.push_back(parse_complex(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (raw.size() < 2) throw ValidationError("amplitude list needs at least two entries (n >= 1)");
  return raw;
}

// "n <integer>" followed by n+1 lines "<index> <re> <im>" in any order.
std::vector<Complex> read_amplitude_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open amplitude file '" + path + "'");
  std::string line;
  std::optional<unsigned> n;
  std::vector<Complex> raw;
  std::vector<bool> seen;
  unsigned line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    const std::string where = path + ":" + std::to_string(line_no);
    if (!n) {
      long long value = -1;
      if (first != "n" || !(fields >> value) || value < 1) {
        throw ValidationError(where + ": expected header 'n <integer>'");
      }
      n = static_cast<unsigned>(value);
      raw.assign(*n + 1, Complex{});
      seen.assign(*n + 1, false);
      continue;
    }
    std::string re;
    std::string im;
    std::string extra;
    if (!(fields >> re >> im) || (fields >> extra)) {
      throw ValidationError(where + ": expected '<index> <re> <im>'");
    }
    const double index = parse_double(first);
    if (index < 0 || index > *n || index != std::floor(index)) {
      throw ValidationError(where + ": index outside 0.." + std::to_string(*n));
    }
    const auto k = static_cast<unsigned>(index);
    if (seen[k]) throw ValidationError(where + ": duplicate index " + std::to_string(k));
    seen[k] = true;
    raw[k] = {parse_double(re), parse_double(im)};
  }
  if (!n) throw ValidationError(path + ": missing 'n <integer>' header");
  for (unsigned k = 0; k <= *n; ++k)
    if (!seen[k]) throw ValidationError(path + ": missing amplitude index " + std::to_string(k));
  return raw;
}

struct ResolvedState {
  fockent::TwoModeSuperposition state;
  json echo;
};

ResolvedState resolve_state(const StateArgs& args) {
  const int given = !args.fock.empty() + !args.amplitudes.empty() + !args.amplitudes_file.empty() +
                    !args.gaussian.empty();
  if (given != 1) {
    throw ValidationError(
        "give exactly one of --fock, --amplitudes, --amplitudes-file, --gaussian");
  }
  if (!args.fock.empty()) {
    const fockent::ModeOccupation occ{args.fock[0], args.fock[1]};
    return {fockent::make_fock(occ), {{"kind", "fock"}, {"n_h", occ.n_h}, {"n_v", occ.n_v}}};
  }
  if (!args.gaussian.empty()) {
    const double n = args.gaussian[0];
    if (n < 1 || n != std::floor(n)) throw ValidationError("gaussian n must be a positive integer");
    return {fockent::gaussian_superposition(static_cast<unsigned>(n), args.gaussian[1], args.gaussian[2]),
            {{"kind", "gaussian"}, {"n", static_cast<unsigned>(n)}, {"m0", args.gaussian[1]},
             {"sigma", args.gaussian[2]}}};
  }
  const bool from_file = !args.amplitudes_file.empty();
  const auto raw = from_file ? read_amplitude_file(args.amplitudes_file)
                             : parse_inline_amplitudes(args.amplitudes);
  const auto n = static_cast<unsigned>(raw.size() - 1);
  auto normalized = fockent::make_superposition(n, raw);
  json amplitudes = json::array();
  for (const auto& c : normalized.state.amplitudes()) amplitudes.push_back({c.real(), c.imag()});
  json echo{{"kind", "amplitudes"},
            {"n", n},
            {"amplitudes", std::move(amplitudes)},
            {"renormalized", normalized.renormalized}};
  if (from_file) echo["file"] = args.amplitudes_file;
  return {std::move(normalized.state), std::move(echo)};
}

void add_state_flags(CLI::App* cmd, StateArgs& args) {
  cmd->add_option("--fock", args.fock, "Basic Fock state |n_H, n_V>")->expected(2);
  cmd->add_option("--amplitudes", args.amplitudes,
                  "Inline amplitudes indexed by n_V: comma-separated 're' or 're:im'");
  cmd->add_option("--amplitudes-file", args.amplitudes_file,
                  "Amplitude file: 'n <int>' then '<index> <re> <im>' lines");
  cmd->add_option("--gaussian", args.gaussian, "Gaussian superposition: n m0 sigma")->expected(3);
}

json base_report(const std::string& command, json inputs) {
  return {{"command", command},
          {"inputs", std::move(inputs)},
          {"versions", {{"fockent", kVersion}, {"boost", BOOST_LIB_VERSION}}}};
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw ValidationError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

std::string pick_format(const GlobalArgs& g, const char* fallback) {
  const std::string format = g.format.empty() ? fallback : g.format;
  if (format != "csv" && format != "json") throw ValidationError("format must be csv or json");
  return format;
}

void emit(const GlobalArgs& g, const std::string& format, json report, const fockent::Table& table,
          const Stopwatch& watch) {
  Output out(g.output);
  if (format == "csv") {
    fockent::write_csv(out.stream(), table);
    return;
  }
  if (g.timings) report["timings_ms"] = watch.to_json();
  out.stream() << report.dump(2) << '\n';
}

int cmd_reduce(const GlobalArgs& g, const StateArgs& s, unsigned m, bool full) {
  Stopwatch watch;
  const auto format = pick_format(g, "json");
  auto [state, echo] = resolve_state(s);
  watch.mark("parse");
  const auto rd = fockent::reduced_density(state, m);
  const auto compressed = fockent::compressed_hermitian(rd);
  watch.mark("reduce");

  json report = base_report("reduce", {{"state", echo}, {"m", m}, {"full", full}});
  fockent::Table table{{"form", "row", "col", "re", "im"}, {}};
  report["outputs"]["compressed"] = fockent::dump_compressed(rd, compressed);
  fockent::append_matrix_rows(table, "compressed", compressed.entries);
  if (full) {
    if (m > fockent::kMaxFullOrder) {
      throw ValidationError("--full needs m <= " + std::to_string(fockent::kMaxFullOrder));
    }
    const auto f = fockent::full_matrix(rd);
    report["outputs"]["full"] = fockent::dump_full(rd, f);
    if (const auto exact = fockent::exact_full_matrix(rd)) {
      json exact_entries = json::array();
      for (const auto& q : *exact) exact_entries.push_back(q.to_string());
      report["outputs"]["full"]["exact_entries"] = std::move(exact_entries);
    }
    fockent::append_matrix_rows(table, "full", f.entries);
    watch.mark("full");
  }
  emit(g, format, std::move(report), table, watch);
  return kOk;
}

int cmd_measures(const GlobalArgs& g, const StateArgs& s, unsigned m) {
  Stopwatch watch;
  const auto format = pick_format(g, "json");
  auto [state, echo] = resolve_state(s);
  watch.mark("parse");
  const auto spectrum = fockent::reduced_spectrum(state, m);
  watch.mark("spectrum");

  json report = base_report("measures", {{"state", echo}, {"m", m}});
  auto& out = report["outputs"];
  out["eigenvalues"] = spectrum.eigenvalues;
  out["K"] = spectrum.K;
  out["S"] = spectrum.S;
  fockent::Table table{{"quantity", "value"}, {}};
  for (std::size_t i = 0; i < spectrum.eigenvalues.size(); ++i)
    table.rows.push_back({"lambda_" + std::to_string(i), spectrum.eigenvalues[i]});
  table.rows.push_back({std::string("K"), spectrum.K});
  table.rows.push_back({std::string("S"), spectrum.S});
  if (state.photons() == 2) {
    const double c = fockent::concurrence(state);
    out["C"] = c;
    table.rows.push_back({std::string("C"), c});
  }
  if (state.is_basic_fock()) {
    const auto exact = fockent::analytic_fock_eigenvalues(state.fock_occupation(), m);
    json lambdas = json::array();
    for (const auto& e : exact) lambdas.push_back({{"k", e.k}, {"lambda", e.lambda.to_string()}, {"value", e.lambda.to_double()}});
    const auto k_exact = fockent::schmidt_K_exact(exact);
    out["exact"] = {{"eigenvalues", std::move(lambdas)},
                    {"K", k_exact.to_string()},
                    {"K_value", k_exact.to_double()}};
  }
  watch.mark("measures");
  emit(g, format, std::move(report), table, watch);
  return kOk;
}

int cmd_figure(const GlobalArgs& g, int index, fockent::FigureOptions options) {
  Stopwatch watch;
  const auto format = pick_format(g, "csv");
  options.jobs = g.jobs;
  const auto table = fockent::figure_table(index, options);
  watch.mark("compute");
  if (const auto problem = fockent::check_figure_schema(index, table); !problem.empty()) {
    throw NumericalError("figure " + std::to_string(index) + " failed its schema check: " + problem);
  }
  json inputs{{"figure", index}};
  if (options.n) inputs["n"] = *options.n;
  if (options.n_min) inputs["n_min"] = *options.n_min;
  if (options.n_max) inputs["n_max"] = *options.n_max;
  if (!options.m.empty()) inputs["m"] = options.m;
  if (options.n_h) inputs["n_h"] = *options.n_h;
  if (options.n_v) inputs["n_v"] = *options.n_v;
  if (!options.m0.empty()) inputs["m0"] = options.m0;
  if (index == 6) {
    inputs["sigma_min"] = options.sigma_min;
    inputs["sigma_max"] = options.sigma_max;
    inputs["sigma_steps"] = options.sigma_steps;
  }
  json report = base_report("figure", std::move(inputs));
  report["outputs"] = fockent::to_json(table);
  emit(g, format, std::move(report), table, watch);
  return kOk;
}

int cmd_sigma0(const GlobalArgs& g, unsigned n, double m0, unsigned m, double lo, double hi,
               unsigned points) {
  Stopwatch watch;
  const auto format = pick_format(g, "json");
  const auto min = fockent::find_min_K_sigma(n, m0, m, lo, hi, points);
  watch.mark("search");
  json report = base_report(
      "sigma0", {{"n", n}, {"m0", m0}, {"m", m}, {"lo", lo}, {"hi", hi}, {"points", points}});
  report["outputs"] = {{"sigma_star", min.sigma},
                       {"K_star", min.K},
                       {"gap", min.K - 1.0},
                       {"reached_one", min.reached_one},
                       {"threshold", fockent::kSigmaZeroThreshold}};
  fockent::Table table{{"sigma_star", "K_star", "gap", "reached_one"},
                       {{min.sigma, min.K, min.K - 1.0, min.reached_one}}};
  emit(g, format, std::move(report), table, watch);
  return kOk;
}

int cmd_verify(const GlobalArgs& g, fockent::VerifyOptions options) {
  Stopwatch watch;
  const auto format = pick_format(g, "json");
  options.jobs = g.jobs;
  const auto checks = fockent::run_verification(options);
  watch.mark("verify");
  bool all = true;
  for (const auto& c : checks) all = all && c.passed();

  const auto table = fockent::verification_table(checks);
  json report = base_report("verify", {{"max_n", options.max_n},
                                       {"states_per_n", options.states_per_n},
                                       {"seed", options.seed},
                                       {"inject_fault", options.inject_fault}});
  report["outputs"] = fockent::to_json(table);
  report["outputs"]["passed"] = all;
  emit(g, format, std::move(report), table, watch);
  for (const auto& c : checks)
    if (!c.passed()) {
      std::cerr << json{{"error", "verification"}, {"check", c.name}, {"n", c.n}, {"m", c.m},
                        {"max_error", c.max_error}, {"tolerance", c.tolerance}}
                       .dump()
                << '\n';
    }
  return all ? kOk : kVerifyFailed;
}

int fail(ExitCode code, const char* kind, const std::string& message) {
  std::cerr << json{{"error", kind}, {"code", static_cast<int>(code)}, {"message", message}}.dump()
            << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement of two-mode multiphoton polarization Fock states", "fockent"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  GlobalArgs global;
  app.add_option("-o,--output", global.output, "Write results to PATH instead of stdout");
  app.add_option("--format", global.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--jobs", global.jobs, "Worker threads for grid evaluations")
      ->check(CLI::Range(1U, 1024U));
  app.add_flag("--timings", global.timings, "Include per-stage wall-clock timings in JSON output");

  StateArgs state;
  unsigned m = 0;
  bool full = false;

  auto* reduce = app.add_subcommand("reduce", "Reduced density matrix over n - m photon variables");
  add_state_flags(reduce, state);
  reduce->add_option("-m", m, "Retained photon variables")->required();
  reduce->add_flag("--full", full, "Also emit the dense 2^m x 2^m matrix (m <= 12)");

  auto* measures = app.add_subcommand("measures", "Spectrum, Schmidt parameter K, entropy S, concurrence");
  add_state_flags(measures, state);
  measures->add_option("-m", m, "Retained photon variables")->required();

  int figure_index = 0;
  fockent::FigureOptions fig;
  unsigned fig_n = 0, fig_n_min = 0, fig_n_max = 0, fig_n_h = 0, fig_n_v = 0;
  auto* figure = app.add_subcommand("figure", "Data table behind figure 1..6");
  figure->add_option("index", figure_index, "Figure number")->required()->check(CLI::Range(1, 6));
  auto* opt_n = figure->add_option("--n", fig_n, "Total photon number");
  auto* opt_n_min = figure->add_option("--n-min", fig_n_min, "Smallest n (figures 1-3)");
  auto* opt_n_max = figure->add_option("--n-max", fig_n_max, "Largest n (figures 1-3)");
  figure->add_option("-m", fig.m, "Reduction orders (figure 5) or order (figure 6)");
  auto* opt_n_h = figure->add_option("--n-h", fig_n_h, "Horizontal photons (figure 5)");
  auto* opt_n_v = figure->add_option("--n-v", fig_n_v, "Vertical photons (figure 5)");
  figure->add_option("--m0", fig.m0, "Gaussian centres (figure 6)");
  figure->add_option("--sigma-min", fig.sigma_min, "Smallest sigma (figure 6)");
  figure->add_option("--sigma-max", fig.sigma_max, "Largest sigma (figure 6)");
  figure->add_option("--sigma-steps", fig.sigma_steps, "Sigma grid points (figure 6)");

  unsigned s0_n = 2, s0_m = 1, s0_points = 200;
  double s0_m0 = 1.0, s0_lo = 0.1, s0_hi = 5.0;
  auto* sigma0 = app.add_subcommand("sigma0", "Gaussian width minimizing K (entanglement disappearance)");
  sigma0->add_option("--n", s0_n, "Total photon number")->required();
  sigma0->add_option("--m0", s0_m0, "Gaussian centre")->required();
  sigma0->add_option("-m", s0_m, "Retained photon variables")->capture_default_str();
  sigma0->add_option("--lo", s0_lo, "Lower end of the sigma bracket")->capture_default_str();
  sigma0->add_option("--hi", s0_hi, "Upper end of the sigma bracket")->capture_default_str();
  sigma0->add_option("--points", s0_points, "Coarse scan points")->capture_default_str();

  fockent::VerifyOptions verify_options;
  auto* verify = app.add_subcommand("verify", "Production paths against brute-force oracles");
  verify->add_option("--max-n", verify_options.max_n, "Largest photon number checked (<= 12)")->capture_default_str();
  verify->add_option("--states", verify_options.states_per_n, "Random superpositions per n")->capture_default_str();
  verify->add_option("--seed", verify_options.seed, "Random seed")->capture_default_str();
  verify->add_flag("--inject-fault", verify_options.inject_fault,
                   "Perturb the production full matrix (negative control)");

  for (auto* sub : {reduce, measures, figure, sigma0, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(kInvalidInput, "validation", e.what());
  }

  try {
    if (*reduce) return cmd_reduce(global, state, m, full);
    if (*measures) return cmd_measures(global, state, m);
    if (*figure) {
      if (*opt_n) fig.n = fig_n;
      if (*opt_n_min) fig.n_min = fig_n_min;
      if (*opt_n_max) fig.n_max = fig_n_max;
      if (*opt_n_h) fig.n_h = fig_n_h;
      if (*opt_n_v) fig.n_v = fig_n_v;
      return cmd_figure(global, figure_index, fig);
    }
    if (*sigma0) return cmd_sigma0(global, s0_n, s0_m0, s0_m, s0_lo, s0_hi, s0_points);
    if (*verify) return cmd_verify(global, verify_options);
  } catch (const ValidationError& e) {
    return fail(kInvalidInput, "validation", e.what());
  } catch (const NumericalError& e) {
    return fail(kNumericalFailure, "numerical", e.what());
  }
  return kInvalidInput;
}
