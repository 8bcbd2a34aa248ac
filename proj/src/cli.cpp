#include "respoles/cli.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <fstream>
#include <ostream>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "respoles/errors.hpp"
#include "respoles/evolution.hpp"
#include "respoles/io.hpp"
#include "respoles/log.hpp"
#include "respoles/poles.hpp"
#include "respoles/stability.hpp"

namespace respoles {

namespace {

constexpr double kPi = 3.14159265358979323846;

double parse_number(const std::string& s, const std::string& flag) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ValidationError(flag + ": cannot parse number '" + s + "'");
  }
}

long long parse_int(const std::string& s, const std::string& flag) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ValidationError(flag + ": cannot parse integer '" + s + "'");
  }
}

// Plain numbers plus pi expressions: "pi", "-pi", "0.5pi", "pi/2", "3pi/4".
double parse_angle(const std::string& s, const std::string& flag) {
  const auto pos = s.find("pi");
  if (pos == std::string::npos) return parse_number(s, flag);
  const std::string head = s.substr(0, pos);
  double coef = 1.0;
  if (head == "-")
    coef = -1.0;
  else if (!head.empty() && head != "+")
    coef = parse_number(head, flag);
  const std::string tail = s.substr(pos + 2);
  double div = 1.0;
  if (!tail.empty()) {
    if (tail[0] != '/')
      throw ValidationError(flag + ": cannot parse '" + s + "'");
    div = parse_number(tail.substr(1), flag);
    if (div == 0.0) throw ValidationError(flag + ": division by zero");
  }
  return coef * kPi / div;
}

// Coupling values accept the critical-coupling shorthand "0.8kc" (resolved
// against critical_coupling(tau, omega0)) besides plain numbers.
double parse_coupling(const std::string& s, double tau, double omega0) {
  if (s.size() >= 2 && s.compare(s.size() - 2, 2, "kc") == 0) {
    const std::string head = s.substr(0, s.size() - 2);
    const double coef = head.empty() ? 1.0 : parse_number(head, "--k");
    return coef * critical_coupling(tau, omega0);
  }
  return parse_angle(s, "--k");
}

std::vector<double> split_fields(const std::string& s, std::size_t n,
                                 const std::string& flag) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto colon = s.find(':', start);
    if (colon == std::string::npos) {
      parts.push_back(s.substr(start));
      break;
    }
    parts.push_back(s.substr(start, colon - start));
    start = colon + 1;
  }
  if (parts.size() != n)
    throw ValidationError(flag + ": expected " + std::to_string(n) +
                          " colon-separated fields, got '" + s + "'");
  std::vector<double> vals;
  for (const std::string& part : parts) vals.push_back(parse_angle(part, flag));
  return vals;
}

ContourBox parse_region(const std::string& s) {
  const auto v = split_fields(s, 4, "--region");
  ContourBox box{v[0], v[1], v[2], v[3]};
  box.validate();
  return box;
}

std::pair<int, int> parse_branches(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos)
    throw ValidationError("--branches: expected lo:hi, got '" + s + "'");
  const int lo = static_cast<int>(parse_int(s.substr(0, colon), "--branches"));
  const int hi = static_cast<int>(parse_int(s.substr(colon + 1), "--branches"));
  return {lo, hi};
}

// "lo:hi:n" -> n evenly spaced values including both endpoints.
std::vector<double> parse_linspace(const std::string& s, const std::string& flag) {
  const auto first = s.find(':');
  const auto second = first == std::string::npos ? first : s.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos)
    throw ValidationError(flag + ": expected lo:hi:n, got '" + s + "'");
  const double lo = parse_angle(s.substr(0, first), flag);
  const double hi = parse_angle(s.substr(first + 1, second - first - 1), flag);
  const long long n = parse_int(s.substr(second + 1), flag);
  if (n < 1) throw ValidationError(flag + ": need at least one point");
  std::vector<double> grid;
  if (n == 1) {
    grid.push_back(lo);
    return grid;
  }
  for (long long i = 0; i < n; ++i)
    grid.push_back(lo + (hi - lo) * static_cast<double>(i) /
                            static_cast<double>(n - 1));
  return grid;
}

int parse_jobs(const std::string& s) {
  if (s.empty()) {
    const unsigned n = std::thread::hardware_concurrency();
    return n > 0 ? static_cast<int>(n) : 1;
  }
  const long long j = parse_int(s, "--jobs");
  if (j < 1) throw ValidationError("--jobs: must be at least 1");
  return static_cast<int>(j);
}

struct Opts {
  std::string k = "1";
  std::string tau = "2";
  std::string omega0 = "pi/2";
  std::string h = "50";
  std::string region;
  std::string branches = "-8:8";
  std::string nodes = "400";
  std::string dt_divisor = "64";
  std::string horizon;
  std::string out;
  std::string format = "csv";
  std::string jobs;
  std::string mode = "closed-form";
  std::string top = "8";
  std::string tau_range;
  std::string k_range;
  std::string config;
};

struct Binding {
  std::string key;
  std::string* slot;
  CLI::Option* opt;
};

// One subcommand's options plus the machinery to overlay --config values
// under explicitly passed flags.
struct SubOpts {
  CLI::App* sub = nullptr;
  Opts vals;
  std::vector<Binding> binds;

  CLI::Option* add(const std::string& flag, std::string Opts::*member,
                   const std::string& desc) {
    std::string* slot = &(vals.*member);
    CLI::Option* opt = sub->add_option(flag, *slot, desc);
    if (!slot->empty()) opt->capture_default_str();
    binds.push_back({flag.substr(2), slot, opt});
    return opt;
  }

  void merge_config() const {
    if (vals.config.empty()) return;
    std::ifstream file(vals.config);
    if (!file)
      throw ValidationError("--config: cannot open '" + vals.config + "'");
    Json doc;
    try {
      doc = Json::parse(file);
    } catch (const std::exception& e) {
      throw ValidationError("--config: invalid JSON: " + std::string(e.what()));
    }
    if (!doc.is_object())
      throw ValidationError("--config: top level must be an object");
    static const std::set<std::string> known = {
        "k",      "tau",  "omega0", "h",    "region", "branches",
        "nodes",  "dt-divisor", "T", "out", "format", "jobs",
        "mode",   "top",  "tau-range", "k-range"};
    for (const auto& [key, val] : doc.items()) {
      if (known.find(key) == known.end())
        throw ValidationError("--config: unknown key '" + key + "'");
      std::string text;
      if (val.is_string())
        text = val.get<std::string>();
      else if (val.is_number_integer())
        text = std::to_string(val.get<long long>());
      else if (val.is_number_float())
        text = format_float(val.get<double>());
      else
        throw ValidationError("--config: key '" + key +
                              "' must be a string or a number");
      bool used = false;
      for (const Binding& b : binds) {
        if (b.key != key) continue;
        used = true;
        if (b.opt->count() == 0) *b.slot = text;
      }
      if (!used)
        log_debug("config key '" + key + "' is not used by this command");
    }
  }
};

SystemParams resolve_params(const Opts& o) {
  const double tau = parse_number(o.tau, "--tau");
  const double omega0 = parse_angle(o.omega0, "--omega0");
  const double h = parse_number(o.h, "--h");
  const double k = parse_coupling(o.k, tau, omega0);
  SystemParams p{k, tau, omega0, h};
  p.validate();
  return p;
}

// Stream selection: --out writes a file, otherwise the command stream.
class OutputTarget {
 public:
  OutputTarget(const std::string& path, std::ostream& fallback)
      : stream_(&fallback) {
    if (path.empty()) return;
    file_.open(path, std::ios::binary);
    if (!file_) throw ValidationError("--out: cannot open '" + path + "'");
    stream_ = &file_;
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

void emit_json(std::ostream& os, const Json& doc) { os << doc.dump(2) << "\n"; }

std::string resolve_format(const Opts& o) {
  if (o.format != "csv" && o.format != "json")
    throw ValidationError("--format: expected csv or json, got '" + o.format +
                          "'");
  return o.format;
}

// The strongest poles reachable from Lambert seeds: Newton-refined, deduped,
// ordered by descending real part, truncated to `count`.
std::vector<Pole> strongest_poles(const SystemParams& p, int count) {
  if (p.k == 0.0 || count < 1) return {};
  std::vector<Pole> poles;
  for (Complex seed : lambert_roots(p, -(count + 2), count + 2)) {
    Pole pole = refine_newton(seed, p);
    bool duplicate = false;
    for (const Pole& kept : poles)
      if (std::abs(kept.lambda - pole.lambda) <= 1e-8) duplicate = true;
    if (!duplicate) poles.push_back(std::move(pole));
  }
  std::sort(poles.begin(), poles.end(), [](const Pole& a, const Pole& b) {
    if (a.lambda.real() != b.lambda.real())
      return a.lambda.real() > b.lambda.real();
    return a.lambda.imag() < b.lambda.imag();
  });
  if (poles.size() > static_cast<std::size_t>(count)) poles.resize(count);
  return poles;
}

int run_poles(const SubOpts& so, std::ostream& out) {
  const Opts& o = so.vals;
  const SystemParams p = resolve_params(o);
  if (o.region.empty())
    throw ValidationError("poles: --region re_min:re_max:im_min:im_max is required");
  FindPolesOptions opts;
  std::tie(opts.branch_lo, opts.branch_hi) = parse_branches(o.branches);
  opts.jobs = parse_jobs(o.jobs);
  const auto poles = find_poles(p, parse_region(o.region), opts);
  OutputTarget target(o.out, out);
  if (resolve_format(o) == "csv")
    write_poles_csv(target.stream(), poles, p);
  else
    emit_json(target.stream(), poles_json(poles, p));
  return 0;
}

int run_kc(const SubOpts& so, std::ostream& out) {
  const Opts& o = so.vals;
  const double tau = parse_number(o.tau, "--tau");
  const double omega0 = parse_angle(o.omega0, "--omega0");
  const double kc = critical_coupling(tau, omega0);
  OutputTarget target(o.out, out);
  if (resolve_format(o) == "csv") {
    target.stream() << format_float(kc) << "\n";
  } else {
    Json doc;
    doc["command"] = "kc";
    doc["tau"] = tau;
    doc["omega0"] = omega0;
    doc["k_c"] = kc;
    emit_json(target.stream(), doc);
  }
  return 0;
}

int run_stability_map(const SubOpts& so, std::ostream& out) {
  const Opts& o = so.vals;
  if (o.tau_range.empty() || o.k_range.empty())
    throw ValidationError(
        "stability-map: --tau-range lo:hi:n and --k-range lo:hi:n are required");
  const double omega0 = parse_angle(o.omega0, "--omega0");
  StabilityMode mode;
  if (o.mode == "closed-form")
    mode = StabilityMode::ClosedForm;
  else if (o.mode == "nishi")
    mode = StabilityMode::Nishi;
  else if (o.mode == "lambert")
    mode = StabilityMode::Lambert;
  else
    throw ValidationError(
        "--mode: expected closed-form, nishi, or lambert, got '" + o.mode + "'");
  const auto cells =
      stability_map(parse_linspace(o.tau_range, "--tau-range"),
                    parse_linspace(o.k_range, "--k-range"), omega0, mode,
                    parse_jobs(o.jobs));
  OutputTarget target(o.out, out);
  if (resolve_format(o) == "csv")
    write_stability_csv(target.stream(), cells, omega0, o.mode);
  else
    emit_json(target.stream(), stability_json(cells, omega0, o.mode));
  return 0;
}

struct SimGrid {
  QuadratureRule rule;
  int divisor = 0;
  double dt = 0.0;
  double horizon = 0.0;
};

SimGrid resolve_sim_grid(const Opts& o, const SystemParams& p, bool with_rule) {
  SimGrid grid;
  const long long m = parse_int(o.dt_divisor, "--dt-divisor");
  if (m < 1) throw ValidationError("--dt-divisor: must be at least 1");
  grid.divisor = static_cast<int>(m);
  grid.dt = p.tau / static_cast<double>(m);
  if (with_rule) {
    const long long n = parse_int(o.nodes, "--nodes");
    if (n < 1) throw ValidationError("--nodes: must be at least 1");
    grid.rule = hermite_rule(static_cast<int>(n), p);
  }
  if (!o.horizon.empty()) {
    grid.horizon = parse_number(o.horizon, "--T");
  } else if (with_rule) {
    grid.horizon = std::min(40.0, 0.8 * recurrence_time(grid.rule));
  } else {
    grid.horizon = 40.0;
  }
  return grid;
}

int run_simulate(const SubOpts& so, std::ostream& out) {
  const Opts& o = so.vals;
  const SystemParams p = resolve_params(o);
  const SimGrid grid = resolve_sim_grid(o, p, true);
  const auto series =
      simulate_dde(p, grid.rule, InitialData::uniform(grid.divisor + 1),
                   grid.dt, grid.horizon, parse_jobs(o.jobs));
  OutputTarget target(o.out, out);
  if (resolve_format(o) == "csv") {
    write_series_csv(target.stream(), series, p, "simulate");
  } else {
    Json doc;
    doc["command"] = "simulate";
    doc.update(series_json(series, p));
    emit_json(target.stream(), doc);
  }
  return 0;
}

int run_expansion(const SubOpts& so, std::ostream& out) {
  const Opts& o = so.vals;
  const SystemParams p = resolve_params(o);
  const SimGrid grid = resolve_sim_grid(o, p, false);
  const long long top = parse_int(o.top, "--top");
  if (top < 1) throw ValidationError("--top: must be at least 1");
  const auto poles = strongest_poles(p, static_cast<int>(top));
  const auto n_samples =
      static_cast<std::size_t>(std::floor(grid.horizon / grid.dt + 1e-9)) + 1;
  const auto series = expansion_reconstruct(
      poles, InitialData::uniform(grid.divisor + 1), p, 0.0, grid.dt,
      n_samples, parse_jobs(o.jobs));
  OutputTarget target(o.out, out);
  if (resolve_format(o) == "csv") {
    write_series_csv(target.stream(), series, p, "expansion");
  } else {
    Json doc;
    doc["command"] = "expansion";
    doc.update(series_json(series, p));
    emit_json(target.stream(), doc);
  }
  return 0;
}

int run_compare(const SubOpts& so, std::ostream& out) {
  const Opts& o = so.vals;
  const SystemParams p = resolve_params(o);
  if (p.k == 0.0)
    throw ValidationError("compare: requires a nonzero coupling");
  const SimGrid grid = resolve_sim_grid(o, p, true);
  const long long top = parse_int(o.top, "--top");
  if (top < 1) throw ValidationError("--top: must be at least 1");
  const int jobs = parse_jobs(o.jobs);
  const InitialData init = InitialData::uniform(grid.divisor + 1);
  const auto sim = simulate_dde(p, grid.rule, init, grid.dt, grid.horizon, jobs);

  const auto poles = strongest_poles(p, static_cast<int>(top));
  const double t_lo = 2.0 * p.tau;
  const auto i0 = static_cast<std::size_t>(std::llround(t_lo / grid.dt));
  if (i0 >= sim.size())
    throw ValidationError("compare: horizon leaves no samples beyond 2 tau");
  const auto rec = expansion_reconstruct(poles, init, p, sim.time_at(i0),
                                         grid.dt, sim.size() - i0, jobs);

  TimeSeries sim_window;
  sim_window.t0 = sim.time_at(i0);
  sim_window.dt = grid.dt;
  sim_window.values.assign(sim.values.begin() + static_cast<std::ptrdiff_t>(i0),
                           sim.values.end());

  const auto [fitted_rate, r2] = fit_decay_rate(sim, t_lo, grid.horizon);
  const double leading_re = poles.front().lambda.real();
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < rec.size(); ++i) {
    num += std::norm(rec.values[i] - sim_window.values[i]);
    den += std::norm(sim_window.values[i]);
  }
  Json summary;
  summary["fitted_rate"] = fitted_rate;
  summary["leading_pole_re"] = leading_re;
  summary["relative_gap"] =
      std::abs(fitted_rate - leading_re) / std::abs(leading_re);
  summary["l2_mismatch"] = std::sqrt(num / den);
  log_info("compare fit r2 = " + format_float(r2));

  if (resolve_format(o) == "csv") {
    // The joined table goes to the file; the summary goes to the command
    // stream so it stays machine-readable on its own.
    if (o.out.empty())
      throw ValidationError("compare: --format csv requires --out PATH");
    OutputTarget target(o.out, out);
    write_compare_csv(target.stream(), sim_window, rec, p);
    emit_json(out, summary);
  } else {
    Json doc;
    doc["command"] = "compare";
    doc["params"] = params_json(p);
    doc["summary"] = summary;
    doc["t0"] = sim_window.t0;
    doc["dt"] = sim_window.dt;
    doc["re_sim"] = Json::array();
    doc["im_sim"] = Json::array();
    doc["re_rec"] = Json::array();
    doc["im_rec"] = Json::array();
    for (std::size_t i = 0; i < sim_window.size(); ++i) {
      doc["re_sim"].push_back(sim_window.values[i].real());
      doc["im_sim"].push_back(sim_window.values[i].imag());
      doc["re_rec"].push_back(rec.values[i].real());
      doc["im_rec"].push_back(rec.values[i].imag());
    }
    OutputTarget target(o.out, out);
    emit_json(target.stream(), doc);
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  try {
    CLI::App app{
        "respoles: resonance poles, stability boundaries, and delayed "
        "order-parameter evolution for the delay-coupled phase model"};
    app.require_subcommand(1);
    // The short -h would shadow the --h model flag, so help is long-only.
    app.set_help_flag("--help", "Print this help message and exit");

    SubOpts poles_opts, kc_opts, map_opts, sim_opts, cmp_opts, exp_opts;

    auto add_io = [](SubOpts& so) {
      so.add("--out", &Opts::out, "Write the primary output to this file");
      so.add("--format", &Opts::format, "Output format: csv or json");
      so.add("--config", &Opts::config,
             "JSON file mirroring the flags; explicit flags override it");
    };
    auto add_params = [](SubOpts& so) {
      so.add("--k", &Opts::k,
             "Coupling strength; accepts the shorthand '0.8kc'");
      so.add("--tau", &Opts::tau, "Delay time");
      so.add("--omega0", &Opts::omega0,
             "Center frequency; accepts pi expressions like pi/2");
      so.add("--h", &Opts::h, "Inverse frequency-spread parameter");
    };

    poles_opts.sub = app.add_subcommand(
        "poles", "Find resonance poles and residues inside a region");
    add_params(poles_opts);
    poles_opts.add("--region", &Opts::region,
                   "Search box re_min:re_max:im_min:im_max");
    poles_opts.add("--branches", &Opts::branches, "Lambert seed branches lo:hi");
    poles_opts.add("--jobs", &Opts::jobs, "Worker count (default: processors)");
    add_io(poles_opts);

    kc_opts.sub =
        app.add_subcommand("kc", "Print the critical coupling k_c(tau, omega0)");
    kc_opts.add("--tau", &Opts::tau, "Delay time");
    kc_opts.add("--omega0", &Opts::omega0,
                "Center frequency; accepts pi expressions like pi/2");
    add_io(kc_opts);

    map_opts.sub = app.add_subcommand(
        "stability-map", "Classify incoherence stability over a (tau, k) grid");
    map_opts.add("--tau-range", &Opts::tau_range, "Delay grid lo:hi:n");
    map_opts.add("--k-range", &Opts::k_range, "Coupling grid lo:hi:n");
    map_opts.add("--omega0", &Opts::omega0,
                 "Center frequency; accepts pi expressions like pi/2");
    map_opts.add("--mode", &Opts::mode,
                 "Decision rule: closed-form, nishi, or lambert");
    map_opts.add("--jobs", &Opts::jobs, "Worker count (default: processors)");
    add_io(map_opts);

    sim_opts.sub = app.add_subcommand(
        "simulate", "Integrate the delayed dynamics and emit r(t)");
    add_params(sim_opts);
    sim_opts.add("--nodes", &Opts::nodes, "Frequency quadrature nodes");
    sim_opts.add("--dt-divisor", &Opts::dt_divisor,
                 "Steps per delay interval (dt = tau/m)");
    sim_opts.add("--T", &Opts::horizon,
                 "Horizon (default: min(40, 0.8 recurrence time))");
    sim_opts.add("--jobs", &Opts::jobs, "Worker count (default: processors)");
    add_io(sim_opts);

    cmp_opts.sub = app.add_subcommand(
        "compare",
        "Simulate, reconstruct from the strongest poles, and report the gap");
    add_params(cmp_opts);
    cmp_opts.add("--nodes", &Opts::nodes, "Frequency quadrature nodes");
    cmp_opts.add("--dt-divisor", &Opts::dt_divisor,
                 "Steps per delay interval (dt = tau/m)");
    cmp_opts.add("--T", &Opts::horizon,
                 "Horizon (default: min(40, 0.8 recurrence time))");
    cmp_opts.add("--top", &Opts::top, "Number of strongest poles to keep");
    cmp_opts.add("--jobs", &Opts::jobs, "Worker count (default: processors)");
    add_io(cmp_opts);

    exp_opts.sub = app.add_subcommand(
        "expansion", "Evaluate the truncated pole expansion of r(t)");
    add_params(exp_opts);
    exp_opts.add("--dt-divisor", &Opts::dt_divisor,
                 "Grid steps per delay interval (dt = tau/m)");
    exp_opts.add("--T", &Opts::horizon, "Horizon (default: 40)");
    exp_opts.add("--top", &Opts::top, "Number of strongest poles to keep");
    exp_opts.add("--jobs", &Opts::jobs, "Worker count (default: processors)");
    add_io(exp_opts);

    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
      return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
      return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
      app.exit(e, out, err);
      return 2;
    }

    for (SubOpts* so : {&poles_opts, &kc_opts, &map_opts, &sim_opts, &cmp_opts,
                        &exp_opts}) {
      if (so->sub->parsed()) {
        so->merge_config();
        if (so->sub == poles_opts.sub) return run_poles(*so, out);
        if (so->sub == kc_opts.sub) return run_kc(*so, out);
        if (so->sub == map_opts.sub) return run_stability_map(*so, out);
        if (so->sub == sim_opts.sub) return run_simulate(*so, out);
        if (so->sub == cmp_opts.sub) return run_compare(*so, out);
        return run_expansion(*so, out);
      }
    }
    err << "ValidationError: no command given\n";
    return 2;
  } catch (const ValidationError& e) {
    err << e.kind() << ": " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << e.kind() << ": " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "InternalError: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace respoles
