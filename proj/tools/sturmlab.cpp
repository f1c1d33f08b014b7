// sturmlab: experiments on Sturmian ground states from the command line.
//
// Every subcommand reads a JSON config (--config) and flags; a flag wins over
// the config entry it maps to. Records go to the output as CSV (default) or
// JSON, and a JSON summary goes to --summary (stderr when absent).

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sturmlab/errors.hpp"
#include "sturmlab/ergodicity/hitting.hpp"
#include "sturmlab/forbidden/model.hpp"
#include "sturmlab/hamiltonian/density.hpp"
#include "sturmlab/hamiltonian/energy.hpp"
#include "sturmlab/io/format.hpp"
#include "sturmlab/stability/stability.hpp"
#include "sturmlab/torus/continued_fraction.hpp"
#include "sturmlab/util/parallel.hpp"
#include "sturmlab/words/rotation.hpp"
#include "sturmlab/words/stats.hpp"

namespace {

using namespace sturmlab;
using nlohmann::json;
using torus::Quad;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::set<std::string> kTopLevel = {
    "phi",        "x0",        "convention",  "alpha",       "lambda",     "pattern_set",
    "pattern_max_len", "perturbation", "ranges", "tolerances", "output",   "threads",
    "n",          "d",         "k_scan",      "verify",      "word_n",     "word",
    "stride_k",   "m_max",     "horizon",     "mode",        "proof_frame", "samples_per_k",
    "frequency_floor", "depth", "arc",        "m"};

class Config {
 public:
  void load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    try {
      in >> doc_;
    } catch (const json::exception& e) {
      throw ConfigError("config " + path + ": " + e.what());
    }
    if (!doc_.is_object()) throw ConfigError("config must be a JSON object");
    for (const auto& [key, _] : doc_.items()) {
      if (!kTopLevel.count(key)) throw ConfigError("unknown config key \"" + key + "\"");
    }
  }

  void set(const std::string& pointer, json value) { doc_[json::json_pointer(pointer)] = std::move(value); }

  bool has(const std::string& pointer) const { return doc_.contains(json::json_pointer(pointer)); }

  const json& raw(const std::string& pointer) const { return doc_.at(json::json_pointer(pointer)); }

  template <class T>
  T get(const std::string& pointer, const T& fallback) const {
    if (!has(pointer)) return fallback;
    return get<T>(pointer);
  }

  template <class T>
  T get(const std::string& pointer) const {
    if (!has(pointer)) throw ConfigError("missing required setting " + pointer);
    try {
      return raw(pointer).get<T>();
    } catch (const json::exception& e) {
      throw ConfigError("setting " + pointer + " has the wrong type: " + raw(pointer).dump());
    }
  }

  Quad quad(const std::string& pointer) const {
    if (!has(pointer)) throw ConfigError("missing required setting " + pointer);
    try {
      return io::quad_from_json(raw(pointer));
    } catch (const HypothesisError&) {
      throw;
    } catch (const std::exception& e) {
      throw ConfigError("setting " + pointer + ": " + e.what());
    }
  }

  Quad quad(const std::string& pointer, const Quad& fallback) const {
    return has(pointer) ? quad(pointer) : fallback;
  }

  std::pair<std::int64_t, std::int64_t> range(const std::string& pointer,
                                               std::pair<std::int64_t, std::int64_t> fallback) const {
    if (!has(pointer)) return fallback;
    const auto v = get<std::vector<std::int64_t>>(pointer);
    if (v.size() != 2 || v[0] > v[1]) throw ConfigError("setting " + pointer + " must be [lo, hi] with lo <= hi");
    return {v[0], v[1]};
  }

 private:
  json doc_ = json::object();
};

struct Common {
  std::string config_path;
  std::string summary_path;
  Config cfg;
  std::vector<std::function<void(Config&)>> overrides;
};

// Registers a flag whose value is written into the config at `pointer` once
// the file (if any) has been read.
template <class T>
CLI::Option* flag(CLI::App* app, Common& c, const std::string& name, const std::string& pointer,
                  const std::string& help) {
  auto store = std::make_shared<T>();
  auto* opt = app->add_option(name, *store, help);
  c.overrides.push_back([store, opt, pointer](Config& cfg) {
    if (opt->count() > 0) cfg.set(pointer, json(*store));
  });
  return opt;
}

CLI::Option* switch_flag(CLI::App* app, Common& c, const std::string& name, const std::string& pointer,
                         const std::string& help) {
  auto* opt = app->add_flag(name, help);
  c.overrides.push_back([opt, pointer](Config& cfg) {
    if (opt->count() > 0) cfg.set(pointer, true);
  });
  return opt;
}

void finish_config(Common& c) {
  if (!c.config_path.empty()) c.cfg.load(c.config_path);
  for (auto& f : c.overrides) f(c.cfg);
}

unsigned threads(const Config& cfg) {
  if (cfg.has("/threads")) {
    const auto t = cfg.get<std::int64_t>("/threads");
    if (t < 1) throw ConfigError("threads must be >= 1");
    return static_cast<unsigned>(t);
  }
  return util::default_threads();
}

enum class Format { csv, json };

Format output_format(const Config& cfg, Format fallback = Format::csv) {
  if (!cfg.has("/output/format")) return fallback;
  const auto f = cfg.get<std::string>("/output/format");
  if (f == "csv") return Format::csv;
  if (f == "json") return Format::json;
  throw ConfigError("output.format must be csv or json, got \"" + f + "\"");
}

// Writes `body` to output.path or stdout.
void emit(const Config& cfg, const std::string& body) {
  const auto path = cfg.get<std::string>("/output/path", "-");
  if (path == "-" || path.empty()) {
    std::cout << body;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path);
  out << body;
}

void emit_summary(const Common& c, const json& summary) {
  if (c.summary_path.empty()) {
    std::cerr << summary.dump(2) << '\n';
    return;
  }
  std::ofstream out(c.summary_path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + c.summary_path);
  out << summary.dump(2) << '\n';
}

// CSV records, or one JSON document holding the summary and the records.
void emit_records(const Common& c, const std::string& command, const std::string& csv,
                  const json& records, const json& summary) {
  if (output_format(c.cfg) == Format::json) {
    emit(c.cfg, json{{"command", command}, {"summary", summary}, {"records", records}}.dump(2) + "\n");
  } else {
    emit(c.cfg, csv);
  }
  emit_summary(c, summary);
}

words::Convention convention(const Config& cfg) {
  const auto s = cfg.get<std::string>("/convention", "left_closed");
  if (s == "left_closed" || s == "left") return words::Convention::left_closed;
  if (s == "right_closed" || s == "right") return words::Convention::right_closed;
  throw ConfigError("convention must be left_closed or right_closed, got \"" + s + "\"");
}

Quad phi_of(const Config& cfg) {
  const Quad phi = cfg.quad("/phi");
  if (phi.is_rational()) throw HypothesisError("phi must be irrational");
  return phi;
}

Quad x0_of(const Config& cfg, const Quad& phi) {
  Quad x0 = cfg.quad("/x0", Quad::integer(0, phi.d()));
  if (x0.is_rational()) x0 = Quad::rational(x0.p(), x0.r(), phi.d());
  return x0;
}

void require_alpha(double alpha) {
  if (!(alpha > 1)) throw HypothesisError("alpha must exceed 1 (pair energies must be summable)");
}

forbidden::ForbiddenModel model_of(const Config& cfg, const Quad& phi) {
  if (cfg.has("/m")) return forbidden::ForbiddenModel(phi, cfg.get<std::int64_t>("/m"));
  return forbidden::ForbiddenModel::from_scan(phi, cfg.get<std::int64_t>("/ranges/scan_N", 100000));
}

std::vector<words::FiniteWord> patterns_of(const Config& cfg) {
  std::vector<words::FiniteWord> out;
  if (cfg.has("/pattern_set")) {
    for (const auto& s : cfg.get<std::vector<std::string>>("/pattern_set")) {
      try {
        out.push_back(words::FiniteWord::from_string(s));
      } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("pattern_set: ") + e.what());
      }
      if (out.back().empty()) throw ConfigError("pattern_set: empty pattern");
    }
    return out;
  }
  const auto len = cfg.get<std::int64_t>("/pattern_max_len", 3);
  if (len < 0 || len > 16) throw ConfigError("pattern_max_len must lie in [0, 16]");
  return words::all_words_up_to(static_cast<std::size_t>(len));
}

// ---------------------------------------------------------------------------

int cmd_generate(Common& c) {
  const Quad phi = phi_of(c.cfg);
  const Quad x0 = x0_of(c.cfg, phi);
  const auto n = c.cfg.get<std::int64_t>("/n");
  if (n < 0) throw ConfigError("n must be >= 0");
  const words::SturmianWord X(phi, x0, convention(c.cfg));
  if (n == 0) return 0;
  emit(c.cfg, X.window(0, n - 1).to_string() + "\n");
  return 0;
}

int cmd_forbidden(Common& c) {
  const Quad phi = phi_of(c.cfg);
  const auto k_max = c.cfg.get<std::int64_t>("/ranges/k_max");
  if (k_max < 1) throw ConfigError("ranges.k_max must be >= 1");
  const auto M = model_of(c.cfg, phi);
  const auto F = forbidden::forbidden_set(M, k_max);

  json summary = {{"phi", io::quad_to_json(phi)}, {"k_max", k_max}, {"m", M.zero_run_m()},
                  {"forbidden", F}};
  bool violated = false;
  if (c.cfg.get<bool>("/verify", false)) {
    const auto rep = forbidden::verify_characterization(M, c.cfg.get<std::int64_t>("/word_n", 1000000), k_max);
    json v = json::array();
    for (const auto& x : rep.violations)
      v.push_back({{"kind", x.kind}, {"position", x.position}, {"distance", x.distance}});
    summary["verification"] = {{"violations", v},
                               {"violation_count", rep.violation_count},
                               {"unrealized", rep.unrealized},
                               {"m", rep.m},
                               {"word_n", rep.word_N}};
    violated = !rep.ok();
  }

  std::ostringstream csv;
  io::CsvWriter w(csv, {"k"});
  for (auto k : F) {
    w.cell(k);
    w.end_row();
  }
  emit_records(c, "forbidden", csv.str(), F, summary);
  if (violated) {
    std::cerr << "sturmlab: the Sturmian window contains a forbidden pattern\n";
    return 4;
  }
  return 0;
}

int cmd_ergodicity(Common& c) {
  const Quad phi = phi_of(c.cfg);
  const Quad x0 = x0_of(c.cfg, phi);
  const auto [k_lo, k_hi] = c.cfg.range("/ranges/k_range", {1, 2000});
  if (k_lo < 1) throw ConfigError("ranges.k_range must start at 1 or later");
  ergodicity::Arc P = ergodicity::forbidden_arc(phi);
  if (c.cfg.has("/arc")) {
    const auto& a = c.cfg.raw("/arc");
    if (!a.is_array() || a.size() != 2) throw ConfigError("arc must be [lo, hi] (closed)");
    P = ergodicity::Arc::closed(io::quad_from_json(a[0]), io::quad_from_json(a[1]));
  }
  const std::int64_t d = c.cfg.has("/d") ? c.cfg.get<std::int64_t>("/d")
                                         : ergodicity::hitting_d(phi, c.cfg.get<std::int64_t>("/k_scan", 100000));
  if (d < 1) throw ConfigError("d must be >= 1");
  ergodicity::HittingOptions opts;
  opts.proof_frame = c.cfg.get<bool>("/proof_frame", false);
  const auto scan = ergodicity::hitting_scan(phi, x0, P, k_lo, k_hi, d, opts, threads(c.cfg));

  std::ostringstream csv;
  io::write_hitting_csv(csv, scan.results);
  json records = json::array();
  for (const auto& r : scan.results)
    records.push_back({{"k", r.k}, {"n_bracket", r.n_bracket}, {"case_id", r.case_id}, {"hits", r.hits},
                       {"bound", io::real(r.bound)}, {"pass", r.pass}});
  json summary = io::summary_json(scan);
  summary["arc"] = P.to_string();
  emit_records(c, "ergodicity", csv.str(), records, summary);
  return 0;
}

int cmd_density(Common& c) {
  const Quad phi = phi_of(c.cfg);
  const double alpha = c.cfg.get<double>("/alpha");
  require_alpha(alpha);
  auto H = hamiltonian::HamiltonianSpec::make(alpha, model_of(c.cfg, phi));
  if (c.cfg.has("/perturbation")) {
    std::vector<hamiltonian::PatternEntry> entries;
    for (const auto& e : c.cfg.raw("/perturbation")) {
      try {
        entries.push_back({words::FiniteWord::from_string(e.at("pattern").get<std::string>()),
                           e.at("delta").get<double>()});
      } catch (const std::exception& ex) {
        throw ConfigError(std::string("perturbation entries are {pattern, delta}: ") + ex.what());
      }
    }
    try {
      H = hamiltonian::perturb(H, hamiltonian::PatternTable(entries, c.cfg.get<double>("/lambda")));
    } catch (const HypothesisError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }

  const auto mode = c.cfg.get<std::string>("/mode", "stream");
  hamiltonian::DensityEstimate est;
  if (c.cfg.has("/word")) {
    words::PeriodicWord y(words::FiniteWord::from_string(c.cfg.get<std::string>("/word")),
                          c.cfg.get<std::int64_t>("/x0", 0));
    if (mode == "exact") {
      est = hamiltonian::density_periodic_exact(H, y, c.cfg.get<double>("/tolerances/density_tol", 1e-9));
    } else if (mode == "stream") {
      est = hamiltonian::density_estimate_stream(H, y, c.cfg.get<std::int64_t>("/stride_k", y.k()),
                                                 c.cfg.get<std::int64_t>("/m_max", 64),
                                                 {c.cfg.get<std::int64_t>("/horizon", 0)});
    } else {
      throw ConfigError("mode must be stream or exact");
    }
  } else {
    if (mode != "stream") throw ConfigError("mode exact needs a periodic word");
    const words::SturmianWord X(phi, x0_of(c.cfg, phi), convention(c.cfg));
    est = hamiltonian::density_estimate_stream(H, X, c.cfg.get<std::int64_t>("/stride_k", 1),
                                               c.cfg.get<std::int64_t>("/m_max", 1000),
                                               {c.cfg.get<std::int64_t>("/horizon", 0)});
  }

  std::ostringstream csv;
  io::write_density_csv(csv, est);
  json records = json::array();
  for (std::size_t i = 0; i < est.window_sizes.size(); ++i)
    records.push_back({{"window_size", est.window_sizes[i]},
                       {"energy", io::real(est.per_window_energy[i])},
                       {"density", io::real(est.per_window[i])}});
  json summary = io::summary_json(est);
  summary["alpha"] = alpha;
  summary["m"] = H.m();
  emit_records(c, "density", csv.str(), records, summary);
  return 0;
}

json stability_records_json(const std::vector<stability::StabilityRecord>& rows) {
  json out = json::array();
  for (const auto& r : rows)
    out.push_back({{"kind", r.kind},
                   {"parameter", r.parameter},
                   {"base_density", io::real(r.base_density)},
                   {"perturbation_gain", io::real(r.perturbation_gain)},
                   {"margin", io::real(r.margin)},
                   {"pass", r.pass},
                   {"tail_bound", io::real(r.tail_bound)},
                   {"min_density", io::real(r.min_density)}});
  return out;
}

void attach_fit_check(json& summary, const Config& cfg) {
  if (!cfg.has("/tolerances/fit_tol") || summary["fit"].is_null()) return;
  const double tol = cfg.get<double>("/tolerances/fit_tol");
  summary["fit_within_tolerance"] = std::abs(summary["fit"]["deviation"].get<double>()) <= tol;
}

int cmd_stability_periodic(Common& c) {
  const Quad phi = phi_of(c.cfg);
  const double alpha = c.cfg.get<double>("/alpha");
  require_alpha(alpha);
  const double lambda = c.cfg.get<double>("/lambda", 1e-3);
  const auto [k_lo, k_hi] = c.cfg.range("/ranges/k_range", {2, 500});
  stability::PeriodicScanOptions opts;
  opts.samples_per_k = c.cfg.get<std::int64_t>("/samples_per_k", 0);
  opts.frequency_floor = c.cfg.get<double>("/frequency_floor", -1);
  opts.density_rel_tol = c.cfg.get<double>("/tolerances/density_tol", opts.density_rel_tol);
  opts.threads = threads(c.cfg);
  const auto scan = stability::stability_scan_periodic(phi, alpha, lambda, patterns_of(c.cfg), k_lo, k_hi, opts);

  std::ostringstream csv;
  io::write_stability_csv(csv, scan.records);
  json summary = io::summary_json(scan);
  attach_fit_check(summary, c.cfg);
  emit_records(c, "stability-periodic", csv.str(), stability_records_json(scan.records), summary);
  return 0;
}

int cmd_stability_family(Common& c) {
  const Quad phi = phi_of(c.cfg);
  const double alpha = c.cfg.get<double>("/alpha");
  require_alpha(alpha);
  const double lambda = c.cfg.get<double>("/lambda", 1e-3);
  const auto [n_lo, n_hi] = c.cfg.range("/ranges/n_range", {2, 500});
  stability::FamilyScanOptions opts;
  opts.horizon = c.cfg.get<std::int64_t>("/horizon", opts.horizon);
  opts.rel_change = c.cfg.get<double>("/tolerances/density_tol", opts.rel_change);
  opts.threads = threads(c.cfg);
  const auto scan = stability::stability_scan_family(phi, alpha, lambda, stability::family_grid(n_lo, n_hi), opts);

  std::ostringstream csv;
  io::write_stability_csv(csv, scan.records);
  json summary = io::summary_json(scan);
  attach_fit_check(summary, c.cfg);
  emit_records(c, "stability-family", csv.str(), stability_records_json(scan.records), summary);
  return 0;
}

int cmd_cf(Common& c) {
  const Quad x = c.cfg.quad("/phi");
  if (x.is_rational()) throw HypothesisError("phi must be irrational");
  const auto depth = c.cfg.get<std::int64_t>("/depth", 12);
  if (depth < 0) throw ConfigError("depth must be >= 0");
  const auto cf = torus::cf_expand(x, static_cast<std::size_t>(depth) + 1);
  const auto conv = torus::convergents(cf, static_cast<std::size_t>(depth));

  std::ostringstream csv;
  io::CsvWriter w(csv, {"i", "a", "p", "q"});
  json records = json::array();
  for (std::size_t i = 0; i < conv.size(); ++i) {
    w.cell(std::int64_t(i)).cell(cf.quotient(i).str()).cell(conv[i].first.str()).cell(conv[i].second.str());
    w.end_row();
    records.push_back({{"i", i}, {"a", cf.quotient(i).str()}, {"p", conv[i].first.str()},
                       {"q", conv[i].second.str()}});
  }
  json summary = {{"x", io::quad_to_json(x)},
                  {"value", x.to_double()},
                  {"expansion", cf.to_string()},
                  {"bounded_quotients", cf.bounded_quotients()}};
  if (cf.bounded_quotients()) summary["max_quotient"] = cf.max_quotient().str();
  emit_records(c, "cf", csv.str(), records, summary);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sturmian ground states: words, forbidden distances, hitting bounds, energy densities and stability scans"};
  app.require_subcommand(1);
  Common c;
  std::map<CLI::App*, std::function<int(Common&)>> handlers;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", c.config_path, "JSON config; flags override its entries");
    sub->add_option("--summary", c.summary_path, "write the JSON summary here instead of stderr");
    flag<std::string>(sub, c, "--output", "/output/path", "output file ('-' for stdout)");
    flag<std::string>(sub, c, "--format", "/output/format", "csv or json");
    flag<std::string>(sub, c, "--phi", "/phi", "rotation number (p,q,r,d) = (p + q sqrt d) / r");
  };

  {
    auto* s = app.add_subcommand("generate", "print N symbols of the Sturmian word");
    common(s);
    flag<std::int64_t>(s, c, "-n,--n", "/n", "number of symbols");
    flag<std::string>(s, c, "--x0", "/x0", "starting point (p,q,r,d)");
    flag<std::string>(s, c, "--convention", "/convention", "left_closed or right_closed");
    handlers[s] = cmd_generate;
  }
  {
    auto* s = app.add_subcommand("forbidden", "forbidden distances up to k_max and the zero-run bound");
    common(s);
    flag<std::int64_t>(s, c, "--k-max", "/ranges/k_max", "largest distance");
    flag<std::int64_t>(s, c, "--scan-n", "/ranges/scan_N", "symbols scanned for the zero-run bound");
    flag<std::int64_t>(s, c, "--m", "/m", "zero-run bound (skips the scan)");
    switch_flag(s, c, "--verify", "/verify", "check the characterization on a long window");
    flag<std::int64_t>(s, c, "--word-n", "/word_n", "window length for --verify");
    handlers[s] = cmd_forbidden;
  }
  {
    auto* s = app.add_subcommand("ergodicity", "hits of the accelerated orbit in an arc");
    common(s);
    flag<std::string>(s, c, "--x0", "/x0", "starting point (p,q,r,d)");
    flag<std::vector<std::int64_t>>(s, c, "--k-range", "/ranges/k_range", "lo,hi")->delimiter(',');
    flag<std::int64_t>(s, c, "--d", "/d", "orbit length factor (default ceil(1/c) from a scan)");
    flag<std::int64_t>(s, c, "--k-scan", "/k_scan", "scan length for d");
    switch_flag(s, c, "--proof-frame", "/proof_frame", "replay every orbit in the normalized frame");
    flag<unsigned>(s, c, "--threads", "/threads", "worker threads (fallback STURMLAB_THREADS)");
    handlers[s] = cmd_ergodicity;
  }
  {
    auto* s = app.add_subcommand("density", "energy density of a Sturmian or periodic word");
    common(s);
    flag<double>(s, c, "--alpha", "/alpha", "pair decay exponent (> 1)");
    flag<double>(s, c, "--lambda", "/lambda", "perturbation bound");
    flag<std::string>(s, c, "--word", "/word", "period of a periodic word (0/1 string)");
    flag<std::string>(s, c, "--x0", "/x0", "Sturmian starting point, or the phase of a periodic word");
    flag<std::string>(s, c, "--mode", "/mode", "stream or exact (periodic words)");
    flag<std::int64_t>(s, c, "--stride-k", "/stride_k", "window stride");
    flag<std::int64_t>(s, c, "--m-max", "/m_max", "number of windows");
    flag<std::int64_t>(s, c, "--horizon", "/horizon", "pair-distance truncation (0: none)");
    flag<double>(s, c, "--tol", "/tolerances/density_tol", "tail tolerance for exact mode");
    flag<std::int64_t>(s, c, "--m", "/m", "zero-run bound (skips the scan)");
    handlers[s] = cmd_density;
  }
  {
    auto* s = app.add_subcommand("stability-periodic", "periodically Sturmian competitors against a perturbation");
    common(s);
    flag<double>(s, c, "--alpha", "/alpha", "pair decay exponent (> 1)");
    flag<double>(s, c, "--lambda", "/lambda", "perturbation bound");
    flag<std::vector<std::int64_t>>(s, c, "--k-range", "/ranges/k_range", "lo,hi")->delimiter(',');
    flag<std::vector<std::string>>(s, c, "--patterns", "/pattern_set", "perturbed patterns")->delimiter(',');
    flag<std::int64_t>(s, c, "--pattern-max-len", "/pattern_max_len", "all patterns up to this length");
    flag<std::int64_t>(s, c, "--samples-per-k", "/samples_per_k", "competitors per k (0: all)");
    flag<double>(s, c, "--frequency-floor", "/frequency_floor", "minimum frequency of 1's");
    flag<double>(s, c, "--fit-tol", "/tolerances/fit_tol", "allowed exponent deviation");
    flag<unsigned>(s, c, "--threads", "/threads", "worker threads (fallback STURMLAB_THREADS)");
    handlers[s] = cmd_stability_periodic;
  }
  {
    auto* s = app.add_subcommand("stability-family", "the word family S_n against the reward of a single 1");
    common(s);
    flag<double>(s, c, "--alpha", "/alpha", "pair decay exponent (> 1)");
    flag<double>(s, c, "--lambda", "/lambda", "perturbation bound");
    flag<std::vector<std::int64_t>>(s, c, "--n-range", "/ranges/n_range", "lo,hi")->delimiter(',');
    flag<std::int64_t>(s, c, "--horizon", "/horizon", "largest pair distance");
    flag<double>(s, c, "--fit-tol", "/tolerances/fit_tol", "allowed exponent deviation");
    flag<unsigned>(s, c, "--threads", "/threads", "worker threads (fallback STURMLAB_THREADS)");
    handlers[s] = cmd_stability_family;
  }
  {
    auto* s = app.add_subcommand("cf", "continued fraction and convergents");
    common(s);
    flag<std::int64_t>(s, c, "--depth", "/depth", "last index");
    handlers[s] = cmd_cf;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    finish_config(c);
    for (auto* sub : app.get_subcommands()) return handlers.at(sub)(c);
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "sturmlab: config error: " << e.what() << '\n';
    return 2;
  } catch (const HypothesisError& e) {
    std::cerr << "sturmlab: hypothesis violated: " << e.what() << '\n';
    return 3;
  } catch (const InternalError& e) {
    std::cerr << "sturmlab: internal assertion failed: " << e.what() << '\n';
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "sturmlab: config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "sturmlab: internal error: " << e.what() << '\n';
    return 4;
  }
}
