// peerdeg command-line experiment runner.
//
// Reproduces the library's standard studies from flat key=value configs and
// writes deterministic CSV artifacts. Talks to the core exclusively through
// the shared library's C API (peerdeg.h).

#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "peerdeg.h"

namespace {

namespace fs = std::filesystem;

// ---- C API helpers ---------------------------------------------------------

void check(peerdeg_status status, const std::string& what) {
  if (status != PEERDEG_OK) {
    throw std::runtime_error(what + ": " + peerdeg_status_str(status) + " (" +
                             peerdeg_last_error() + ")");
  }
}

using DistPtr = std::unique_ptr<peerdeg_dist, decltype(&peerdeg_dist_free)>;
using HistPtr = std::unique_ptr<peerdeg_hist, decltype(&peerdeg_hist_free)>;
using GraphPtr = std::unique_ptr<peerdeg_graph, decltype(&peerdeg_graph_free)>;
using SimPtr = std::unique_ptr<peerdeg_sim, decltype(&peerdeg_sim_free)>;

struct Curve {
  std::vector<double> pmf;
  std::vector<double> cdf;
};

Curve pull_curve(const peerdeg_hist* hist) {
  Curve c;
  const size_t n = peerdeg_hist_size(hist);
  c.pmf.resize(n);
  c.cdf.resize(n);
  for (size_t k = 0; k < n; ++k) {
    c.pmf[k] = peerdeg_hist_prob(hist, k);
    c.cdf[k] = peerdeg_hist_cdf(hist, k);
  }
  return c;
}

Curve curve_from_pmf(const std::vector<double>& pmf) {
  peerdeg_hist* h = nullptr;
  check(peerdeg_hist_from_pmf(pmf.data(), pmf.size(), 0, &h), "histogram");
  HistPtr holder(h, &peerdeg_hist_free);
  return pull_curve(h);
}

// ---- configuration ----------------------------------------------------------

struct DdSpec {
  std::string kind;  // fixed | random-graph | scale-free
  double a = 0.0;    // fixed degree / p / a
  double b = 0.0;    // n_nodes (random-graph) / b (scale-free)
  std::string raw;
};

struct Config {
  std::optional<double> alpha;
  std::optional<double> phi;
  std::optional<DdSpec> dd;
  std::uint32_t n_nodes = 1000;
  double t_end = 1e4;
  std::uint32_t runs = 30;
  std::uint64_t seed = 1;
  double epsilon = 1e-12;
  std::string out = "out";
  std::uint32_t workers = 0;  // 0: one per hardware thread
  std::vector<double> phi_list;
  std::vector<std::pair<double, double>> aiello;
};

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

double parse_double(const std::string& s, const std::string& key) {
  try {
    size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("config: bad numeric value '" + s + "' for " + key);
  }
}

std::uint64_t parse_uint(const std::string& s, const std::string& key) {
  try {
    size_t pos = 0;
    const unsigned long long v = std::stoull(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("config: bad integer value '" + s + "' for " + key);
  }
}

DdSpec parse_dd(const std::string& value) {
  const auto parts = split_ws(value);
  DdSpec dd;
  dd.raw = value;
  if (parts.size() == 2 && parts[0] == "fixed") {
    dd.kind = "fixed";
    dd.a = static_cast<double>(parse_uint(parts[1], "dd_dist"));
    return dd;
  }
  if (parts.size() == 3 && parts[0] == "random-graph") {
    dd.kind = "random-graph";
    dd.a = parse_double(parts[1], "dd_dist");
    dd.b = static_cast<double>(parse_uint(parts[2], "dd_dist"));
    return dd;
  }
  if (parts.size() == 3 && parts[0] == "scale-free") {
    dd.kind = "scale-free";
    dd.a = parse_double(parts[1], "dd_dist");
    dd.b = parse_double(parts[2], "dd_dist");
    return dd;
  }
  throw std::runtime_error(
      "config: dd_dist must be 'fixed N' | 'random-graph P N' | 'scale-free A B', got '" +
      value + "'");
}

Config parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  Config cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      if (!split_ws(line).empty()) {
        throw std::runtime_error("config: line " + std::to_string(lineno) +
                                 " is not key = value");
      }
      continue;
    }
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw std::runtime_error("config: empty key or value at line " + std::to_string(lineno));
    }

    if (key == "alpha") {
      cfg.alpha = parse_double(value, key);
    } else if (key == "phi") {
      cfg.phi = parse_double(value, key);
    } else if (key == "dd_dist") {
      cfg.dd = parse_dd(value);
    } else if (key == "n_nodes") {
      cfg.n_nodes = static_cast<std::uint32_t>(parse_uint(value, key));
    } else if (key == "t_end") {
      cfg.t_end = parse_double(value, key);
    } else if (key == "runs") {
      cfg.runs = static_cast<std::uint32_t>(parse_uint(value, key));
    } else if (key == "seed") {
      cfg.seed = parse_uint(value, key);
    } else if (key == "epsilon") {
      cfg.epsilon = parse_double(value, key);
    } else if (key == "out") {
      cfg.out = value;
    } else if (key == "workers") {
      cfg.workers = static_cast<std::uint32_t>(parse_uint(value, key));
    } else if (key == "phi_list") {
      for (const auto& tok : split_ws(value)) cfg.phi_list.push_back(parse_double(tok, key));
    } else if (key == "aiello") {
      const auto parts = split_ws(value);
      if (parts.size() != 2) {
        throw std::runtime_error("config: aiello expects 'a b' at line " +
                                 std::to_string(lineno));
      }
      cfg.aiello.emplace_back(parse_double(parts[0], key), parse_double(parts[1], key));
    } else {
      throw std::runtime_error("config: unknown key '" + key + "' at line " +
                               std::to_string(lineno));
    }
  }
  if (cfg.runs == 0) throw std::runtime_error("config: runs must be >= 1");
  return cfg;
}

DistPtr make_dist(const Config& cfg) {
  if (!cfg.dd) throw std::runtime_error("config: dd_dist is required for this mode");
  peerdeg_dist* dist = nullptr;
  const DdSpec& dd = *cfg.dd;
  if (dd.kind == "fixed") {
    check(peerdeg_dist_fixed(static_cast<uint32_t>(dd.a), &dist), "dd_dist");
  } else if (dd.kind == "random-graph") {
    check(peerdeg_dist_random_graph(dd.a, static_cast<uint32_t>(dd.b), &dist), "dd_dist");
  } else {
    check(peerdeg_dist_scale_free(dd.a, dd.b, &dist), "dd_dist");
  }
  return DistPtr(dist, &peerdeg_dist_free);
}

// ---- CSV / report output -----------------------------------------------------

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

// Schema: degree,analytic_p,analytic_cdf,empirical_p,empirical_cdf with empty
// fields for whichever side is absent; degrees ascending.
void write_distribution_csv(const fs::path& path, const Curve* analytic, const Curve* empirical) {
  auto out = open_out(path);
  out << "degree,analytic_p,analytic_cdf,empirical_p,empirical_cdf\n";
  size_t support = 0;
  if (analytic) support = std::max(support, analytic->pmf.size());
  if (empirical) support = std::max(support, empirical->pmf.size());
  for (size_t k = 0; k < support; ++k) {
    out << k << ',';
    if (analytic) {
      out << fmt(k < analytic->pmf.size() ? analytic->pmf[k] : 0.0) << ','
          << fmt(k < analytic->cdf.size() ? analytic->cdf[k] : 1.0);
    } else {
      out << ',';
    }
    out << ',';
    if (empirical) {
      out << fmt(k < empirical->pmf.size() ? empirical->pmf[k] : 0.0) << ','
          << fmt(k < empirical->cdf.size() ? empirical->cdf[k] : 1.0);
    } else {
      out << ',';
    }
    out << '\n';
  }
}

// Log-scale companion: zero-probability rows dropped so both series can be
// plotted on log axes.
void write_loglog_csv(const fs::path& path, const Curve& analytic, const Curve& empirical) {
  auto out = open_out(path);
  out << "degree,analytic_p,empirical_p\n";
  const size_t support = std::max(analytic.pmf.size(), empirical.pmf.size());
  for (size_t k = 0; k < support; ++k) {
    const double ap = k < analytic.pmf.size() ? analytic.pmf[k] : 0.0;
    const double ep = k < empirical.pmf.size() ? empirical.pmf[k] : 0.0;
    if (ap <= 0.0 && ep <= 0.0) continue;
    out << k << ',';
    if (ap > 0.0) out << fmt(ap);
    out << ',';
    if (ep > 0.0) out << fmt(ep);
    out << '\n';
  }
}

// ---- simulation replicas -------------------------------------------------------

struct RunResult {
  std::vector<double> time_avg;
  std::vector<double> final_snapshot;
  std::uint64_t failures = 0;
  std::uint64_t attachments = 0;
  std::uint64_t rejected = 0;
};

RunResult one_run(const Config& cfg, const peerdeg_dist* dist, std::uint64_t seed) {
  peerdeg_graph* graph_raw = nullptr;
  check(peerdeg_graph_generate(dist, cfg.n_nodes, seed, &graph_raw), "graph generation");
  GraphPtr graph(graph_raw, &peerdeg_graph_free);

  peerdeg_sim* sim_raw = nullptr;
  check(peerdeg_simulate(graph.get(), *cfg.alpha, *cfg.phi, cfg.t_end, -1.0, seed, &sim_raw),
        "simulation");
  SimPtr sim(sim_raw, &peerdeg_sim_free);

  RunResult result;
  peerdeg_hist* hist = nullptr;
  check(peerdeg_sim_time_average(sim.get(), &hist), "time-averaged histogram");
  result.time_avg = pull_curve(hist).pmf;
  peerdeg_hist_free(hist);
  check(peerdeg_sim_snapshot(sim.get(), &hist), "snapshot histogram");
  result.final_snapshot = pull_curve(hist).pmf;
  peerdeg_hist_free(hist);
  result.failures = peerdeg_sim_failures(sim.get());
  result.attachments = peerdeg_sim_attachments(sim.get());
  result.rejected = peerdeg_sim_rejected_requests(sim.get());
  return result;
}

// Replicas are independent; they are dispatched to a small worker pool and
// merged strictly by run index, so the output never depends on scheduling.
std::vector<RunResult> run_replicas(const Config& cfg, const peerdeg_dist* dist) {
  std::vector<RunResult> results(cfg.runs);
  unsigned workers = cfg.workers ? cfg.workers : std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  workers = std::min<unsigned>(workers, cfg.runs);

  std::atomic<std::uint32_t> next{0};
  std::mutex error_mutex;
  std::string first_error;
  auto worker = [&] {
    for (;;) {
      const std::uint32_t k = next.fetch_add(1);
      if (k >= cfg.runs) return;
      try {
        results[k] = one_run(cfg, dist, cfg.seed + k);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (first_error.empty()) first_error = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (!first_error.empty()) throw std::runtime_error(first_error);
  return results;
}

std::vector<double> average_pmf(const std::vector<RunResult>& results, bool time_avg) {
  size_t support = 0;
  for (const auto& r : results) {
    support = std::max(support, (time_avg ? r.time_avg : r.final_snapshot).size());
  }
  std::vector<double> avg(support, 0.0);
  for (const auto& r : results) {
    const auto& pmf = time_avg ? r.time_avg : r.final_snapshot;
    for (size_t k = 0; k < pmf.size(); ++k) avg[k] += pmf[k];
  }
  for (double& p : avg) p /= static_cast<double>(results.size());
  return avg;
}

void echo_config(std::ostream& out, const std::string& mode, const Config& cfg) {
  out << "mode: " << mode << '\n';
  if (cfg.dd) out << "dd_dist: " << cfg.dd->raw << '\n';
  if (cfg.alpha) out << "alpha: " << fmt(*cfg.alpha) << '\n';
  if (cfg.phi) out << "phi: " << fmt(*cfg.phi) << '\n';
  out << "n_nodes: " << cfg.n_nodes << '\n'
      << "t_end: " << fmt(cfg.t_end) << '\n'
      << "runs: " << cfg.runs << '\n'
      << "seed: " << cfg.seed << '\n'
      << "epsilon: " << fmt(cfg.epsilon) << '\n';
}

void report_runs(std::ostream& out, const std::vector<RunResult>& results) {
  std::uint64_t failures = 0;
  std::uint64_t attachments = 0;
  std::uint64_t rejected = 0;
  for (size_t k = 0; k < results.size(); ++k) {
    out << "run " << k << ": failures=" << results[k].failures
        << " attachments=" << results[k].attachments << " rejected=" << results[k].rejected
        << '\n';
    failures += results[k].failures;
    attachments += results[k].attachments;
    rejected += results[k].rejected;
  }
  out << "total failures: " << failures << '\n'
      << "total attachments: " << attachments << '\n'
      << "total rejected requests: " << rejected << '\n';
}

void require_rates(const Config& cfg) {
  if (!cfg.alpha || !cfg.phi) throw std::runtime_error("config: alpha and phi are required");
}

// ---- modes -------------------------------------------------------------------

int mode_analytic(const Config& cfg, const fs::path& dir) {
  require_rates(cfg);
  auto dist = make_dist(cfg);
  peerdeg_hist* hist = nullptr;
  check(peerdeg_analytic_distribution(dist.get(), *cfg.alpha, *cfg.phi, cfg.epsilon, &hist),
        "analytic distribution");
  HistPtr holder(hist, &peerdeg_hist_free);
  const Curve analytic = pull_curve(hist);
  write_distribution_csv(dir / "analytic.csv", &analytic, nullptr);

  auto report = open_out(dir / "report.txt");
  echo_config(report, "analytic", cfg);
  report << "support: 0.." << analytic.pmf.size() - 1 << '\n'
         << "mean degree: " << fmt(peerdeg_hist_mean(hist)) << '\n'
         << "outputs: analytic.csv\n";
  return 0;
}

int mode_simulate(const Config& cfg, const fs::path& dir) {
  require_rates(cfg);
  auto dist = make_dist(cfg);
  const auto results = run_replicas(cfg, dist.get());

  for (size_t k = 0; k < results.size(); ++k) {
    char name[32];
    std::snprintf(name, sizeof name, "run_%03zu.csv", k);
    const Curve c = curve_from_pmf(results[k].time_avg);
    write_distribution_csv(dir / name, nullptr, &c);
  }
  const Curve avg_time = curve_from_pmf(average_pmf(results, true));
  const Curve avg_final = curve_from_pmf(average_pmf(results, false));
  write_distribution_csv(dir / "empirical_avg.csv", nullptr, &avg_time);
  write_distribution_csv(dir / "final_avg.csv", nullptr, &avg_final);

  auto report = open_out(dir / "report.txt");
  echo_config(report, "simulate", cfg);
  report_runs(report, results);
  report << "outputs: run_*.csv (time-averaged), empirical_avg.csv (time-averaged), "
            "final_avg.csv (end-of-run snapshots)\n";
  return 0;
}

int mode_compare(const Config& cfg, const fs::path& dir) {
  require_rates(cfg);
  auto dist = make_dist(cfg);

  peerdeg_hist* analytic_raw = nullptr;
  check(peerdeg_analytic_distribution(dist.get(), *cfg.alpha, *cfg.phi, cfg.epsilon,
                                      &analytic_raw),
        "analytic distribution");
  HistPtr analytic(analytic_raw, &peerdeg_hist_free);
  const Curve analytic_curve = pull_curve(analytic_raw);

  const auto results = run_replicas(cfg, dist.get());
  const auto avg_pmf = average_pmf(results, true);
  peerdeg_hist* empirical_raw = nullptr;
  check(peerdeg_hist_from_pmf(avg_pmf.data(), avg_pmf.size(),
                              static_cast<std::uint64_t>(cfg.n_nodes) * cfg.runs,
                              &empirical_raw),
        "averaged histogram");
  HistPtr empirical(empirical_raw, &peerdeg_hist_free);
  const Curve empirical_curve = pull_curve(empirical_raw);

  double l1 = 0.0;
  double ks = 0.0;
  check(peerdeg_compare_histograms(analytic_raw, empirical_raw, &l1, &ks), "comparison");

  write_distribution_csv(dir / "analytic.csv", &analytic_curve, nullptr);
  write_distribution_csv(dir / "empirical_avg.csv", nullptr, &empirical_curve);
  write_distribution_csv(dir / "compare.csv", &analytic_curve, &empirical_curve);
  write_loglog_csv(dir / "compare_loglog.csv", analytic_curve, empirical_curve);
  {
    auto summary = open_out(dir / "summary.csv");
    summary << "l1,ks\n" << fmt(l1) << ',' << fmt(ks) << '\n';
  }

  auto report = open_out(dir / "report.txt");
  echo_config(report, "compare", cfg);
  report_runs(report, results);
  report << "L1 distance (analytic vs averaged empirical): " << fmt(l1) << '\n'
         << "KS statistic: " << fmt(ks) << '\n'
         << "outputs: analytic.csv, empirical_avg.csv, compare.csv, compare_loglog.csv, "
            "summary.csv\n";
  return 0;
}

int mode_diameter_sweep(const Config& cfg, const fs::path& dir) {
  if (!cfg.alpha) throw std::runtime_error("config: alpha is required");
  if (cfg.phi_list.empty()) throw std::runtime_error("config: phi_list is required");
  auto out = open_out(dir / "diameter_sweep.csv");
  out << "phi,z1,z2,diameter,reliable\n";

  auto report = open_out(dir / "report.txt");
  echo_config(report, "diameter-sweep", cfg);

  for (double phi : cfg.phi_list) {
    Config point = cfg;
    point.phi = phi;
    auto dist = make_dist(point);
    peerdeg_hist* hist = nullptr;
    check(peerdeg_analytic_distribution(dist.get(), *cfg.alpha, phi, cfg.epsilon, &hist),
          "analytic distribution");
    HistPtr holder(hist, &peerdeg_hist_free);
    double z1 = 0.0;
    double z2 = 0.0;
    check(peerdeg_hist_moments(hist, &z1, &z2), "moments");

    out << fmt(phi) << ',' << fmt(z1) << ',' << fmt(z2) << ',';
    double diameter = 0.0;
    const peerdeg_status st = peerdeg_estimate_diameter(cfg.n_nodes, z1, z2, &diameter);
    if (st == PEERDEG_OK) {
      out << fmt(diameter) << ',' << peerdeg_diameter_reliable(z1, z2) << '\n';
    } else if (st == PEERDEG_E_NO_GIANT_COMPONENT) {
      out << ",0\n";  // no estimate: z2 <= z1
      report << "phi=" << fmt(phi) << ": no giant component (z2 <= z1)\n";
    } else {
      check(st, "diameter estimate");
    }
  }
  report << "outputs: diameter_sweep.csv\n";
  return 0;
}

int mode_netsize(const Config& cfg, const fs::path& dir) {
  if (cfg.aiello.empty()) throw std::runtime_error("config: at least one 'aiello = a b' line");
  auto out = open_out(dir / "netsize.csv");
  out << "a,b,max_degree,n_nodes,formula_n\n";
  for (const auto& [a, b] : cfg.aiello) {
    uint64_t n = 0;
    uint64_t formula = 0;
    check(peerdeg_aiello_network_size(a, b, 10000000, &n), "aiello size");
    check(peerdeg_aiello_formula_size(a, b, 10000000, &formula), "aiello formula size");
    const auto max_degree = static_cast<std::uint64_t>(std::floor(std::exp(a / b)));
    out << fmt(a) << ',' << fmt(b) << ',' << max_degree << ',' << n << ',' << formula << '\n';
  }

  auto report = open_out(dir / "report.txt");
  echo_config(report, "netsize", cfg);
  report << "n_nodes: nodes the generator creates (sum of per-degree floors)\n"
         << "formula_n: truncated value of the closed-form size expression\n"
         << "outputs: netsize.csv\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"degree distributions of self-repairing peer-to-peer overlays"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_override;
  std::int64_t seed_override = -1;
  std::int64_t workers_override = -1;

  const std::vector<std::string> modes = {"analytic", "simulate", "compare", "diameter-sweep",
                                          "netsize"};
  for (const auto& mode : modes) {
    auto* sub = app.add_subcommand(mode);
    sub->add_option("--config", config_path, "experiment config file")->required();
    sub->add_option("--out", out_override, "output directory (overrides config)");
    sub->add_option("--seed", seed_override, "base seed (overrides config)");
    sub->add_option("--workers", workers_override, "worker threads for replicas");
  }

  CLI11_PARSE(app, argc, argv);
  const std::string mode = app.get_subcommands().front()->get_name();

  try {
    Config cfg = parse_config(config_path);
    if (!out_override.empty()) cfg.out = out_override;
    if (seed_override >= 0) cfg.seed = static_cast<std::uint64_t>(seed_override);
    if (workers_override >= 0) cfg.workers = static_cast<std::uint32_t>(workers_override);

    const fs::path dir(cfg.out);
    fs::create_directories(dir);

    if (mode == "analytic") return mode_analytic(cfg, dir);
    if (mode == "simulate") return mode_simulate(cfg, dir);
    if (mode == "compare") return mode_compare(cfg, dir);
    if (mode == "diameter-sweep") return mode_diameter_sweep(cfg, dir);
    return mode_netsize(cfg, dir);
  } catch (const std::exception& e) {
    std::cerr << "peerdeg " << mode << ": " << e.what() << '\n';
    return 2;
  }
}
