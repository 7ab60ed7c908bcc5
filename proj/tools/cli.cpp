#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cerrno>
#include <chrono>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <algorithm>
#include <numbers>
#include <iostream>
#include <sstream>

#include "mforge/arithmetic.hpp"
#include "mforge/asymptotics.hpp"
#include "mforge/dirichlet.hpp"
#include "mforge/errors.hpp"
#include "mforge/parallel.hpp"
#include "mforge/random_model.hpp"
#include "mforge/sieve.hpp"
#include "mforge/statistics.hpp"
#include "mforge/summatory.hpp"

namespace mforge::cli {

namespace {

using Json = nlohmann::ordered_json;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  unsigned threads = 1;
  std::size_t segment_size = kDefaultStreamWidth;
  std::string format = "csv";
  std::string out_path;
  int verbosity = 0;
};

class Logger {
 public:
  Logger(std::ostream& err, const int& verbosity) : err_(err), verbosity_(verbosity) {}
  void info(const std::string& msg) const { err_ << "mforge: " << msg << '\n'; }
  void debug(const std::string& msg) const {
    if (verbosity_ > 0) info(msg);
  }

 private:
  std::ostream& err_;
  const int& verbosity_;
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Single writer: either the named file or the caller's stream.
void emit(const Globals& g, std::ostream& out, const std::function<void(std::ostream&)>& write) {
  if (g.out_path.empty()) {
    write(out);
    out.flush();
    return;
  }
  std::ofstream file(g.out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError(g.out_path + ": " + std::strerror(errno));
  write(file);
  file.close();
  if (!file) throw IoError(g.out_path + ": write failed");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path + ": " + std::strerror(errno));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// A small table that renders as CSV or as JSON (one object per row).
struct Table {
  std::vector<std::pair<std::string, Json>> metadata;
  std::vector<std::string> header;
  std::vector<std::vector<Json>> rows;

  static std::string cell(const Json& v) {
    if (v.is_null()) return {};
    if (v.is_number_float()) return format_double(v.get<double>());
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  }

  void write(std::ostream& out, const std::string& format) const {
    if (format == "json") {
      Json doc;
      if (!metadata.empty()) {
        Json meta = Json::object();
        for (const auto& [k, v] : metadata) meta[k] = v;
        doc["metadata"] = meta;
      }
      auto& arr = doc["rows"] = Json::array();
      for (const auto& row : rows) {
        Json obj = Json::object();
        for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = row[i];
        arr.push_back(std::move(obj));
      }
      out << doc.dump(1) << '\n';
      return;
    }
    for (const auto& [k, v] : metadata) out << "# " << k << '=' << cell(v) << '\n';
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell(row[i]);
      out << '\n';
    }
  }
};

template <class T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json();
}

SieveConfig sieve_config(const Globals& g) {
  SieveConfig config;
  config.segment_width = g.segment_size;
  config.validate();
  return config;
}

int floor_log2(Int x) {
  int k = 0;
  while ((Int{1} << (k + 1)) <= x) ++k;
  return k;
}

// ---- sieve ---------------------------------------------------------------

struct SieveArgs {
  Int limit = 0;
  std::string cache;
  std::string sequence;
};

int cmd_sieve(const SieveArgs& a, const Globals& g, std::ostream& out, const Logger& log) {
  const auto config = sieve_config(g);
  if (!a.sequence.empty()) {
    const WorkerPool pool(g.threads);
    const auto profile = profile_range(1, a.limit + 1, pool, config);
    std::vector<std::int64_t> values(profile.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (a.sequence == "mu") values[i] = profile.mobius[i];
      else if (a.sequence == "lambda") values[i] = profile.liouville[i];
      else if (a.sequence == "omega") values[i] = profile.omega[i];
      else if (a.sequence == "bigomega") values[i] = profile.big_omega[i];
      else if (a.sequence == "c_omega") values[i] = profile.c_omega[i];
      else values[i] = profile.g[i];
    }
    emit(g, out, [&](std::ostream& os) {
      if (g.format == "json") {
        Json arr = Json::array();
        for (std::size_t i = 0; i < values.size(); ++i) {
          arr.push_back({{"n", static_cast<Int>(i) + 1}, {"value", values[i]}});
        }
        os << arr.dump(1) << '\n';
      } else {
        write_sequence_csv(os, 1, values);
      }
    });
    return kExitOk;
  }

  SeedPrimes seeds;
  bool reused = false;
  if (!a.cache.empty() && std::filesystem::exists(a.cache)) {
    auto cached = read_prime_cache(a.cache);
    if (cached.limit >= a.limit) {
      log.info("reusing prime cache " + a.cache + " (limit " + std::to_string(cached.limit) + ")");
      seeds = std::move(cached);
      reused = true;
    }
  }
  if (!reused) {
    Stopwatch timer;
    seeds.limit = a.limit;
    seeds.primes = primes_up_to(a.limit);
    log.debug("sieved to " + std::to_string(a.limit) + " in " + format_double(timer.seconds()) + " s");
    if (!a.cache.empty()) {
      write_prime_cache(a.cache, seeds);
      log.info("wrote prime cache " + a.cache);
    }
  }
  const auto end = std::upper_bound(seeds.primes.begin(), seeds.primes.end(), a.limit);
  const auto count = static_cast<Int>(end - seeds.primes.begin());
  Table t;
  t.header = {"limit", "prime_count", "largest_prime"};
  t.rows.push_back({a.limit, count, count ? Json(*(end - 1)) : Json()});
  emit(g, out, [&](std::ostream& os) { t.write(os, g.format); });
  return kExitOk;
}

// ---- verify --------------------------------------------------------------

struct VerifyArgs {
  std::string identity = "all";
  Int limit = 0;
};

int cmd_verify(const VerifyArgs& a, const Globals& g, std::ostream& out, const Logger& log) {
  std::vector<Identity> ids;
  if (a.identity == "all") {
    ids = all_identities();
  } else {
    const auto id = parse_identity(a.identity);
    if (!id) throw ConfigError("unknown identity '" + a.identity + "'");
    ids.push_back(*id);
  }
  const WorkerPool pool(g.threads);
  Stopwatch timer;
  const auto inputs = IdentityInputs::build(a.limit, pool);
  log.debug("inputs to " + std::to_string(a.limit) + " in " + format_double(timer.seconds()) + " s");

  std::vector<IdentityReport> reports;
  for (auto id : ids) reports.push_back(verify_identity(id, inputs, pool));
  bool all_passed = true;
  for (const auto& r : reports) all_passed = all_passed && r.passed();

  emit(g, out, [&](std::ostream& os) {
    if (g.format == "json") {
      Json arr = Json::array();
      for (std::size_t i = 0; i < ids.size(); ++i) {
        const auto& r = reports[i];
        Json row = {{"identity", identity_label(ids[i])},
                    {"statement", identity_statement(ids[i])},
                    {"N", r.N},
                    {"passed", r.passed()}};
        row["failure_n"] = r.first_failure ? Json(r.first_failure->n) : Json();
        row["lhs"] = r.first_failure ? Json(r.first_failure->lhs) : Json();
        row["rhs"] = r.first_failure ? Json(r.first_failure->rhs) : Json();
        arr.push_back(std::move(row));
      }
      os << arr.dump(1) << '\n';
      return;
    }
    for (std::size_t i = 0; i < ids.size(); ++i) {
      const auto& r = reports[i];
      os << '(' << identity_label(ids[i]) << ") " << identity_statement(ids[i]) << "  n <= " << r.N;
      if (r.passed()) {
        os << "  PASS\n";
      } else {
        os << "  FAIL at n=" << r.first_failure->n << " lhs=" << r.first_failure->lhs
           << " rhs=" << r.first_failure->rhs << '\n';
      }
    }
  });
  return all_passed ? kExitOk : kExitCheckFailed;
}

// ---- summatory -----------------------------------------------------------

struct SummatoryArgs {
  Int limit = 0;
  std::string checkpoints = "geometric:1.25";
};

int cmd_summatory(const SummatoryArgs& a, const Globals& g, std::ostream& out, const Logger& log) {
  const auto policy = CheckpointPolicy::parse(a.checkpoints);
  const WorkerPool pool(g.threads);
  Stopwatch timer;
  const auto series = build_series(a.limit, policy, pool, sieve_config(g));
  log.debug("series to " + std::to_string(a.limit) + " in " + format_double(timer.seconds()) + " s");

  // Both Mertens routes must reproduce the direct sum at N.
  const auto direct = series.at(a.limit).M;
  const auto via_g_pi = mertens_via_g_pi(a.limit, series);
  const auto via_G = mertens_via_G_over_primes(a.limit, series);
  const bool ok = direct == via_g_pi && direct == via_G;
  log.info("M(" + std::to_string(a.limit) + ")=" + std::to_string(direct) +
           " via g,pi=" + std::to_string(via_g_pi) + " via G(x/p)=" + std::to_string(via_G) +
           (ok ? " ok" : " MISMATCH"));

  emit(g, out, [&](std::ostream& os) {
    if (g.format == "json") write_series_json(os, series);
    else write_series_csv(os, series);
  });
  return ok ? kExitOk : kExitCheckFailed;
}

// ---- stats ---------------------------------------------------------------

struct StatsArgs {
  Int x = 0;
  std::string report = "omega";
  std::optional<int> k;
  std::optional<int> m;
  Int p = 2;
  std::string statistic = "omega";
  Int prime_limit = 1'000'000;
  int m_max = 16;
};

void density_rows(Table& t, const DensityReport& r) {
  t.rows.push_back({r.x, r.index, r.count, r.empirical, r.predicted, r.abs_error});
}

int cmd_stats(const StatsArgs& a, const Globals& g, std::ostream& out, const Logger& log) {
  const WorkerPool pool(g.threads);
  Table t;
  if (a.report == "exponent") {
    const int k_max = a.k.value_or(6);
    t.header = {"x", "p", "k", "count", "closed_form_count", "empirical", "predicted"};
    for (const auto& r : prime_exponent_distribution(a.x, a.p, k_max)) {
      t.rows.push_back({a.x, a.p, r.k, r.count, r.closed_form_count, r.empirical, r.predicted});
    }
    emit(g, out, [&](std::ostream& os) { t.write(os, g.format); });
    return kExitOk;
  }

  Stopwatch timer;
  const auto census = build_census(a.x, pool, sieve_config(g));
  log.debug("census to " + std::to_string(a.x) + " in " + format_double(timer.seconds()) + " s");

  if (a.report == "omega") {
    t.header = {"x", "k", "count", "empirical", "predicted", "abs_error"};
    if (a.k) {
      density_rows(t, omega_k_density(census, *a.k));
    } else {
      for (int k = 1; k <= floor_log2(a.x); ++k) density_rows(t, omega_k_density(census, k));
    }
  } else if (a.report == "excess") {
    const auto coeffs = d_m_coefficients(a.prime_limit, a.m_max);
    t.metadata = {{"prime_limit", coeffs.prime_limit}, {"tail_estimate", coeffs.tail_estimate}};
    t.header = {"x", "m", "count", "empirical", "predicted", "abs_error"};
    if (a.m) {
      density_rows(t, excess_density(census, *a.m, coeffs));
    } else {
      for (int m = 0; m <= a.m_max; ++m) density_rows(t, excess_density(census, m, coeffs));
    }
  } else if (a.report == "sign") {
    const auto s = sign_balance(census);
    t.header = {"x", "plus", "minus", "squarefree", "plus_fraction", "minus_fraction"};
    t.rows.push_back({a.x, s.plus, s.minus, s.squarefree, s.plus_fraction, s.minus_fraction});
  } else if (a.report == "conditional") {
    t.header = {"x", "k", "class_size", "conditional", "unconditional", "ratio"};
    auto add = [&](int k) {
      const auto c = conditional_squarefree(census, k);
      t.rows.push_back({a.x, c.k, c.class_size, opt(c.conditional), c.unconditional, opt(c.ratio)});
    };
    if (a.k) add(*a.k);
    else for (int k = 1; k <= floor_log2(a.x); ++k) add(k);
  } else {  // cdf
    const auto stat = a.statistic == "omega" ? CdfStatistic::omega : CdfStatistic::log_c_omega;
    const auto cdf = erdos_kac_cdf(census, stat);
    t.metadata = {{"statistic", a.statistic},
                  {"x", a.x},
                  {"sample_size", cdf.sample_size},
                  {"center", cdf.center},
                  {"scale", cdf.scale},
                  {"ks_distance", cdf.ks_distance}};
    t.header = {"z", "count", "empirical_cdf", "normal_cdf"};
    Int cumulative = 0;
    for (std::size_t i = 0; i < cdf.values.size(); ++i) {
      cumulative += cdf.counts[i];
      t.rows.push_back({cdf.values[i], cdf.counts[i],
                        static_cast<double>(cumulative) / static_cast<double>(cdf.sample_size),
                        standard_normal_cdf(cdf.values[i])});
    }
    log.info("KS distance " + format_double(cdf.ks_distance));
  }
  emit(g, out, [&](std::ostream& os) { t.write(os, g.format); });
  return kExitOk;
}

// ---- simulate ------------------------------------------------------------

struct SimulateArgs {
  std::uint64_t seed = 0;
  int trials = 1;
  Int x_max = 0;
  std::string checkpoints = "geometric:1.25";
};

int cmd_simulate(const SimulateArgs& a, const Globals& g, std::ostream& out, const Logger& log) {
  const auto policy = CheckpointPolicy::parse(a.checkpoints);
  const WorkerPool pool(g.threads);
  Stopwatch timer;
  const auto runs = simulate_trials(a.seed, a.trials, a.x_max, policy, pool);
  log.debug(std::to_string(a.trials) + " trials in " + format_double(timer.seconds()) + " s");

  const auto moments = endpoint_moments(runs);
  log.info("generator " + std::string(Xoshiro256StarStar::kName) + ", endpoint mean " +
           format_double(moments.mean) + ", variance " + format_double(moments.variance) +
           " (model " + format_double(6.0 * static_cast<double>(a.x_max) /
                                      (std::numbers::pi * std::numbers::pi)) + ")");
  if (a.x_max >= kLilMinX) {
    const auto lil = lil_statistic(runs);
    log.info("max LIL statistic " + format_double(lil.max) + ", reference " +
             format_double(lil.reference));
  }

  Table t;
  t.header = {"trial", "x", "Mbar", "lil_stat"};
  for (std::size_t i = 0; i < runs.size(); ++i) {
    for (const auto& pt : runs[i].trajectory) {
      t.rows.push_back({static_cast<Int>(i), pt.x, pt.mbar, opt(pt.lil)});
    }
  }
  emit(g, out, [&](std::ostream& os) { t.write(os, g.format); });
  return kExitOk;
}

// ---- trace ---------------------------------------------------------------

int cmd_trace(const std::string& in_path, const Globals& g, std::ostream& out, const Logger& log) {
  std::istringstream in(slurp(in_path));
  const auto series = read_series_csv(in);
  const auto rows = build_trace(series);
  log.debug(std::to_string(rows.size()) + " trace rows from " + in_path);
  emit(g, out, [&](std::ostream& os) {
    if (g.format == "json") write_trace_json(os, rows);
    else write_trace_csv(os, rows);
  });
  return kExitOk;
}

// ---- oeis-check ----------------------------------------------------------

struct OeisArgs {
  std::string sequence;
  std::string bfile;
};

Int max_bfile_index(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Int max_index = 0;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    Int index = 0;
    if (fields >> index) max_index = std::max(max_index, index);
  }
  return max_index;
}

int cmd_oeis(const OeisArgs& a, const Globals& g, std::ostream& out, const Logger& log) {
  const std::string text = slurp(a.bfile);
  const Int max_index = std::max<Int>(max_bfile_index(text), 1);
  const WorkerPool pool(g.threads);
  const auto profile = profile_range(1, max_index + 1, pool, sieve_config(g));
  auto value = [&](Int n) -> std::optional<std::int64_t> {
    if (n < 1 || n > max_index) return std::nullopt;
    const auto i = profile.index(n);
    if (a.sequence == "A008683") return profile.mobius[i];
    if (a.sequence == "A008836") return profile.liouville[i];
    return profile.g[i];
  };
  std::istringstream in(text);
  const auto cmp = compare_bfile(in, value);
  log.debug("checked " + std::to_string(cmp.rows_checked) + " rows of " + a.bfile);

  Table t;
  t.header = {"sequence", "rows_checked", "result", "index", "expected", "actual"};
  if (cmp.matches()) {
    t.rows.push_back({a.sequence, cmp.rows_checked, "match", nullptr, nullptr, nullptr});
  } else {
    const auto& mm = *cmp.first_mismatch;
    t.rows.push_back({a.sequence, cmp.rows_checked, "mismatch", mm.index, mm.expected,
                      opt(mm.actual)});
  }
  emit(g, out, [&](std::ostream& os) { t.write(os, g.format); });
  return cmp.matches() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Globals g;
  Logger log(err, g.verbosity);

  CLI::App app{"mforge: Mertens function, g(n) and squarefree statistics toolkit", "mforge"};
  app.fallthrough();
  app.footer("Exit codes: 0 success, 1 identity or b-file check failed, 2 usage error,\n"
             "3 I/O or arithmetic failure. Logs go to standard error.");
  app.require_subcommand(1);
  app.set_config("--config", "", "Optional key=value file; flags on the command line win");
  auto* threads_opt = app.add_option("--threads", g.threads, "Worker count (default: $MFORGE_THREADS, else 1)")
                          ->check(CLI::Range(1u, 1024u));
  app.add_option("--segment-size", g.segment_size, "Sieve segment width")
      ->check(CLI::Range(std::size_t{1}, kDefaultSegmentCapacity))
      ->capture_default_str();
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", g.out_path, "Output file (default: standard output)");
  app.add_flag("-v,--verbose", g.verbosity, "More logging on standard error");

  SieveArgs sieve;
  auto* sc = app.add_subcommand("sieve", "Build primes to --limit, optionally cached, or export a sequence");
  sc->add_option("--limit", sieve.limit, "Upper bound")->required()->check(CLI::PositiveNumber);
  sc->add_option("--cache", sieve.cache, "Binary prime cache to reuse or write");
  sc->add_option("--sequence", sieve.sequence, "Export n,value for 1..limit")
      ->check(CLI::IsMember({"mu", "lambda", "omega", "bigomega", "c_omega", "g"}));

  VerifyArgs verify;
  auto* vc = app.add_subcommand("verify", "Dirichlet identity suite (a)-(f)");
  vc->add_option("--identity", verify.identity, "a..f or all")
      ->check(CLI::IsMember({"a", "b", "c", "d", "e", "f", "all"}))
      ->capture_default_str();
  vc->add_option("--limit", verify.limit, "Check every n <= limit")
      ->required()
      ->check(CLI::PositiveNumber);

  SummatoryArgs summ;
  auto* mc = app.add_subcommand("summatory", "M, G, Qsq and pi at checkpoints, with Mertens cross-checks");
  mc->add_option("--limit", summ.limit, "N")->required()->check(CLI::PositiveNumber);
  mc->add_option("--checkpoints", summ.checkpoints, "all | geometric:<ratio> | list:<x1>,<x2>,...")
      ->capture_default_str();

  StatsArgs stats;
  auto* tc = app.add_subcommand("stats", "Density, sign, exponent and CDF reports");
  tc->add_option("--x", stats.x, "Range [1, x]")->required()->check(CLI::Range(Int{2}, Int{1} << 40));
  tc->add_option("--report", stats.report, "Report kind")
      ->check(CLI::IsMember({"omega", "excess", "sign", "conditional", "exponent", "cdf"}))
      ->capture_default_str();
  tc->add_option("--k", stats.k, "Omega class (omega, conditional) or largest exponent (exponent, default 6)");
  tc->add_option("--m", stats.m, "Excess Omega - omega")->check(CLI::NonNegativeNumber);
  tc->add_option("--p", stats.p, "Prime for the exponent report")->capture_default_str();
  tc->add_option("--statistic", stats.statistic, "CDF statistic")
      ->check(CLI::IsMember({"omega", "log_c_omega"}))
      ->capture_default_str();
  tc->add_option("--prime-limit", stats.prime_limit, "Euler product truncation for d_m")
      ->check(CLI::Range(Int{2}, Int{1} << 32))
      ->capture_default_str();
  tc->add_option("--m-max", stats.m_max, "Highest d_m coefficient")
      ->check(CLI::Range(0, 64))
      ->capture_default_str();

  SimulateArgs sim;
  auto* rc = app.add_subcommand("simulate", "Random +-1/0 model of the Mobius function");
  rc->add_option("--seed", sim.seed, "Base seed; trial t uses seed + t")->capture_default_str();
  rc->add_option("--trials", sim.trials, "Number of trials")
      ->check(CLI::Range(1, 1'000'000))
      ->capture_default_str();
  rc->add_option("--x-max", sim.x_max, "Trajectory length")->required()->check(CLI::PositiveNumber);
  rc->add_option("--checkpoints", sim.checkpoints, "Trajectory sampling policy")->capture_default_str();
  rc->add_option("--output", g.format, "Same as --format")->check(CLI::IsMember({"csv", "json"}));

  std::string trace_in;
  auto* xc = app.add_subcommand("trace", "Ratio traces from a checkpoint CSV");
  xc->add_option("--in", trace_in, "Checkpoint CSV written by summatory")->required();

  OeisArgs oeis;
  auto* oc = app.add_subcommand("oeis-check", "Compare against an OEIS b-file");
  oc->add_option("--sequence", oeis.sequence, "A008683 (mu), A008836 (lambda) or A341444 (g)")
      ->required()
      ->check(CLI::IsMember({"A008683", "A008836", "A341444"}));
  oc->add_option("--bfile", oeis.bfile, "b-file path")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "mforge: " << e.what() << '\n' << "Run with --help for usage.\n";
    return kExitUsage;
  }

  try {
    if (threads_opt->count() == 0) g.threads = WorkerPool::default_workers();
    log.debug("using " + std::to_string(g.threads) + " worker(s)");
    if (*sc) return cmd_sieve(sieve, g, out, log);
    if (*vc) return cmd_verify(verify, g, out, log);
    if (*mc) return cmd_summatory(summ, g, out, log);
    if (*tc) return cmd_stats(stats, g, out, log);
    if (*rc) return cmd_simulate(sim, g, out, log);
    if (*xc) return cmd_trace(trace_in, g, out, log);
    return cmd_oeis(oeis, g, out, log);
  } catch (const std::invalid_argument& e) {  // ConfigError, PreconditionError
    err << "mforge: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {  // RangeError
    err << "mforge: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "mforge: error: " << e.what() << '\n';
    return kExitRuntime;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace mforge::cli
