#include "rigicount/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "rigicount/certify.hpp"
#include "rigicount/random.hpp"

namespace rigicount {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::int64_t parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw std::invalid_argument(what + ": not an integer: '" + s + "'");
  return v;
}

}  // namespace

MRule parse_m_rule(const std::string& s) {
  if (s == "hitting") return {MRule::Kind::hitting, 0};
  if (s.rfind("hitting+", 0) == 0) {
    return {MRule::Kind::hitting_offset, parse_int(s.substr(8), "m_rule offset")};
  }
  if (s.rfind("fixed:", 0) == 0) return {MRule::Kind::fixed, parse_int(s.substr(6), "m_rule M")};
  throw std::invalid_argument("m_rule must be fixed:M, hitting or hitting+K, got '" + s + "'");
}

std::string to_string(const MRule& rule) {
  switch (rule.kind) {
    case MRule::Kind::fixed:
      return "fixed:" + std::to_string(rule.value);
    case MRule::Kind::hitting:
      return "hitting";
    case MRule::Kind::hitting_offset:
      return "hitting+" + std::to_string(rule.value);
  }
  return "hitting";
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("RIGICOUNT_SEED")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig cfg;
  cfg.seed = default_seed();
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "n") {
      cfg.ns.clear();
      std::istringstream list(value);
      std::string item;
      while (std::getline(list, item, ',')) cfg.ns.push_back(static_cast<int>(parse_int(trim(item), "n")));
    } else if (key == "d") {
      cfg.d = static_cast<int>(parse_int(value, "d"));
    } else if (key == "samples") {
      cfg.samples = static_cast<int>(parse_int(value, "samples"));
    } else if (key == "seed") {
      cfg.seed = static_cast<std::uint64_t>(parse_int(value, "seed"));
    } else if (key == "m_rule") {
      cfg.m_rule = parse_m_rule(value);
    } else if (key == "output") {
      cfg.output = value;
    } else if (key == "threads") {
      cfg.threads = static_cast<int>(parse_int(value, "threads"));
    } else if (key == "timing") {
      if (value != "true" && value != "false") throw std::invalid_argument("timing must be true or false");
      cfg.timing = value == "true";
    } else {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (cfg.ns.empty()) throw std::invalid_argument("config: n list is empty");
  for (int n : cfg.ns)
    if (n < 2) throw std::invalid_argument("config: every n must be at least 2");
  if (cfg.d < 1) throw std::invalid_argument("config: d must be positive");
  if (cfg.samples < 0) throw std::invalid_argument("config: samples must be non-negative");
  if (cfg.threads < 1) throw std::invalid_argument("config: threads must be positive");
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  return parse_config(in);
}

std::string serialize_config(const ExperimentConfig& cfg) {
  std::ostringstream out;
  out << "n=";
  for (std::size_t i = 0; i < cfg.ns.size(); ++i) out << (i ? "," : "") << cfg.ns[i];
  out << "\nd=" << cfg.d << "\nsamples=" << cfg.samples << "\nseed=" << cfg.seed
      << "\nm_rule=" << to_string(cfg.m_rule) << "\n";
  if (!cfg.output.empty()) out << "output=" << cfg.output << "\n";
  out << "threads=" << cfg.threads << "\ntiming=" << (cfg.timing ? "true" : "false") << "\n";
  return out.str();
}

const std::vector<std::string>& experiment_flag_names() {
  static const std::vector<std::string> names{
      check::min_degree,     check::ordering_exists, check::suffix_exact_d,
      check::core_k_connected, check::core_d1_connected, check::peel_exact_d,
      check::core_globally_rigid};
  return names;
}

namespace {

ExperimentRow run_sample(const ExperimentConfig& cfg, int index, int n) {
  const auto start = std::chrono::steady_clock::now();
  ExperimentRow row;
  row.sample = index;
  row.n = n;
  row.d = cfg.d;
  row.exponent = "NA";
  row.flags.assign(experiment_flag_names().size(), "-");
  const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(index);
  try {
    const auto sigma = sample_edge_ordering(n, seed);
    switch (cfg.m_rule.kind) {
      case MRule::Kind::fixed:
        row.m = cfg.m_rule.value;
        break;
      case MRule::Kind::hitting:
        row.m = min_degree_threshold(sigma, cfg.d);
        break;
      case MRule::Kind::hitting_offset:
        row.m = std::clamp<std::int64_t>(min_degree_threshold(sigma, cfg.d) + cfg.m_rule.value, 0,
                                         pair_count(n));
        break;
    }
    const Graph g = graph_at(sigma, row.m);
    row.core_d1 = static_cast<int>(k_core(g, cfg.d + 1).survivors.size());
    row.core_k = static_cast<int>(k_core(g, cfg.d * (cfg.d + 1)).survivors.size());
    const auto cert = certify_count(g, cfg.d, seed);
    row.status = to_string(cert.status);
    if (cert.exponent) row.exponent = std::to_string(*cert.exponent);
    const auto& names = experiment_flag_names();
    for (const auto& e : cert.evidence) {
      const auto it = std::find(names.begin(), names.end(), e.name);
      if (it != names.end()) row.flags[it - names.begin()] = e.passed ? "1" : "0";
    }
  } catch (const std::exception& e) {
    row.status = "error";
    row.error = e.what();
    std::replace(row.error.begin(), row.error.end(), ',', ';');
    std::replace(row.error.begin(), row.error.end(), '\n', ' ');
  }
  if (cfg.timing) {
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
    std::ostringstream ms;
    ms << std::fixed << std::setprecision(3) << elapsed.count();
    row.wall_ms = ms.str();
  } else {
    row.wall_ms = "NA";
  }
  return row;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  std::vector<int> n_of;
  for (int n : cfg.ns)
    for (int i = 0; i < cfg.samples; ++i) n_of.push_back(n);
  ExperimentResult result;
  result.rows.resize(n_of.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n_of.size(); i = next++) {
      result.rows[i] = run_sample(cfg, static_cast<int>(i), n_of[i]);
    }
  };
  const int threads = std::max(1, std::min<int>(cfg.threads, static_cast<int>(n_of.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (int n : cfg.ns) {
    AggregateRow agg;
    agg.n = n;
    for (const auto& row : result.rows) {
      if (row.n != n) continue;
      ++agg.samples;
      if (row.status == to_string(CertificateStatus::certified_deterministic)) {
        ++agg.certified;
        ++agg.deterministic;
      } else if (row.status == to_string(CertificateStatus::certified_randomized)) {
        ++agg.certified;
        ++agg.randomized;
      } else if (row.status == to_string(CertificateStatus::refuted)) {
        ++agg.refuted;
      } else if (row.status == to_string(CertificateStatus::inconclusive)) {
        ++agg.inconclusive;
      } else {
        ++agg.errors;
      }
    }
    if (std::none_of(result.aggregates.begin(), result.aggregates.end(),
                     [&](const AggregateRow& a) { return a.n == n; })) {
      result.aggregates.push_back(agg);
    }
  }
  return result;
}

void write_csv(std::ostream& out, const ExperimentConfig& cfg, const ExperimentResult& result) {
  out << "#schema=1\n";
  out << "# d=" << cfg.d << " samples=" << cfg.samples << " seed=" << cfg.seed
      << " m_rule=" << to_string(cfg.m_rule) << "\n";
  out << "sample,n,M,d,core_d1,core_dd1,exponent,status";
  for (const auto& name : experiment_flag_names()) out << ',' << name;
  out << ",wall_ms,error\n";
  for (const auto& row : result.rows) {
    out << row.sample << ',' << row.n << ',' << row.m << ',' << row.d << ',' << row.core_d1 << ','
        << row.core_k << ',' << row.exponent << ',' << row.status;
    for (const auto& f : row.flags) out << ',' << f;
    out << ',' << row.wall_ms << ',' << row.error << '\n';
  }
  for (const auto& agg : result.aggregates) {
    out << "# aggregate n=" << agg.n << " samples=" << agg.samples << " certified=" << agg.certified
        << " fraction=" << std::fixed << std::setprecision(4) << agg.fraction()
        << " deterministic=" << agg.deterministic << " randomized=" << agg.randomized
        << " refuted=" << agg.refuted << " inconclusive=" << agg.inconclusive
        << " errors=" << agg.errors << '\n';
    out.unsetf(std::ios::floatfield);
  }
}

}  // namespace rigicount
