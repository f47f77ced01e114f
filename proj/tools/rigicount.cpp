#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "rigicount/certify.hpp"
#include "rigicount/enumerate.hpp"
#include "rigicount/experiment.hpp"
#include "rigicount/graph.hpp"
#include "rigicount/ordering.hpp"
#include "rigicount/props.hpp"
#include "rigicount/psd.hpp"
#include "rigicount/random.hpp"
#include "rigicount/rigidity.hpp"

using json = nlohmann::ordered_json;
using namespace rigicount;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kInconclusive = 2, kRefuted = 3, kNumeric = 4 };

Graph graph_from(const std::string& path) {
  if (path == "-") return read_graph(std::cin);
  return load_graph(path);
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

json complex_json(Complex z, Field field) {
  if (field == Field::real) return z.real();
  return json::array({z.real(), z.imag()});
}

json coords_json(const Eigen::MatrixXcd& coords, Field field) {
  json rows = json::array();
  for (int v = 0; v < coords.cols(); ++v) {
    json row = json::array();
    for (int i = 0; i < coords.rows(); ++i) row.push_back(complex_json(coords(i, v), field));
    rows.push_back(row);
  }
  return rows;
}

json matrix_json(const Eigen::MatrixXcd& m, Field field) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j), field));
    rows.push_back(row);
  }
  return rows;
}

json certificate_json(const CountCertificate& cert) {
  json j;
  j["status"] = to_string(cert.status);
  j["d"] = cert.d;
  j["n"] = cert.n;
  j["core_size"] = cert.core_size;
  j["exponent"] = cert.exponent ? json(*cert.exponent) : json(nullptr);
  if (cert.exponent) j["count"] = (BigInt(1) << *cert.exponent).str();
  j["first_failed"] = cert.first_failed ? json(*cert.first_failed) : json(nullptr);
  json ev = json::array();
  for (const auto& e : cert.evidence) {
    ev.push_back({{"check", e.name}, {"passed", e.passed}, {"detail", e.detail}});
  }
  j["evidence"] = ev;
  return j;
}

int status_code(CertificateStatus s) {
  switch (s) {
    case CertificateStatus::certified_deterministic:
    case CertificateStatus::certified_randomized:
      return kOk;
    case CertificateStatus::refuted:
      return kRefuted;
    case CertificateStatus::inconclusive:
      return kInconclusive;
  }
  return kInconclusive;
}

json report_json(const PropertyReport& r) {
  json j;
  j["property"] = r.property;
  j["verdict"] = to_string(r.verdict);
  json params = json::object();
  for (const auto& [name, value] : r.parameters) params[name] = value;
  j["parameters"] = params;
  json clauses = json::array();
  for (const auto& c : r.clauses) {
    clauses.push_back({{"name", c.name}, {"threshold", c.threshold},
                       {"verdict", to_string(c.verdict)}, {"detail", c.detail}});
  }
  j["clauses"] = clauses;
  j["witness"] = r.witness;
  return j;
}

PartialPSDMatrix matrix_from(const std::string& path) {
  if (path == "-") return read_partial_matrix(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open matrix file: " + path);
  return read_partial_matrix(in);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Realisation counts of random graphs: cores, certificates and enumeration"};
  app.require_subcommand(1);

  std::string graph_path;
  int d = 2;
  int k = 3;
  std::uint64_t seed = default_seed();

  auto* core_cmd = app.add_subcommand("core", "k-core with the removal trace");
  core_cmd->add_option("--graph", graph_path, "graph file (\"-\" for stdin)")->required();
  core_cmd->add_option("--k", k, "core order")->check(CLI::PositiveNumber);

  auto* order_cmd = app.add_subcommand("order", "construction ordering for dimension d");
  order_cmd->add_option("--graph", graph_path)->required();
  order_cmd->add_option("--d", d)->check(CLI::PositiveNumber);

  auto* rig_cmd = app.add_subcommand("rigidity", "generic rigidity and global rigidity");
  rig_cmd->add_option("--graph", graph_path)->required();
  rig_cmd->add_option("--d", d)->check(CLI::PositiveNumber);
  rig_cmd->add_option("--seed", seed);

  bool spherical = false;
  auto* cert_cmd = app.add_subcommand("certify", "certify the realisation count 2^(n-t)");
  cert_cmd->add_option("--graph", graph_path)->required();
  cert_cmd->add_option("--d", d);
  cert_cmd->add_option("--seed", seed);
  cert_cmd->add_flag("--spherical", spherical, "spherical count via the cone");

  std::string field_name = "complex";
  std::string lengths_path;
  int search = 0;
  bool with_solutions = true;
  auto* enum_cmd = app.add_subcommand("enumerate", "enumerate realisations of a 0-extension tower");
  enum_cmd->add_option("--graph", graph_path)->required();
  enum_cmd->add_option("--d", d)->check(CLI::PositiveNumber);
  enum_cmd->add_option("--field", field_name)->check(CLI::IsMember({"real", "complex"}));
  enum_cmd->add_option("--seed", seed);
  enum_cmd->add_option("--lengths", lengths_path, "\"u v squared_length\" lines");
  enum_cmd->add_option("--search", search, "real-count search over this many seeds");
  enum_cmd->add_flag("!--no-solutions", with_solutions, "omit coordinates from the output");

  std::string psd_action;
  int n = 6;
  std::int64_t m = -1;
  std::string matrix_path;
  auto* psd_cmd = app.add_subcommand("psd", "partial PSD matrices and their completions");
  psd_cmd->add_option("action", psd_action)
      ->required()
      ->check(CLI::IsMember({"sample", "core", "normalize", "predict", "complete"}));
  psd_cmd->add_option("--n", n);
  psd_cmd->add_option("--d", d);
  psd_cmd->add_option("--M", m);
  psd_cmd->add_option("--k", k);
  psd_cmd->add_option("--seed", seed);
  psd_cmd->add_option("--matrix", matrix_path);
  psd_cmd->add_option("--field", field_name)->check(CLI::IsMember({"real", "complex"}));

  std::string check_name;
  double eps = 0.5;
  bool exact = false;
  int samples = 10000;
  auto* props_cmd = app.add_subcommand("props", "property checkers");
  props_cmd->add_option("--graph", graph_path)->required();
  props_cmd->add_option("--check", check_name)
      ->required()
      ->check(CLI::IsMember({"adjacency", "sparsity", "core"}));
  props_cmd->add_option("--k", k);
  props_cmd->add_option("--eps", eps);
  props_cmd->add_flag("--exact", exact);
  props_cmd->add_option("--samples", samples);
  props_cmd->add_option("--seed", seed);

  std::string config_path;
  std::string output_path;
  auto* exp_cmd = app.add_subcommand("experiment", "Monte Carlo sweep to CSV");
  exp_cmd->add_option("--config", config_path, "key=value config file")->required();
  exp_cmd->add_option("--output", output_path, "overrides the config's output");

  std::string what;
  double p = -1.0;
  auto* sample_cmd = app.add_subcommand("sample", "random graphs, orderings and hitting times");
  sample_cmd->add_option("what", what)->required()->check(CLI::IsMember({"graph", "ordering", "hitting"}));
  sample_cmd->add_option("--n", n)->required();
  sample_cmd->add_option("--M", m);
  sample_cmd->add_option("--p", p);
  sample_cmd->add_option("--d", d);
  sample_cmd->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*core_cmd) {
      const auto g = graph_from(graph_path);
      const auto trace = k_core(g, k);
      json removed = json::array();
      for (const auto& r : trace.removed) {
        removed.push_back({{"vertex", r.vertex}, {"degree", r.degree}, {"neighbours", r.neighbours}});
      }
      emit({{"k", k}, {"survivors", trace.survivors}, {"removed", removed}});
      return kOk;
    }
    if (*order_cmd) {
      const auto g = graph_from(graph_path);
      const auto result = construct_ordering(g, d);
      if (const auto* co = std::get_if<ConstructionOrdering>(&result)) {
        emit({{"ok", true}, {"order", co->order}, {"s", co->s}, {"t", co->t}, {"d", co->d},
              {"k", co->k}, {"valid", validate_ordering(g, *co)}});
        return kOk;
      }
      const auto& f = std::get<OrderingFailure>(result);
      emit({{"ok", false},
            {"reason", f.reason == OrderingFailure::Reason::empty_k_core ? "empty-k-core" : "blocked"},
            {"blocking", f.blocking}});
      return kInconclusive;
    }
    if (*rig_cmd) {
      const auto g = graph_from(graph_path);
      const auto r = global_rigidity(g, d, seed);
      emit({{"d", d}, {"rigid", r.rigid}, {"globally_rigid", r.globally_rigid}, {"rank", r.rank},
            {"stress_rank", r.stress_rank}, {"trials", r.trials}});
      return kOk;
    }
    if (*cert_cmd) {
      const auto g = graph_from(graph_path);
      const auto cert = spherical ? spherical_count(g, d, seed) : certify_count(g, d, seed);
      auto j = certificate_json(cert);
      j["spherical"] = spherical;
      j["predicted"] = predicted_count(g, d).str();
      emit(j);
      return status_code(cert.status);
    }
    if (*enum_cmd) {
      const auto g = graph_from(graph_path);
      const Field field = parse_field(field_name);
      if (search > 0) {
        std::size_t best_real = 0, best_complex = 0;
        json counts = json::array();
        for (int i = 0; i < search; ++i) {
          const auto c = count_real_and_complex(g, d, seed + static_cast<std::uint64_t>(i));
          best_real = std::max(best_real, c.real);
          best_complex = std::max(best_complex, c.complex);
          counts.push_back({{"seed", seed + static_cast<std::uint64_t>(i)}, {"real", c.real},
                            {"complex", c.complex}});
        }
        emit({{"d", d}, {"seeds", search}, {"max_real_observed", best_real},
              {"complex", best_complex}, {"per_seed", counts}});
        return kOk;
      }
      const auto plan = plan_tower(g, d);
      LengthAssignment lengths;
      Eigen::MatrixXcd base(d, static_cast<int>(plan.base.size()));
      if (lengths_path.empty()) {
        const auto f = sample_framework(g, d, Field::real, seed);
        lengths = edge_lengths(f);
        for (std::size_t i = 0; i < plan.base.size(); ++i) base.col(static_cast<int>(i)) = f.coords.col(plan.base[i]);
      } else {
        std::ifstream in(lengths_path);
        if (!in) throw std::runtime_error("cannot open lengths file: " + lengths_path);
        lengths = read_lengths(in, g);
        const auto sub = induced_subgraph(g, plan.base);
        LengthAssignment base_lengths;
        for (const auto& [u, v] : sub.graph.edges()) {
          base_lengths.push_back(lengths[*g.edge_index(sub.to_original[u], sub.to_original[v])]);
        }
        base = embed_from_lengths(sub.graph, d, base_lengths, field, seed);
      }
      const auto sols = enumerate_realisations(g, lengths, plan, base, field);
      json j{{"d", d},
             {"field", to_string(field)},
             {"count", sols.count()},
             {"certified_structure", sols.certified_structure},
             {"assumption", sols.assumption},
             {"max_residual", sols.max_residual},
             {"base", plan.base}};
      if (with_solutions) {
        json all = json::array();
        for (const auto& s : sols.solutions) all.push_back(coords_json(s, field));
        j["solutions"] = all;
      }
      emit(j);
      return kOk;
    }
    if (*psd_cmd) {
      const Field field = parse_field(field_name);
      if (psd_action == "sample") {
        const auto a = sample_partial_psd(n, d, m < 0 ? pair_count(n) / 2 : m, seed);
        write_partial_matrix(std::cout, a);
        return kOk;
      }
      if (matrix_path.empty()) throw CLI::RequiredError("--matrix");
      const auto a = matrix_from(matrix_path);
      if (psd_action == "core") {
        emit({{"k", k}, {"survivors", partial_core(a, k)}});
        return kOk;
      }
      if (psd_action == "normalize") {
        const auto s = normalize_to_sphere(a);
        json edges = json::array();
        for (int e = 0; e < s.graph.num_edges(); ++e) {
          edges.push_back({{"u", s.graph.edges()[e].first}, {"v", s.graph.edges()[e].second},
                           {"squared_length", complex_json(s.lengths[e], a.field())}});
        }
        emit({{"n", a.n()}, {"edges", edges}});
        return kOk;
      }
      if (psd_action == "predict") {
        const auto pred = predicted_completions(a, a.d());
        emit({{"d", a.d()}, {"finite", pred.finite}, {"core_size", pred.core_size},
              {"count", pred.finite ? json(pred.count.str()) : json("infinite")}});
        return pred.finite ? kOk : kRefuted;
      }
      const auto res = enumerate_completions(a, a.d(), seed, field);
      json completions = json::array();
      for (const auto& b : res.completions) completions.push_back(matrix_json(b, field));
      emit({{"status", to_string(res.status)}, {"count", res.completions.size()},
            {"attempts", res.attempts}, {"note", res.note}, {"completions", completions}});
      if (res.status == CompletionStatus::inconclusive) return res.attempts > 0 ? kNumeric : kInconclusive;
      return kOk;
    }
    if (*props_cmd) {
      const auto g = graph_from(graph_path);
      const CheckMode mode = exact ? CheckMode::exact : CheckMode::sampled;
      PropertyReport r;
      if (check_name == "adjacency") r = check_adjacency(g, mode, seed, samples);
      else if (check_name == "sparsity") r = check_sparsity(g, mode);
      else r = core_report(g, k, eps);
      emit(report_json(r));
      return kOk;
    }
    if (*exp_cmd) {
      auto cfg = load_config(config_path);
      if (!output_path.empty()) cfg.output = output_path;
      const auto result = run_experiment(cfg);
      if (cfg.output.empty() || cfg.output == "-") {
        write_csv(std::cout, cfg, result);
      } else {
        std::ofstream out(cfg.output);
        if (!out) throw std::runtime_error("cannot write " + cfg.output);
        write_csv(out, cfg, result);
        if (!out) throw std::runtime_error("write failed: " + cfg.output);
      }
      return kOk;
    }
    if (*sample_cmd) {
      if (what == "graph") {
        if (p >= 0.0) {
          write_graph(std::cout, sample_gnp(n, p, seed));
        } else {
          const auto sigma = sample_edge_ordering(n, seed);
          write_graph(std::cout, graph_at(sigma, m < 0 ? min_degree_threshold(sigma, d) : m));
        }
      } else if (what == "ordering") {
        write_edge_ordering(std::cout, sample_edge_ordering(n, seed));
      } else {
        const auto h = hitting_times(sample_edge_ordering(n, seed), d);
        emit({{"n", n}, {"M", h.m}});
      }
      return kOk;
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const GenericityError& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
