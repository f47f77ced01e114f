#include "rigicount/psd.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "rigicount/prng.hpp"
#include "rigicount/random.hpp"

namespace rigicount {

namespace {

Graph graph_of(int n, const std::map<Edge, Complex>& off) {
  std::vector<Edge> edges;
  edges.reserve(off.size());
  for (const auto& [e, value] : off) edges.push_back(e);
  return Graph(n, std::move(edges));
}

}  // namespace

PartialPSDMatrix::PartialPSDMatrix(int n, int d, std::vector<Complex> diag,
                                   std::map<Edge, Complex> off, Field field)
    : n_(n), d_(d), field_(field), diag_(std::move(diag)) {
  if (n < 1 || d < 1 || d > n) throw std::invalid_argument("partial matrix: need 1 <= d <= n");
  if (static_cast<int>(diag_.size()) != n) {
    throw std::invalid_argument("partial matrix: expected n diagonal entries");
  }
  for (auto [e, value] : off) {
    auto [i, j] = e;
    if (i == j) throw std::invalid_argument("partial matrix: diagonal entry given as off-diagonal");
    if (i < 0 || j < 0 || i >= n || j >= n) {
      throw std::invalid_argument("partial matrix: index out of range");
    }
    if (i > j) std::swap(i, j);
    if (!off_.emplace(Edge{i, j}, value).second) {
      throw std::invalid_argument("partial matrix: entry given twice");
    }
  }
  graph_ = graph_of(n, off_);
}

std::optional<Complex> PartialPSDMatrix::known(int i, int j) const {
  if (i == j) return diag_.at(i);
  if (i > j) std::swap(i, j);
  const auto it = off_.find({i, j});
  if (it == off_.end()) return std::nullopt;
  return it->second;
}

PartialPSDMatrix sample_partial_psd(int n, int d, std::int64_t m, std::uint64_t seed) {
  if (d < 1 || d > n) throw std::invalid_argument("sample_partial_psd: need 1 <= d <= n");
  if (m < 0 || m > pair_count(n)) throw std::invalid_argument("sample_partial_psd: M out of range");
  auto rng = Prng::derive(seed, 0);
  Eigen::MatrixXd p(d, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < d; ++i) p(i, j) = rng.normal();
  const Eigen::MatrixXd b = p.transpose() * p;
  const Graph g = n >= 2 ? graph_at(sample_edge_ordering(n, Prng::derive(seed, 1).next()), m)
                         : Graph(n);
  std::vector<Complex> diag(n);
  for (int i = 0; i < n; ++i) diag[i] = b(i, i);
  std::map<Edge, Complex> off;
  for (const auto& [u, v] : g.edges()) off.emplace(Edge{u, v}, b(u, v));
  PartialPSDMatrix a(n, d, std::move(diag), std::move(off), Field::real);
  a.hidden_factor_ = std::move(p);
  return a;
}

std::vector<int> partial_core(const PartialPSDMatrix& a, int k) {
  if (k < 1) throw std::invalid_argument("partial_core: k must be positive");
  if (k == 1) {
    std::vector<int> all(a.n());
    for (int i = 0; i < a.n(); ++i) all[i] = i;
    return all;
  }
  return k_core(a.underlying_graph(), k - 1).survivors;
}

SphericalInstance normalize_to_sphere(const PartialPSDMatrix& a) {
  for (int i = 0; i < a.n(); ++i) {
    if (a.diag()[i] == Complex(0.0)) {
      throw std::invalid_argument("normalize_to_sphere: zero diagonal entry at " +
                                  std::to_string(i));
    }
  }
  SphericalInstance out{a.underlying_graph(), {}};
  for (const auto& [e, value] : a.off()) {
    const auto [i, j] = e;
    out.lengths.push_back(2.0 - 2.0 * value / std::sqrt(a.diag()[i] * a.diag()[j]));
  }
  return out;
}

CompletionPrediction predicted_completions(const PartialPSDMatrix& a, int d) {
  if (d < 1) throw std::invalid_argument("predicted_completions: d must be positive");
  CompletionPrediction out;
  for (int i = 0; i < a.n(); ++i) {
    if (a.known_count(i) < d) out.finite = false;
  }
  out.core_size = static_cast<int>(partial_core(a, d + 1).size());
  if (out.finite) out.count = BigInt(1) << (a.n() - out.core_size);
  return out;
}

std::string to_string(CompletionStatus s) {
  switch (s) {
    case CompletionStatus::certified:
      return "certified";
    case CompletionStatus::uncertified:
      return "uncertified";
    case CompletionStatus::inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

namespace {

bool verify_completions(const PartialPSDMatrix& a, int d,
                        const std::vector<Eigen::MatrixXcd>& completions,
                        const CompletionOptions& opts, std::string& why) {
  const int n = a.n();
  for (const auto& b : completions) {
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        const auto value = a.known(i, j);
        if (value && std::abs(b(i, j) - *value) > opts.entry_tol * std::max(1.0, std::abs(*value))) {
          why = "completion misses known entry (" + std::to_string(i) + "," + std::to_string(j) + ")";
          return false;
        }
      }
    }
    if (d < n) {
      const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXcd>(b).singularValues();
      if (sv(d) > opts.rank_tol * std::max(sv(0), 1e-300)) {
        why = "completion has rank above d";
        return false;
      }
    }
  }
  for (std::size_t x = 0; x < completions.size(); ++x) {
    for (std::size_t y = x + 1; y < completions.size(); ++y) {
      if ((completions[x] - completions[y]).cwiseAbs().maxCoeff() <= opts.distinct_tol) {
        why = "two completions coincide";
        return false;
      }
    }
  }
  return true;
}

}  // namespace

CompletionResult enumerate_completions(const PartialPSDMatrix& a, int d, std::uint64_t seed,
                                       Field field, const CompletionOptions& opts) {
  if (d < 1 || d > a.n()) throw std::invalid_argument("enumerate_completions: need 1 <= d <= n");
  const int n = a.n();
  const Graph h = cone(a.underlying_graph());
  LengthAssignment lengths;
  bool real_data = true;
  for (const auto& [u, v] : h.edges()) {
    const Complex len = v == n ? a.diag()[u] : a.diag()[u] + a.diag()[v] - 2.0 * *a.known(u, v);
    real_data = real_data && len.imag() == 0.0;
    lengths.push_back(len);
  }

  CompletionResult out;
  out.status = certify_count(h, d, seed).certified() ? CompletionStatus::certified
                                                       : CompletionStatus::uncertified;
  TowerPlan plan;
  try {
    plan = plan_tower(h, d);
  } catch (const std::invalid_argument& e) {
    out.status = CompletionStatus::inconclusive;
    out.note = e.what();
    return out;
  }
  if (!plan.pure()) out.status = CompletionStatus::uncertified;

  const auto base = induced_subgraph(h, plan.base);
  LengthAssignment base_lengths;
  for (const auto& [u, v] : base.graph.edges()) {
    base_lengths.push_back(lengths[*h.edge_index(base.to_original[u], base.to_original[v])]);
  }

  for (int attempt = 0; attempt <= opts.retries; ++attempt) {
    ++out.attempts;
    const std::uint64_t attempt_seed = Prng::derive(seed, attempt).next();
    try {
      Eigen::MatrixXcd base_coords;
      try {
        base_coords = embed_from_lengths(base.graph, d, base_lengths,
                                         real_data ? Field::real : Field::complex, attempt_seed);
      } catch (const GenericityError&) {
        if (!real_data) throw;
        base_coords =
            embed_from_lengths(base.graph, d, base_lengths, Field::complex, attempt_seed);
      }
      const auto sols = enumerate_realisations(h, lengths, plan, base_coords, field, opts.enumerate);
      std::vector<Eigen::MatrixXcd> completions;
      for (const auto& coords : sols.solutions) {
        const Eigen::MatrixXcd q = coords.leftCols(n).colwise() - coords.col(n);
        completions.push_back(q.transpose() * q);
      }
      std::string why;
      if (!verify_completions(a, d, completions, opts, why)) {
        out.note = why;
        continue;
      }
      out.completions = std::move(completions);
      out.note.clear();
      return out;
    } catch (const GenericityError& e) {
      out.note = e.what();
    }
  }
  out.status = CompletionStatus::inconclusive;
  out.completions.clear();
  if (out.note.empty()) out.note = "retry budget exhausted";
  return out;
}

PartialPSDMatrix read_partial_matrix(std::istream& in, Field field) {
  int n = 0, d = 0;
  if (!(in >> n >> d)) throw std::runtime_error("matrix file: expected header \"n d\"");
  auto next_value = [&](const char* what) {
    std::string token;
    if (!(in >> token)) throw std::runtime_error(std::string("matrix file: missing ") + what);
    const Complex z = parse_complex(token);
    if (z.imag() != 0.0) field = Field::complex;
    return z;
  };
  std::vector<Complex> diag(n > 0 ? n : 0);
  for (auto& value : diag) value = next_value("diagonal entry");
  std::map<Edge, Complex> off;
  int i = 0, j = 0;
  while (in >> i >> j) {
    const Complex value = next_value("entry value");
    if (i > j) std::swap(i, j);
    if (!off.emplace(Edge{i, j}, value).second) {
      throw std::runtime_error("matrix file: entry given twice");
    }
  }
  if (!in.eof()) throw std::runtime_error("matrix file: malformed entry line");
  try {
    return PartialPSDMatrix(n, d, std::move(diag), std::move(off), field);
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("matrix file: ") + e.what());
  }
}

void write_partial_matrix(std::ostream& out, const PartialPSDMatrix& a) {
  out << a.n() << ' ' << a.d() << '\n';
  for (const auto& value : a.diag()) out << format_complex(value) << '\n';
  for (const auto& [e, value] : a.off()) {
    out << e.first << ' ' << e.second << ' ' << format_complex(value) << '\n';
  }
}

}  // namespace rigicount
