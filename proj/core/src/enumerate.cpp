#include "rigicount/enumerate.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <istream>
#include <set>
#include <sstream>

#include "rigicount/prng.hpp"

namespace rigicount {

std::string to_string(Field f) { return f == Field::real ? "real" : "complex"; }

Field parse_field(const std::string& s) {
  if (s == "real") return Field::real;
  if (s == "complex") return Field::complex;
  throw std::invalid_argument("field must be 'real' or 'complex', got '" + s + "'");
}

namespace {

// Bilinear (non-Hermitian) dot product.
Complex bdot(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  return (a.array() * b.array()).sum();
}

Complex squared_length(const Eigen::MatrixXcd& coords, Vertex u, Vertex v) {
  const Eigen::VectorXcd diff = coords.col(u) - coords.col(v);
  return bdot(diff, diff);
}

double relative_error(Complex value, Complex target) {
  return std::abs(value - target) / std::max(1.0, std::abs(target));
}

}  // namespace

Framework sample_framework(const Graph& g, int d, Field field, std::uint64_t seed) {
  if (d < 1) throw std::invalid_argument("sample_framework: d must be positive");
  Prng rng(seed);
  Framework f{g, d, field, Eigen::MatrixXcd(d, g.num_vertices())};
  for (int v = 0; v < g.num_vertices(); ++v) {
    for (int i = 0; i < d; ++i) {
      const double re = rng.uniform(-1.0, 1.0);
      const double im = field == Field::complex ? rng.uniform(-1.0, 1.0) : 0.0;
      f.coords(i, v) = Complex(re, im);
    }
  }
  return f;
}

LengthAssignment edge_lengths(const Framework& f) {
  LengthAssignment out;
  out.reserve(f.graph.num_edges());
  for (const auto& [u, v] : f.graph.edges()) out.push_back(squared_length(f.coords, u, v));
  return out;
}

Framework apply_random_isometry(const Framework& f, std::uint64_t seed, bool reflect) {
  Prng rng(seed);
  const int d = f.d;
  Eigen::MatrixXd gauss(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) gauss(i, j) = rng.normal();
  Eigen::MatrixXd q = gauss.householderQr().householderQ();
  if ((q.determinant() < 0) != reflect) q.col(0) *= -1.0;
  Eigen::VectorXcd shift(d);
  for (int i = 0; i < d; ++i) shift(i) = rng.uniform(-1.0, 1.0);
  Framework out = f;
  out.coords = (q.cast<Complex>() * f.coords).colwise() + shift;
  return out;
}

Complex parse_complex(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty numeric value");
  auto to_double = [&](const std::string& part) {
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    std::size_t used = 0;
    const double v = std::stod(part, &used);
    if (used != part.size()) throw std::invalid_argument("bad numeric value '" + text + "'");
    return v;
  };
  if (s.back() != 'i') return {to_double(s), 0.0};
  const std::string body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not an exponent sign.
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      return {to_double(body.substr(0, i)), to_double(body.substr(i))};
    }
  }
  return {0.0, to_double(body)};
}

std::string format_complex(Complex z) {
  std::ostringstream out;
  out.precision(17);
  out << z.real();
  if (z.imag() != 0.0) out << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << 'i';
  return out.str();
}

LengthAssignment read_lengths(std::istream& in, const Graph& g) {
  LengthAssignment out(g.num_edges());
  std::vector<bool> seen(g.num_edges(), false);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    long long u = 0, v = 0;
    std::string value;
    if (!(row >> u >> v)) continue;
    std::getline(row, value);
    const auto idx = g.edge_index(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (!idx) throw std::runtime_error("lengths file: " + std::to_string(u) + " " +
                                       std::to_string(v) + " is not an edge");
    out[*idx] = parse_complex(value);
    seen[*idx] = true;
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    if (!seen[e]) throw std::runtime_error("lengths file: missing edge " +
                                           std::to_string(g.edges()[e].first) + " " +
                                           std::to_string(g.edges()[e].second));
  }
  return out;
}

bool TowerPlan::pure() const {
  return std::all_of(extensions.begin(), extensions.end(),
                     [](const Extension& e) { return e.extra.empty(); });
}

TowerPlan plan_tower(const Graph& g, int d) {
  if (d < 1) throw std::invalid_argument("plan_tower: d must be positive");
  const int n = g.num_vertices();
  if (n < d + 1) throw std::invalid_argument("plan_tower: fewer than d+1 vertices");
  std::vector<int> deg(n);
  std::vector<bool> alive(n, true);
  std::set<Vertex> low;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= d) low.insert(v);
  }
  std::vector<Extension> peeled;
  int remaining = n;
  while (!low.empty() && remaining > d + 1) {
    const Vertex v = *low.begin();
    low.erase(low.begin());
    if (deg[v] < d) {
      throw std::invalid_argument("plan_tower: vertex " + std::to_string(v) + " has only " +
                                  std::to_string(deg[v]) + " neighbours when peeled");
    }
    Extension ext{v, {}, {}};
    for (Vertex w : g.neighbours(v)) {
      if (!alive[w]) continue;
      ext.anchors.push_back(w);
      if (--deg[w] == d) low.insert(w);
    }
    alive[v] = false;
    --remaining;
    peeled.push_back(std::move(ext));
  }
  TowerPlan plan;
  plan.d = d;
  for (int v = 0; v < n; ++v)
    if (alive[v]) plan.base.push_back(v);
  if (remaining == d + 1 && !induced_subgraph(g, plan.base).graph.is_complete()) {
    throw std::invalid_argument("plan_tower: peel reached d+1 vertices that are not complete");
  }
  plan.extensions.assign(peeled.rbegin(), peeled.rend());
  return plan;
}

TowerPlan plan_from_order(const Graph& g, int d, const std::vector<Vertex>& order,
                          int base_size) {
  const int n = g.num_vertices();
  if (static_cast<int>(order.size()) != n || base_size < d + 1 || base_size > n) {
    throw std::invalid_argument("plan_from_order: bad order or base size");
  }
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  TowerPlan plan;
  plan.d = d;
  plan.base.assign(order.begin(), order.begin() + base_size);
  for (int i = base_size; i < n; ++i) {
    const Vertex v = order[i];
    std::vector<Vertex> earlier;
    for (Vertex u : g.neighbours(v))
      if (pos[u] < i) earlier.push_back(u);
    std::sort(earlier.begin(), earlier.end(), [&](Vertex a, Vertex b) { return pos[a] < pos[b]; });
    if (static_cast<int>(earlier.size()) < d) {
      throw std::invalid_argument("plan_from_order: vertex " + std::to_string(v) +
                                  " has fewer than d earlier neighbours");
    }
    Extension ext{v, {earlier.begin(), earlier.begin() + d}, {earlier.begin() + d, earlier.end()}};
    plan.extensions.push_back(std::move(ext));
  }
  return plan;
}

Eigen::MatrixXcd canonical_pin(const Eigen::MatrixXcd& coords, const std::vector<Vertex>& base) {
  const int d = static_cast<int>(coords.rows());
  if (static_cast<int>(base.size()) < d + 1) {
    throw std::invalid_argument("canonical_pin: base needs d+1 vertices");
  }
  const Eigen::VectorXcd origin = coords.col(base[0]);
  const Eigen::MatrixXcd shifted = coords.colwise() - origin;
  Eigen::MatrixXcd frame(d, d);
  for (int j = 0; j < d; ++j) {
    Eigen::VectorXcd v = shifted.col(base[j + 1]);
    for (int i = 0; i < j; ++i) v -= bdot(frame.col(i), v) * frame.col(i);
    const Complex norm2 = bdot(v, v);
    if (std::abs(norm2) < 1e-14) throw GenericityError("canonical_pin: degenerate base");
    frame.col(j) = v / std::sqrt(norm2);
  }
  return frame.transpose() * shifted;
}

double max_relative_residual(const Graph& g, const LengthAssignment& lengths,
                             const Eigen::MatrixXcd& coords) {
  double worst = 0.0;
  for (int e = 0; e < g.num_edges(); ++e) {
    const auto [u, v] = g.edges()[e];
    worst = std::max(worst, relative_error(squared_length(coords, u, v), lengths[e]));
  }
  return worst;
}

namespace {

class TowerEnumerator {
 public:
  TowerEnumerator(const Graph& g, const LengthAssignment& lengths, const TowerPlan& plan,
                  Field field, const EnumerateOptions& opts)
      : g_(g), lengths_(lengths), plan_(plan), field_(field), opts_(opts) {
    is_base_.assign(g.num_vertices(), false);
    for (Vertex v : plan.base) is_base_[v] = true;
    var_of_.assign(g.num_vertices(), -1);
    for (std::size_t i = 0; i < plan.extensions.size(); ++i)
      var_of_[plan.extensions[i].vertex] = static_cast<int>(i);
    for (int e = 0; e < g.num_edges(); ++e) {
      const auto [u, v] = g.edges()[e];
      if (!is_base_[u] || !is_base_[v]) free_edges_.push_back(e);
    }
  }

  SolutionSet run(Eigen::MatrixXcd coords) {
    out_.field = field_;
    out_.d = plan_.d;
    out_.certified_structure = plan_.pure();
    descend(coords, 0);
    return std::move(out_);
  }

 private:
  Complex length(Vertex u, Vertex v) const { return lengths_[*g_.edge_index(u, v)]; }

  std::vector<Eigen::VectorXcd> sphere_intersections(const Eigen::MatrixXcd& coords,
                                                     const Extension& ext) const {
    const int d = plan_.d;
    const Eigen::VectorXcd a1 = coords.col(ext.anchors[0]);
    const Complex l1 = length(ext.vertex, ext.anchors[0]);
    Eigen::VectorXcd u(d), x0(d);
    if (d == 1) {
      u(0) = 1.0;
      x0(0) = 0.0;
    } else {
      Eigen::MatrixXcd a(d - 1, d);
      Eigen::VectorXcd b(d - 1);
      for (int j = 1; j < d; ++j) {
        const Eigen::VectorXcd aj = coords.col(ext.anchors[j]);
        a.row(j - 1) = 2.0 * (aj - a1).transpose();
        b(j - 1) = bdot(aj, aj) - bdot(a1, a1) - length(ext.vertex, ext.anchors[j]) + l1;
      }
      Eigen::FullPivLU<Eigen::MatrixXcd> lu(a);
      if (lu.rank() < d - 1) throw GenericityError("anchors are affinely dependent");
      u = lu.kernel().col(0);
      u /= u.norm();
      x0 = lu.solve(b);
    }
    const Eigen::VectorXcd w = x0 - a1;
    const Complex alpha = bdot(u, u);
    const Complex beta = bdot(u, w);
    const Complex gamma = bdot(w, w) - l1;
    if (std::abs(alpha) < opts_.degeneracy_tol) throw GenericityError("isotropic solution line");
    const Complex disc = beta * beta - alpha * gamma;
    if (std::abs(disc) < opts_.degeneracy_tol) {
      throw GenericityError("near-tangent sphere intersection at vertex " +
                            std::to_string(ext.vertex));
    }
    if (field_ == Field::real && disc.real() < 0.0) return {};
    const Complex root = std::sqrt(disc);
    return {x0 + ((-beta + root) / alpha) * u, x0 + ((-beta - root) / alpha) * u};
  }

  bool passes_filters(const Eigen::MatrixXcd& coords, const Extension& ext) const {
    for (Vertex y : ext.extra) {
      if (relative_error(squared_length(coords, ext.vertex, y), length(ext.vertex, y)) >
          opts_.filter_tol)
        return false;
    }
    return true;
  }

  void descend(Eigen::MatrixXcd& coords, std::size_t level) {
    if (level == plan_.extensions.size()) {
      leaf(coords);
      return;
    }
    const auto& ext = plan_.extensions[level];
    for (const auto& x : sphere_intersections(coords, ext)) {
      coords.col(ext.vertex) = x;
      if (passes_filters(coords, ext)) descend(coords, level + 1);
    }
  }

  void refine(Eigen::MatrixXcd& coords) const {
    const int d = plan_.d;
    const int unknowns = d * static_cast<int>(plan_.extensions.size());
    if (unknowns == 0) return;
    const int m = static_cast<int>(free_edges_.size());
    for (int iter = 0; iter < opts_.newton_iterations; ++iter) {
      Eigen::VectorXcd f(m);
      Eigen::MatrixXcd jac = Eigen::MatrixXcd::Zero(m, unknowns);
      for (int row = 0; row < m; ++row) {
        const int e = free_edges_[row];
        const auto [u, v] = g_.edges()[e];
        const Eigen::VectorXcd diff = coords.col(u) - coords.col(v);
        f(row) = bdot(diff, diff) - lengths_[e];
        if (var_of_[u] >= 0) jac.block(row, var_of_[u] * d, 1, d) = 2.0 * diff.transpose();
        if (var_of_[v] >= 0) jac.block(row, var_of_[v] * d, 1, d) = -2.0 * diff.transpose();
      }
      if (f.cwiseAbs().maxCoeff() < 1e-15) return;
      const Eigen::VectorXcd step = jac.colPivHouseholderQr().solve(-f);
      for (std::size_t i = 0; i < plan_.extensions.size(); ++i)
        coords.col(plan_.extensions[i].vertex) += step.segment(static_cast<int>(i) * d, d);
      if (field_ == Field::real) coords = coords.real().cast<Complex>();
      if (step.cwiseAbs().maxCoeff() < 1e-15) return;
    }
  }

  void leaf(const Eigen::MatrixXcd& branch) {
    Eigen::MatrixXcd coords = branch;
    refine(coords);
    const double residual = max_relative_residual(g_, lengths_, coords);
    if (!(residual < opts_.residual_tol)) {
      if (out_.certified_structure) {
        throw GenericityError("refined branch misses residual tolerance (" +
                              std::to_string(residual) + ")");
      }
      return;
    }
    out_.max_residual = std::max(out_.max_residual, residual);
    Eigen::MatrixXcd pinned = canonical_pin(coords, plan_.base);
    for (std::size_t i = 0; i < out_.solutions.size(); ++i) {
      if ((out_.solutions[i] - pinned).cwiseAbs().maxCoeff() <= opts_.separation_tol) {
        out_.near_degenerate[i] = true;
        return;
      }
    }
    out_.solutions.push_back(std::move(pinned));
    out_.near_degenerate.push_back(false);
  }

  const Graph& g_;
  const LengthAssignment& lengths_;
  const TowerPlan& plan_;
  Field field_;
  EnumerateOptions opts_;
  std::vector<bool> is_base_;
  std::vector<int> var_of_;
  std::vector<int> free_edges_;
  SolutionSet out_;
};

}  // namespace

SolutionSet enumerate_realisations(const Graph& g, const LengthAssignment& lengths,
                                   const TowerPlan& plan, const Eigen::MatrixXcd& base_coords,
                                   Field field, const EnumerateOptions& opts) {
  const int d = plan.d;
  if (d < 1) throw std::invalid_argument("enumerate_realisations: d must be positive");
  if (static_cast<int>(plan.base.size()) < d + 1) {
    throw std::invalid_argument("enumerate_realisations: base has fewer than d+1 vertices");
  }
  if (static_cast<int>(lengths.size()) != g.num_edges()) {
    throw std::invalid_argument("enumerate_realisations: one length per edge required");
  }
  if (base_coords.rows() != d || base_coords.cols() != static_cast<int>(plan.base.size())) {
    throw std::invalid_argument("enumerate_realisations: base_coords must be d x |base|");
  }
  if (plan.base.size() + plan.extensions.size() != static_cast<std::size_t>(g.num_vertices())) {
    throw std::invalid_argument("enumerate_realisations: plan does not cover the graph");
  }
  Eigen::MatrixXcd coords = Eigen::MatrixXcd::Zero(d, g.num_vertices());
  for (std::size_t i = 0; i < plan.base.size(); ++i) {
    coords.col(plan.base[i]) = base_coords.col(static_cast<int>(i));
  }
  if (field == Field::real) coords = coords.real().cast<Complex>();
  return TowerEnumerator(g, lengths, plan, field, opts).run(std::move(coords));
}

RealComplexCount count_real_and_complex(const Graph& g, int d, std::uint64_t seed, int retries,
                                        const EnumerateOptions& opts) {
  const auto plan = plan_tower(g, d);
  RealComplexCount out;
  for (int attempt = 0; attempt <= retries; ++attempt) {
    ++out.attempts;
    const auto framework =
        sample_framework(g, d, Field::real, Prng::derive(seed, attempt).next());
    const auto lengths = edge_lengths(framework);
    Eigen::MatrixXcd base(d, static_cast<int>(plan.base.size()));
    for (std::size_t i = 0; i < plan.base.size(); ++i)
      base.col(static_cast<int>(i)) = framework.coords.col(plan.base[i]);
    try {
      out.real = enumerate_realisations(g, lengths, plan, base, Field::real, opts).count();
      out.complex = enumerate_realisations(g, lengths, plan, base, Field::complex, opts).count();
    } catch (const GenericityError&) {
      continue;
    }
    if (out.real < 1 || out.real > out.complex) {
      throw std::logic_error("count_real_and_complex: expected 1 <= real <= complex");
    }
    return out;
  }
  throw GenericityError("count_real_and_complex: retry budget exhausted");
}

Eigen::MatrixXcd embed_from_lengths(const Graph& g, int d, const LengthAssignment& lengths,
                                    Field field, std::uint64_t seed, int restarts,
                                    double residual_tol) {
  const int n = g.num_vertices();
  const int m = g.num_edges();
  const int unknowns = d * n;
  double scale = 0.0;
  for (const auto& l : lengths) scale += std::abs(l);
  scale = m > 0 ? std::sqrt(scale / m) : 1.0;

  auto residuals = [&](const Eigen::MatrixXcd& x) {
    Eigen::VectorXcd f(m);
    for (int e = 0; e < m; ++e) {
      const auto [u, v] = g.edges()[e];
      f(e) = squared_length(x, u, v) - lengths[e];
    }
    return f;
  };

  Prng rng(seed);
  for (int attempt = 0; attempt < restarts; ++attempt) {
    Eigen::MatrixXcd x(d, n);
    for (int v = 0; v < n; ++v)
      for (int i = 0; i < d; ++i)
        x(i, v) = Complex(rng.uniform(-scale, scale),
                          field == Field::complex ? rng.uniform(-scale, scale) : 0.0);
    Eigen::VectorXcd f = residuals(x);
    double lambda = 1e-3;
    for (int iter = 0; iter < 300; ++iter) {
      if (max_relative_residual(g, lengths, x) < residual_tol * 1e-3) break;
      Eigen::MatrixXcd jac = Eigen::MatrixXcd::Zero(m, unknowns);
      for (int e = 0; e < m; ++e) {
        const auto [u, v] = g.edges()[e];
        const Eigen::VectorXcd diff = x.col(u) - x.col(v);
        jac.block(e, u * d, 1, d) = 2.0 * diff.transpose();
        jac.block(e, v * d, 1, d) = -2.0 * diff.transpose();
      }
      const Eigen::MatrixXcd normal = jac.adjoint() * jac;
      const Eigen::VectorXcd rhs = -(jac.adjoint() * f);
      bool improved = false;
      for (int tries = 0; tries < 12 && !improved; ++tries) {
        Eigen::MatrixXcd damped = normal;
        damped.diagonal().array() += lambda;
        const Eigen::VectorXcd step = damped.ldlt().solve(rhs);
        Eigen::MatrixXcd trial = x + Eigen::Map<const Eigen::MatrixXcd>(step.data(), d, n);
        const Eigen::VectorXcd ft = residuals(trial);
        if (ft.norm() < f.norm()) {
          x = std::move(trial);
          f = ft;
          lambda = std::max(lambda / 3.0, 1e-12);
          improved = true;
        } else {
          lambda *= 4.0;
        }
      }
      if (!improved) break;
    }
    if (max_relative_residual(g, lengths, x) < residual_tol) return x;
  }
  throw GenericityError("embed_from_lengths: no restart converged");
}

}  // namespace rigicount
