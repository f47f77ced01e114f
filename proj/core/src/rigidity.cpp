#include "rigicount/rigidity.hpp"

#include <algorithm>
#include <stdexcept>

#include "rigicount/prng.hpp"

namespace rigicount {

namespace modp {

std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t s = a + b;
  return s >= kPrime ? s - kPrime : s;
}

std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }

std::uint64_t mul(std::uint64_t a, std::uint64_t b) { return (a * b) % kPrime; }

std::uint64_t inv(std::uint64_t a) {
  if (a == 0) throw std::domain_error("modp::inv of zero");
  std::uint64_t result = 1, base = a, e = kPrime - 2;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(Matrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int sel = -1;
    for (int r = row; r < m.rows; ++r) {
      if (m.at(r, col) != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != row) {
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(row, c));
    }
    const std::uint64_t scale = inv(m.at(row, col));
    for (int c = col; c < m.cols; ++c) m.at(row, c) = mul(m.at(row, c), scale);
    for (int r = 0; r < m.rows; ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      const std::uint64_t f = m.at(r, col);
      for (int c = col; c < m.cols; ++c) m.at(r, c) = sub(m.at(r, c), mul(f, m.at(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(Matrix m) {
  // Forward elimination only.
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int sel = -1;
    for (int r = row; r < m.rows; ++r) {
      if (m.at(r, col) != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != row) {
      for (int c = col; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(row, c));
    }
    const std::uint64_t scale = inv(m.at(row, col));
    for (int r = row + 1; r < m.rows; ++r) {
      if (m.at(r, col) == 0) continue;
      const std::uint64_t f = mul(m.at(r, col), scale);
      for (int c = col; c < m.cols; ++c) m.at(r, c) = sub(m.at(r, c), mul(f, m.at(row, c)));
    }
    ++row;
  }
  return row;
}

std::vector<std::vector<std::uint64_t>> left_kernel(const Matrix& m) {
  Matrix t(m.cols, m.rows);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) t.at(c, r) = m.at(r, c);
  const auto pivots = rref(t);
  std::vector<bool> is_pivot(t.cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<std::uint64_t>> basis;
  for (int free = 0; free < t.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint64_t> x(t.cols, 0);
    x[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = sub(0, t.at(static_cast<int>(i), free));
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace modp

namespace {

std::vector<std::uint64_t> random_coords(int n, int d, Prng& rng) {
  std::vector<std::uint64_t> coords(static_cast<std::size_t>(n) * d);
  for (auto& x : coords) x = rng.below(modp::kPrime);
  return coords;
}

int max_rigidity_rank(const Graph& g, int d) {
  const long long n = g.num_vertices();
  const long long bound = n >= d ? d * n - static_cast<long long>(d) * (d + 1) / 2 : n * (n - 1) / 2;
  return static_cast<int>(std::min<long long>(g.num_edges(), bound));
}

}  // namespace

modp::Matrix rigidity_matrix(const Graph& g, int d, const std::vector<std::uint64_t>& coords) {
  modp::Matrix r(g.num_edges(), g.num_vertices() * d);
  int row = 0;
  for (const auto& [u, v] : g.edges()) {
    for (int i = 0; i < d; ++i) {
      const std::uint64_t diff = modp::sub(coords[u * d + i], coords[v * d + i]);
      r.at(row, u * d + i) = diff;
      r.at(row, v * d + i) = modp::sub(0, diff);
    }
    ++row;
  }
  return r;
}

int rigidity_rank(const Graph& g, int d, std::uint64_t seed) {
  if (d < 1) throw std::invalid_argument("rigidity_rank: d must be positive");
  const int ceiling = max_rigidity_rank(g, d);
  int best = 0;
  for (int trial = 0; trial < kRigidityTrials && best < ceiling; ++trial) {
    auto rng = Prng::derive(seed, trial);
    const auto coords = random_coords(g.num_vertices(), d, rng);
    best = std::max(best, modp::rank(rigidity_matrix(g, d, coords)));
  }
  return best;
}

bool is_generically_d_rigid(const Graph& g, int d, std::uint64_t seed) {
  const int n = g.num_vertices();
  if (n <= d + 1) return g.is_complete();
  return rigidity_rank(g, d, seed) == d * n - d * (d + 1) / 2;
}

GlobalRigidityResult global_rigidity(const Graph& g, int d, std::uint64_t seed) {
  if (d < 1) throw std::invalid_argument("global_rigidity: d must be positive");
  const int n = g.num_vertices();
  GlobalRigidityResult result;
  if (n <= d + 1) {
    result.rigid = result.globally_rigid = g.is_complete();
    result.rank = g.num_edges();
    result.trials = 0;
    return result;
  }
  const int target_rank = d * n - d * (d + 1) / 2;
  const int target_stress = n - d - 1;
  result.trials = 0;
  for (int trial = 0; trial < kRigidityTrials; ++trial) {
    ++result.trials;
    auto rng = Prng::derive(seed, trial);
    const auto coords = random_coords(n, d, rng);
    const auto r = rigidity_matrix(g, d, coords);
    const int rk = modp::rank(r);
    result.rank = std::max(result.rank, rk);
    if (rk == target_rank) {
      const auto kernel = modp::left_kernel(r);
      std::vector<std::uint64_t> omega(g.num_edges(), 0);
      for (const auto& basis_vec : kernel) {
        const std::uint64_t c = rng.below(modp::kPrime);
        for (std::size_t e = 0; e < omega.size(); ++e)
          omega[e] = modp::add(omega[e], modp::mul(c, basis_vec[e]));
      }
      modp::Matrix stress(n, n);
      for (int e = 0; e < g.num_edges(); ++e) {
        const auto [u, v] = g.edges()[e];
        stress.at(u, v) = stress.at(v, u) = omega[e];
        stress.at(u, u) = modp::sub(stress.at(u, u), omega[e]);
        stress.at(v, v) = modp::sub(stress.at(v, v), omega[e]);
      }
      result.stress_rank = std::max(result.stress_rank, modp::rank(std::move(stress)));
    }
    if (result.rank == target_rank && result.stress_rank == target_stress) break;
  }
  result.rigid = result.rank == target_rank;
  result.globally_rigid = result.rigid && result.stress_rank == target_stress;
  return result;
}

bool is_generically_globally_d_rigid(const Graph& g, int d, std::uint64_t seed) {
  return global_rigidity(g, d, seed).globally_rigid;
}

}  // namespace rigicount
