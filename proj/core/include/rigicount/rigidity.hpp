#pragma once

#include <cstdint>
#include <vector>

#include "rigicount/graph.hpp"

namespace rigicount {

// Arithmetic modulo the Mersenne prime 2^31 - 1.
namespace modp {
inline constexpr std::uint64_t kPrime = 2147483647ULL;
std::uint64_t add(std::uint64_t a, std::uint64_t b);
std::uint64_t sub(std::uint64_t a, std::uint64_t b);
std::uint64_t mul(std::uint64_t a, std::uint64_t b);
std::uint64_t inv(std::uint64_t a);

// Dense row-major matrix over the field.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::uint64_t> data;
  Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0) {}
  std::uint64_t& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  std::uint64_t at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
};

int rank(Matrix m);
// Basis of {x : x^T m = 0}, one vector per row of the result.
std::vector<std::vector<std::uint64_t>> left_kernel(const Matrix& m);
}  // namespace modp

inline constexpr int kRigidityTrials = 3;

// Rank of the |E| x dn rigidity matrix at uniformly random coordinates in
// F_p, maximised over kRigidityTrials independent trials.
int rigidity_rank(const Graph& g, int d, std::uint64_t seed);

// The rigidity matrix of g at coordinates `coords` (n*d entries, vertex-major).
modp::Matrix rigidity_matrix(const Graph& g, int d, const std::vector<std::uint64_t>& coords);

// Monte Carlo: a false "false" has probability at most (|E|/p)^trials.
bool is_generically_d_rigid(const Graph& g, int d, std::uint64_t seed);

struct GlobalRigidityResult {
  bool rigid = false;
  bool globally_rigid = false;
  int rank = 0;
  int stress_rank = 0;  // best over trials; at most n - d - 1
  int trials = kRigidityTrials;
};

// Stress-matrix rank test: rigid and a random equilibrium stress has rank
// n - d - 1. Graphs on at most d+1 vertices are answered directly.
GlobalRigidityResult global_rigidity(const Graph& g, int d, std::uint64_t seed);
bool is_generically_globally_d_rigid(const Graph& g, int d, std::uint64_t seed);

}  // namespace rigicount
