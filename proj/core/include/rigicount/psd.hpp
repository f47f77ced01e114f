#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "rigicount/certify.hpp"
#include "rigicount/enumerate.hpp"
#include "rigicount/graph.hpp"

namespace rigicount {

namespace testing {
struct HiddenFactorAccess;
}

// Symmetric n x n matrix with a known diagonal and known off-diagonal entries
// on the edges of its underlying graph.
class PartialPSDMatrix {
 public:
  // `off` keys are normalised to (i < j). Throws std::invalid_argument on a
  // bad index, a diagonal key or d outside [1, n].
  PartialPSDMatrix(int n, int d, std::vector<Complex> diag, std::map<Edge, Complex> off,
                   Field field = Field::real);

  int n() const noexcept { return n_; }
  int d() const noexcept { return d_; }
  Field field() const noexcept { return field_; }
  const std::vector<Complex>& diag() const noexcept { return diag_; }
  const std::map<Edge, Complex>& off() const noexcept { return off_; }
  std::optional<Complex> known(int i, int j) const;
  // Diagonal plus off-diagonal known entries in row i.
  int known_count(int i) const { return 1 + graph_.degree(i); }
  const Graph& underlying_graph() const noexcept { return graph_; }

 private:
  friend PartialPSDMatrix sample_partial_psd(int n, int d, std::int64_t m, std::uint64_t seed);
  friend struct testing::HiddenFactorAccess;

  int n_;
  int d_;
  Field field_;
  std::vector<Complex> diag_;
  std::map<Edge, Complex> off_;
  Graph graph_;
  std::optional<Eigen::MatrixXd> hidden_factor_;  // d x n, set by the sampler only
};

// P has i.i.d. standard normal entries (d x n), B = P^T P, G = G(n, M) from
// a uniform edge ordering; A keeps diag(B) and B_ij on E(G).
PartialPSDMatrix sample_partial_psd(int n, int d, std::int64_t m, std::uint64_t seed);

// Rows are deleted while some row has fewer than k known entries (diagonal
// included). The survivors are exactly the (k-1)-core of the underlying graph.
std::vector<int> partial_core(const PartialPSDMatrix& a, int k);

struct SphericalInstance {
  Graph graph;
  LengthAssignment lengths;  // aligned with graph.edges()
};

// 2 - 2 A_ij / sqrt(A_ii A_jj), principal square root.
SphericalInstance normalize_to_sphere(const PartialPSDMatrix& a);

struct CompletionPrediction {
  bool finite = true;  // false when some row has fewer than d known entries
  int core_size = 0;   // |A(d+1)|
  BigInt count = 0;    // 2^(n - core_size) when finite
};
CompletionPrediction predicted_completions(const PartialPSDMatrix& a, int d);

enum class CompletionStatus { certified, uncertified, inconclusive };
std::string to_string(CompletionStatus s);

struct CompletionOptions {
  EnumerateOptions enumerate;
  double entry_tol = 1e-8;
  double rank_tol = 1e-6;      // relative (d+1)-th singular value
  double distinct_tol = 1e-6;  // some entry must differ by more than this
  int retries = 8;
};

struct CompletionResult {
  CompletionStatus status = CompletionStatus::inconclusive;
  std::vector<Eigen::MatrixXcd> completions;
  int attempts = 0;
  std::string note;
};

// Completions via realisations of the cone over the underlying graph, apex at
// the origin: |p_i|^2 = A_ii and |p_i - p_j|^2 = A_ii + A_jj - 2 A_ij. The
// status is certified when certify_count(cone(G), d) certifies.
CompletionResult enumerate_completions(const PartialPSDMatrix& a, int d, std::uint64_t seed,
                                       Field field = Field::complex,
                                       const CompletionOptions& opts = {});

// Header "n d", n diagonal values, then "i j value" lines.
PartialPSDMatrix read_partial_matrix(std::istream& in, Field field = Field::real);
void write_partial_matrix(std::ostream& out, const PartialPSDMatrix& a);

}  // namespace rigicount
