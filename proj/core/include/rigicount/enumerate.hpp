#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rigicount/graph.hpp"

namespace rigicount {

using Complex = std::complex<double>;

enum class Field { real, complex };
std::string to_string(Field f);
Field parse_field(const std::string& s);

// Raised when a sphere intersection is too close to tangency (or the linear
// part is singular) for the branch count to be trusted. Callers reseed.
class GenericityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Coordinates are stored column-per-vertex in a d x n matrix; real frameworks
// keep zero imaginary parts.
struct Framework {
  Graph graph;
  int d = 0;
  Field field = Field::real;
  Eigen::MatrixXcd coords;
};

// Squared edge lengths aligned with graph.edges().
using LengthAssignment = std::vector<Complex>;

// Real: coordinates uniform in [-1, 1]. Complex: real and imaginary parts each
// uniform in [-1, 1].
Framework sample_framework(const Graph& g, int d, Field field, std::uint64_t seed);

// Sum of squared coordinate differences; plain complex squares, no conjugation.
LengthAssignment edge_lengths(const Framework& f);

// Applies x -> Q x + c to every vertex, Q orthogonal (a random rotation, with
// a reflection when `reflect`).
Framework apply_random_isometry(const Framework& f, std::uint64_t seed, bool reflect);

// Accepts "a", "bi" and "a+bi" forms.
Complex parse_complex(const std::string& text);
std::string format_complex(Complex z);

// "u v squared_length" lines; the value may be real or "a+bi".
LengthAssignment read_lengths(std::istream& in, const Graph& g);

// Construction of g from a base by adding one vertex at a time. Each added
// vertex is placed from `anchors` (d earlier neighbours); `extra` are further
// earlier neighbours whose equations only filter branches.
struct Extension {
  Vertex vertex = 0;
  std::vector<Vertex> anchors;
  std::vector<Vertex> extra;
};

struct TowerPlan {
  int d = 0;
  std::vector<Vertex> base;
  std::vector<Extension> extensions;  // placement order
  bool pure() const;
};

// Peels vertices of degree <= d (lowest label first) down to the (d+1)-core,
// or down to a complete graph on d+1 vertices. Throws std::invalid_argument
// if some vertex leaves with fewer than d neighbours.
TowerPlan plan_tower(const Graph& g, int d);

// Base = order[0..base_size); every later vertex is anchored on its first d
// earlier neighbours in `order`, the rest become filters.
TowerPlan plan_from_order(const Graph& g, int d, const std::vector<Vertex>& order, int base_size);

struct EnumerateOptions {
  double degeneracy_tol = 1e-10;
  double separation_tol = 1e-6;
  double residual_tol = 1e-8;
  double filter_tol = 1e-6;  // extra-edge pruning before refinement
  int newton_iterations = 12;
};

struct SolutionSet {
  Field field = Field::real;
  int d = 0;
  std::vector<Eigen::MatrixXcd> solutions;  // canonically pinned, d x n
  std::vector<bool> near_degenerate;        // merged with another branch
  double max_residual = 0.0;
  bool certified_structure = true;  // false when extra-edge filtering ran
  std::string assumption = "base realisation is unique up to congruence";
  std::size_t count() const { return solutions.size(); }
};

// Depth-first over the extensions: each vertex solves the intersection of d
// spheres around its anchors (two roots), real roots only for Field::real.
// Leaves are Newton-refined on the whole edge system, residual checked,
// pinned and deduplicated. `base_coords` is d x |plan.base|.
SolutionSet enumerate_realisations(const Graph& g, const LengthAssignment& lengths,
                                   const TowerPlan& plan, const Eigen::MatrixXcd& base_coords,
                                   Field field, const EnumerateOptions& opts = {});

// Translate base[0] to the origin, then rotate so that base[j] lies in the
// span of the first j axes with positive j-th coordinate (principal square
// root over the complex field).
Eigen::MatrixXcd canonical_pin(const Eigen::MatrixXcd& coords, const std::vector<Vertex>& base);

struct RealComplexCount {
  std::size_t real = 0;
  std::size_t complex = 0;
  int attempts = 0;
};

// Samples a real framework, keeps its lengths and its base coordinates, and
// enumerates both fields. Reseeds on GenericityError up to `retries` times.
RealComplexCount count_real_and_complex(const Graph& g, int d, std::uint64_t seed,
                                        int retries = 8, const EnumerateOptions& opts = {});

// Finds coordinates for a graph assumed globally rigid from its lengths alone
// (damped Gauss-Newton with random restarts). Throws GenericityError when no
// restart reaches `residual_tol`.
Eigen::MatrixXcd embed_from_lengths(const Graph& g, int d, const LengthAssignment& lengths,
                                    Field field, std::uint64_t seed, int restarts = 200,
                                    double residual_tol = 1e-10);

// max_e |len_e(coords) - lengths_e| / max(1, |lengths_e|).
double max_relative_residual(const Graph& g, const LengthAssignment& lengths,
                             const Eigen::MatrixXcd& coords);

}  // namespace rigicount
