#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rigicount/graph.hpp"

namespace rigicount {

using BigInt = boost::multiprecision::cpp_int;

enum class CertificateStatus { certified_deterministic, certified_randomized, refuted, inconclusive };

std::string to_string(CertificateStatus s);

// Named evidence checks, in the order the certifier evaluates them.
namespace check {
inline constexpr const char* min_degree = "min-degree-at-least-d";
inline constexpr const char* ordering_exists = "ordering-exists";
inline constexpr const char* suffix_exact_d = "suffix-exact-d";
inline constexpr const char* core_k_connected = "core-k-connected";
inline constexpr const char* core_d1_connected = "core-(d+1)-connected";
inline constexpr const char* peel_exact_d = "peel-exact-d";
inline constexpr const char* core_globally_rigid = "core-globally-rigid-randomized";
inline constexpr const char* cone_exponent_agrees = "cone-exponent-agrees";
}  // namespace check

struct Evidence {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CountCertificate {
  CertificateStatus status = CertificateStatus::inconclusive;
  int d = 0;
  int n = 0;
  int core_size = 0;                 // t = |(d+1)-core|
  std::optional<int> exponent;       // n - t, present when certified
  std::vector<Evidence> evidence;
  std::optional<std::string> first_failed;  // set when inconclusive or refuted

  bool certified() const {
    return status == CertificateStatus::certified_deterministic ||
           status == CertificateStatus::certified_randomized;
  }
  bool has_passed(const std::string& name) const;
};

// 2^(n - t), t = |(d+1)-core|; unconditional prediction.
BigInt predicted_count(const Graph& g, int d);

// Checks the implication chain behind c_d(g) = r_d(g) = 2^(n-t) on this
// concrete graph. Deterministic route first (ordering + connectivity of the
// two cores), then the randomized route (exact-d peel + stress test on the
// (d+1)-core). Never certifies without the full chain.
CountCertificate certify_count(const Graph& g, int d, std::uint64_t seed);

// Spherical count at dimension d via certify_count(cone(g), d+1). The
// exponent is n - |(d+1)-core of g| and must agree with the cone's.
CountCertificate spherical_count(const Graph& g, int d, std::uint64_t seed);

}  // namespace rigicount
