#include "rigicount/certify.hpp"

#include <stdexcept>
#include <variant>

#include "rigicount/ordering.hpp"
#include "rigicount/rigidity.hpp"

namespace rigicount {

std::string to_string(CertificateStatus s) {
  switch (s) {
    case CertificateStatus::certified_deterministic:
      return "certified-deterministic";
    case CertificateStatus::certified_randomized:
      return "certified-randomized";
    case CertificateStatus::refuted:
      return "refuted";
    case CertificateStatus::inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

bool CountCertificate::has_passed(const std::string& name) const {
  for (const auto& e : evidence)
    if (e.name == name) return e.passed;
  return false;
}

BigInt predicted_count(const Graph& g, int d) {
  if (d < 0) throw std::invalid_argument("predicted_count: negative d");
  const int t = static_cast<int>(k_core(g, d + 1).survivors.size());
  BigInt one = 1;
  return one << (g.num_vertices() - t);
}

namespace {

class CertificateBuilder {
 public:
  explicit CertificateBuilder(CountCertificate& cert) : cert_(cert) {}

  bool record(const char* name, bool passed, std::string detail = {}) {
    cert_.evidence.push_back({name, passed, std::move(detail)});
    if (!passed && !cert_.first_failed) cert_.first_failed = name;
    return passed;
  }

 private:
  CountCertificate& cert_;
};

bool core_connected(const Graph& g, int core_k, int connectivity) {
  const auto core = k_core(g, core_k).survivors;
  return is_k_connected(induced_subgraph(g, core).graph, connectivity);
}

}  // namespace

CountCertificate certify_count(const Graph& g, int d, std::uint64_t seed) {
  if (d < 1) throw std::invalid_argument("certify_count: d must be positive");
  const int n = g.num_vertices();
  const auto core_trace = peel_to_core(g, d + 1);
  const int t = static_cast<int>(core_trace.survivors.size());

  CountCertificate cert;
  cert.d = d;
  cert.n = n;
  cert.core_size = t;
  CertificateBuilder rec(cert);

  const int delta = g.min_degree();
  if (!rec.record(check::min_degree, n == 0 || delta >= d,
                  "min degree " + std::to_string(delta))) {
    // Fewer than d neighbours leaves a free motion once n >= d+1; smaller
    // graphs are only finite when complete.
    cert.status = (n >= d + 1 || !g.is_complete()) ? CertificateStatus::refuted
                                                   : CertificateStatus::inconclusive;
    return cert;
  }

  const auto ordering = construct_ordering(g, d);
  if (const auto* co = std::get_if<ConstructionOrdering>(&ordering)) {
    const bool valid = validate_ordering(g, *co);
    rec.record(check::ordering_exists, valid,
               "s=" + std::to_string(co->s) + " t=" + std::to_string(co->t));
    bool suffix_ok = valid;
    if (valid) {
      const auto counts = earlier_neighbour_counts(g, co->order);
      for (int i = co->t; i < n; ++i) suffix_ok = suffix_ok && counts[i] == d;
    }
    if (valid && rec.record(check::suffix_exact_d, suffix_ok) &&
        rec.record(check::core_k_connected, core_connected(g, co->k, co->k),
                   "k=" + std::to_string(co->k)) &&
        rec.record(check::core_d1_connected, core_connected(g, d + 1, d + 1))) {
      cert.status = CertificateStatus::certified_deterministic;
      cert.exponent = n - t;
      cert.first_failed.reset();
      return cert;
    }
  } else {
    const auto& failure = std::get<OrderingFailure>(ordering);
    rec.record(check::ordering_exists, false,
               failure.reason == OrderingFailure::Reason::empty_k_core
                   ? std::string("empty d(d+1)-core")
                   : "blocked with |B|=" + std::to_string(failure.blocking.size()));
  }

  bool exact = t > 0;
  std::string peel_detail = t > 0 ? "" : "empty (d+1)-core";
  for (const auto& r : core_trace.removed) {
    if (r.degree != d) {
      exact = false;
      peel_detail = "vertex " + std::to_string(r.vertex) + " removed at degree " +
                    std::to_string(r.degree);
      break;
    }
  }
  if (rec.record(check::peel_exact_d, exact, peel_detail)) {
    const auto core = induced_subgraph(g, core_trace.survivors).graph;
    const auto gr = global_rigidity(core, d, seed);
    if (rec.record(check::core_globally_rigid, gr.globally_rigid,
                   "rank=" + std::to_string(gr.rank) +
                       " stress_rank=" + std::to_string(gr.stress_rank))) {
      cert.status = CertificateStatus::certified_randomized;
      cert.exponent = n - t;
      cert.first_failed.reset();
      return cert;
    }
  }
  cert.status = CertificateStatus::inconclusive;
  return cert;
}

CountCertificate spherical_count(const Graph& g, int d, std::uint64_t seed) {
  if (d < 0) throw std::invalid_argument("spherical_count: negative d");
  const int n = g.num_vertices();
  const int t = static_cast<int>(k_core(g, d + 1).survivors.size());
  auto cert = certify_count(cone(g), d + 1, seed);
  cert.d = d;
  cert.n = n;
  cert.core_size = t;
  if (cert.certified()) {
    const bool agrees = cert.exponent == n - t;
    cert.evidence.push_back({check::cone_exponent_agrees, agrees,
                             "cone exponent " + std::to_string(*cert.exponent)});
    if (!agrees) {
      cert.status = CertificateStatus::inconclusive;
      cert.exponent.reset();
      cert.first_failed = check::cone_exponent_agrees;
    }
  }
  return cert;
}

}  // namespace rigicount
