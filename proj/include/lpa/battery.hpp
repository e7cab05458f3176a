#ifndef LPA_BATTERY_HPP
#define LPA_BATTERY_HPP

#include "lpa/algebra.hpp"

#include <json.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace lpa {

/// Random bounded elements: sums of up to max_terms walks with
/// |alpha|, |beta| <= max_degree and small rational coefficients.
class ElementSampler {
public:
  ElementSampler(const Algebra &alg, std::uint64_t seed, std::size_t max_degree = 4, std::size_t max_terms = 3);

  Walk walk();
  Element element();
  std::mt19937_64 &rng() { return rng_; }

private:
  Path backward_path(VertexId end, std::size_t len);

  const Algebra *alg_;
  std::mt19937_64 rng_;
  std::size_t max_degree_, max_terms_;
  std::vector<std::vector<EdgeId>> incoming_;
};

/// Every normal-basis walk with |alpha|, |beta| <= d.
std::vector<Walk> basis_walks(const Algebra &alg, std::size_t d);

struct BatteryResult {
  std::string graph;
  std::string check;
  bool passed = true;
  std::string detail;
};

/// Bit flags selecting which families run_graph_battery executes.
enum BatteryCheck : unsigned {
  kCheckCertify = 1u << 0,
  kCheckRelations = 1u << 1,
  kCheckAssociativity = 1u << 2,
  kCheckSeeds = 1u << 3,
  kCheckSMap = 1u << 4,
  kCheckPiIdentity = 1u << 5,
  kCheckComet = 1u << 6,
  kCheckAcyclicCorners = 1u << 7,
  kCheckAll = (1u << 8) - 1,
};

struct BatteryOptions {
  std::uint64_t seed = 20240601;
  std::size_t degree = 3;
  std::size_t assoc_triples = 300;
  std::size_t centroid_pairs = 200;
  std::size_t smap_walks = 100;
  std::size_t iso_pairs = 200;
  unsigned checks = kCheckAll;
};

/// Relations, associativity, centroid law and uniqueness, S-map collapse,
/// Pi-identity, seed dimensions, comet construction and comet isomorphism
/// on one graph. Flagged graphs only get the checks that apply to them.
std::vector<BatteryResult> run_graph_battery(const Graph &g, const std::string &name, const BatteryOptions &opts);

/// Corner tower stabilization, sigma composition law and matrix centres.
std::vector<BatteryResult> run_limit_battery(std::size_t stages = 5, std::size_t d = 3);

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<BatteryResult> results;
  std::vector<std::string> warnings;

  bool ok() const;
};

/// The full battery over every *.graph file in dir plus its .cert.json
/// sidecar when present.
VerifyReport verify_corpus(const std::string &dir, const BatteryOptions &opts);
nlohmann::json verify_json(const VerifyReport &rep);

} // namespace lpa

#endif // LPA_BATTERY_HPP
