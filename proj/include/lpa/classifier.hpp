#ifndef LPA_CLASSIFIER_HPP
#define LPA_CLASSIFIER_HPP

#include "lpa/structure.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace lpa {

enum class Verdict { NotPrime, SimpleK, PrimeK, PrimeLaurent, Unsupported };
enum class Branch { None, Acyclic, CycleWithExits, InfiniteEmitter, UniqueNoExitCycle_NonComet, Comet };

std::string to_string(Verdict v);
std::string to_string(Branch b);
Verdict verdict_from_string(const std::string &s);
Branch branch_from_string(const std::string &s);

/// The centroid named by a verdict: "K", "K[x,x^-1]" or "n/a".
std::string centroid_name(Verdict v);

/// Witnesses; only the fields required by the branch are set.
struct Certificate {
  std::optional<std::pair<VertexId, VertexId>> mt3_witness;
  /// (v, w, u) with v >= u and w >= u.
  std::vector<std::tuple<VertexId, VertexId, VertexId>> mt3_bounds;
  std::optional<std::vector<VertexId>> topological_order;
  std::optional<Cycle> cycle;
  std::optional<Exit> exit;
  std::optional<VertexId> emitter;
  /// For the non-comet leaf: a vertex that does not reach the cycle.
  std::optional<VertexId> stray_vertex;
};

struct Classification {
  Verdict verdict = Verdict::Unsupported;
  Branch branch = Branch::None;
  Certificate certificate;
  /// Simplicity, when the graph is row-finite.
  std::optional<bool> simple;
};

Classification classify(const Graph &g);

struct CertifyCheck {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct CertifyReport {
  std::vector<CertifyCheck> checks;
  std::size_t degree = 0;
  /// Seed-space dimensions at degree and degree + 1, when computed.
  std::optional<std::pair<std::size_t, std::size_t>> seed_dims;
  std::optional<bool> stable;
  std::string seed_note;

  bool ok() const;
  std::string first_failure() const;
};

/// Unknown-count limit above which certify skips the seed-space check.
inline constexpr std::size_t kSeedBudget = 250000;

/// Re-verifies every witness by routes independent of classify and, for
/// row-finite graphs with at most 10 vertices, compares the verdict with
/// seed-space dimensions at d and d + 1.
CertifyReport certify(const Graph &g, const Classification &cl, std::size_t d);

nlohmann::json properties_json(const Graph &g);
nlohmann::json certificate_json(const Graph &g, const Classification &cl);
/// {verdict, branch, certificate}: the sidecar format read back below.
nlohmann::json classification_json(const Graph &g, const Classification &cl);
/// Reads {verdict, branch, certificate}; throws std::invalid_argument on
/// unknown names or malformed fields.
Classification classification_from_json(const Graph &g, const nlohmann::json &j);

struct ReportOptions {
  bool certify = true;
  bool timings = false;
};

/// {graph, properties, verdict, branch, certificate, seed_dims, stable}
nlohmann::json centroid_report(const Graph &g, const std::string &name, std::size_t d,
                               const ReportOptions &opts = {});

struct CorpusRow {
  std::string file;
  bool error = false;
  bool certified = false;
  std::string message;
  nlohmann::json report;
};

/// Every *.graph file in dir, ordered by file name. Unreadable or malformed
/// files give an error row.
std::vector<CorpusRow> corpus_run(const std::string &dir, std::size_t d, const ReportOptions &opts = {});
nlohmann::json corpus_json(const std::vector<CorpusRow> &rows, std::size_t d);

} // namespace lpa

#endif // LPA_CLASSIFIER_HPP
