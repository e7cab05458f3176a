#ifndef LPA_CENTROID_HPP
#define LPA_CENTROID_HPP

#include "lpa/algebra.hpp"
#include "lpa/laurent.hpp"
#include "lpa/structure.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lpa {

/// A centralizer restricted to the vertices; by the first extension
/// property this determines the centralizer. values[v] lives in vAv.
struct CentralizerSeed {
  std::vector<Element> values;

  const Element &at(VertexId v) const { return values[index(v)]; }
  bool operator==(const CentralizerSeed &) const = default;
};

CentralizerSeed scalar_seed(const Algebra &alg, const Rational &k);

struct SeedCheck {
  bool valid = true;
  std::optional<EdgeId> failing_edge;
  std::string detail;
};

/// Checks tau(s(f)) f = f tau(r(f)) and tau(r(f)) f^* = f^* tau(s(f)) for
/// every edge. Throws std::invalid_argument if a value leaves its corner.
SeedCheck validate_seed(const Algebra &alg, const CentralizerSeed &seed);

/// Linear extension tau(alpha beta^*) = seed(s(alpha)) alpha beta^*.
/// Throws if the seed is invalid.
Element evaluate(const Algebra &alg, const CentralizerSeed &seed, const Element &x);
/// Same without re-validating; for hot loops over already checked seeds.
Element evaluate_unchecked(const Algebra &alg, const CentralizerSeed &seed, const Element &x);

/// Solution space of the intertwining equations with values truncated to
/// corner_basis(v, bound[v]). bound[v] = d * scale + approach_depth(v),
/// where scale is the length of the cycle when the graph has exactly one
/// and 1 otherwise, so that a Laurent family contributes the powers
/// x^-d .. x^d and nothing else.
struct SeedSpace {
  std::size_t degree = 0;
  std::vector<std::size_t> bounds;
  std::size_t num_unknowns = 0;
  std::size_t num_equations = 0;
  std::vector<CentralizerSeed> basis;

  std::size_t dimension() const { return basis.size(); }
};

std::vector<std::size_t> seed_bounds(const Graph &g, std::size_t d);
SeedSpace seed_space(const Algebra &alg, std::size_t d);
/// Upper bound on the number of unknowns seed_space(alg, d) would create.
std::size_t seed_space_unknowns(const Algebra &alg, std::size_t d);

struct CornerDecomposition {
  Rational k;
  std::vector<std::pair<EdgeId, Element>> xi;
  /// Whether each xi_f commutes with corner_basis(r(f), d - 1).
  std::vector<bool> xi_central;
};

/// z = k u + sum_f f xi_f f^* for z central in uAu, u not on a cycle.
/// Centrality is checked against corner_basis(u, d).
CornerDecomposition corner_center_decompose(const Algebra &alg, const Element &z, VertexId u,
                                            std::size_t d);

/// Exact basis of Z(uAu) for an acyclic graph.
std::vector<Element> acyclic_corner_center(const Algebra &alg, VertexId u);

/// x -> c^* x c on the corner at the base of a cycle.
class SMap {
public:
  SMap(const Algebra &alg, Cycle c);

  const Algebra &algebra() const { return *alg_; }
  const Cycle &cycle() const { return cycle_; }
  VertexId base() const { return cycle_.base(); }
  Element apply(const Element &x) const;
  /// c^* w c on a single walk using only e^*f cancellation; nullopt is 0.
  std::optional<Walk> apply(const Walk &w) const;
  /// Power k with x == c^k (negative k meaning (c^*)^-k), if any.
  std::optional<long> cycle_power(const Element &x) const;
  std::optional<long> cycle_power(const Walk &w) const;
  Element power(long k) const;

private:
  const Algebra *alg_;
  Cycle cycle_;
  Element c_, c_star_;
};

struct Collapse {
  enum class Kind { Dies, Collapses, Survives };
  Kind kind = Kind::Survives;
  std::size_t steps = 0; ///< n with S^n(w) the deciding iterate
  long power = 0;        ///< for Collapses: S^n(w) = c^power
};

/// Iterates S on a corner walk without CK2 rewriting, so Collapses(n, k)
/// reports the first n with S^n(w) a cycle power. Throws if w is not in uAu.
Collapse s_collapse(const SMap &s, const Walk &w, std::size_t max_steps);
std::string to_string(const Collapse &c);

struct LaurentExtract {
  std::optional<LaurentPoly> poly;
  std::string bad_term;
};

/// Reads x in uAu as sum k_i c^i.
LaurentExtract laurent_extract(const Algebra &alg, const Cycle &c, const Element &x);

/// Builds the centralizer with tau(u) = p(c, c^*) on a comet, extending
/// down the cycle by rotation and up the closure levels by
/// tau(w) = sum_g g tau(r(g)) g^*.
CentralizerSeed comet_centralizer_from_laurent(const Algebra &alg, const LaurentPoly &p);

Element omega(const CentralizerSeed &seed, VertexId u);

struct Reconstruction {
  std::optional<CentralizerSeed> seed;
  std::string failure;
  /// Two paths from u to the same vertex giving different lambda^* x lambda.
  std::optional<std::pair<Path, Path>> witness;
};

/// Inverse of omega on prime graphs whose closure of {u} is everything.
Reconstruction reconstruct_from_value(const Algebra &alg, VertexId u, const Element &x);

struct PathMembershipReport {
  bool ok = true;
  std::size_t dimension = 0;
  std::string detail;
};

/// On a simple graph every seed value at u is a multiple of u.
PathMembershipReport path_membership_checks(const Algebra &alg, VertexId u, std::size_t d);

std::string seed_to_string(const Algebra &alg, const CentralizerSeed &seed);

} // namespace lpa

#endif // LPA_CENTROID_HPP
