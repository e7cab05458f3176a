#ifndef LPA_ALGEBRA_HPP
#define LPA_ALGEBRA_HPP

#include "lpa/graph.hpp"

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lpa {

using Rational = mpq_class;

std::string rational_to_string(const Rational &q);

/// The walk alpha beta^*, r(alpha) == r(beta).
struct Walk {
  Path alpha;
  Path beta;

  std::size_t degree_alpha() const { return alpha.length(); }
  int grade() const { return static_cast<int>(alpha.length()) - static_cast<int>(beta.length()); }

  bool operator==(const Walk &) const = default;
  auto operator<=>(const Walk &) const = default;
};

class Algebra;

/// Finite Q-linear combination of basis walks. Only an Algebra creates
/// nonzero elements, so every stored element is already in normal form.
class Element {
public:
  using Terms = std::map<Walk, Rational>;

  Element() = default;

  const Algebra *algebra() const { return alg_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coeff(const Walk &w) const;

  Element operator+(const Element &o) const;
  Element operator-(const Element &o) const;
  Element operator-() const;
  Element operator*(const Element &o) const;
  Element &operator+=(const Element &o);
  Element &operator-=(const Element &o);
  friend Element operator*(const Rational &k, const Element &x);

  /// Exact equality of normal forms; zero elements compare equal whatever
  /// their algebra.
  friend bool operator==(const Element &a, const Element &b) {
    return a.terms_ == b.terms_ && (a.terms_.empty() || a.alg_ == b.alg_);
  }

  std::string to_string() const;

private:
  friend class Algebra;
  Element(const Algebra *alg, Terms terms) : alg_(alg), terms_(std::move(terms)) {}
  const Algebra *pick(const Element &o) const;

  const Algebra *alg_ = nullptr;
  Terms terms_;
};

/// Choice of one "special" outgoing edge per regular vertex. The normal
/// basis consists of walks alpha beta^* that do not both end in the same
/// special edge.
class BasisChoice {
public:
  /// Default: the last declared outgoing edge of every regular vertex.
  static BasisChoice last_declared(const Graph &g);
  /// Custom choice; throws unless each entry is an outgoing edge of its key
  /// and every regular vertex is covered.
  static BasisChoice from_map(const Graph &g, const std::map<VertexId, EdgeId> &choice);

  std::optional<EdgeId> special(VertexId v) const { return special_[index(v)]; }
  std::string describe(const Graph &g) const;

private:
  std::vector<std::optional<EdgeId>> special_;
};

/// The Leavitt path algebra L_Q(E) of a row-finite graph with a fixed
/// normal basis. Elements keep a pointer to their algebra, so an Algebra
/// must outlive them and is neither copyable nor movable.
class Algebra {
public:
  explicit Algebra(Graph g);
  Algebra(Graph g, BasisChoice basis);
  Algebra(const Algebra &) = delete;
  Algebra &operator=(const Algebra &) = delete;

  const Graph &graph() const { return graph_; }
  const BasisChoice &basis() const { return basis_; }

  Element zero() const { return Element(this, {}); }
  Element vertex(VertexId v) const;
  Element edge(EdgeId e) const;
  Element ghost(EdgeId e) const;
  Element path(const Path &p) const;
  Element ghost(const Path &p) const;
  /// k * alpha beta^*, normalized.
  Element walk(const Path &alpha, const Path &beta, const Rational &k = 1) const;
  Element scalar_unit(const Rational &k = 1) const; ///< k * sum of all vertices

  /// Normalizes an arbitrary sum of walks by CK2 rewriting of the forbidden
  /// pattern.
  Element normal_form(const std::vector<std::pair<Walk, Rational>> &raw) const;
  bool is_forbidden(const Walk &w) const;
  bool is_valid_walk(const Walk &w) const;

  Element multiply(const Element &x, const Element &y) const;
  Element involution(const Element &x) const;
  /// Homogeneous components keyed by |alpha| - |beta|.
  std::map<int, Element> grade(const Element &x) const;
  /// Longest real-path prefix length over the normal expression; 0 for 0.
  std::size_t partial_B(const Element &x) const;

  Element corner_project(const Element &x, VertexId u) const;
  /// Normal basis walks with s(alpha) = s(beta) = u and |alpha|,|beta| <= d.
  std::vector<Walk> corner_basis(VertexId u, std::size_t d) const;
  /// All paths starting at u of length <= d, ordered.
  std::vector<Path> paths_from(VertexId u, std::size_t d) const;

  /// Product of two single walks before normalization; nullopt when zero.
  std::optional<Walk> walk_product(const Walk &a, const Walk &b) const;

  std::string walk_to_string(const Walk &w) const;

private:
  friend class Element;
  void add_normalized(Element::Terms &acc, Walk w, const Rational &c) const;

  Graph graph_;
  BasisChoice basis_;
};

/// Element syntax: sums/differences of products of factors, where a factor
/// is a rational `3/2`, a parenthesized expression, or a walk `a.b~c.d`
/// (alpha before `~`, beta after it, star implied). `p~` and `~p` both
/// denote the ghost path p^*; a bare vertex id is the trivial path.
class ElementParseError : public std::runtime_error {
public:
  ElementParseError(const std::string &what, std::size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

private:
  std::size_t pos_;
};

Element parse_element(const Algebra &alg, std::string_view text);

struct VerifyRelationsReport {
  struct Family {
    std::string name;
    bool passed = true;
    std::string counterexample;
  };
  std::vector<Family> families;
  bool all_passed() const;
};

/// Checks (V), (E1), (E2), (CK1), (CK2) on all generators.
VerifyRelationsReport verify_relations(const Algebra &alg);

} // namespace lpa

#endif // LPA_ALGEBRA_HPP
