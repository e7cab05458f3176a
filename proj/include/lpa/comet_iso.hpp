#ifndef LPA_COMET_ISO_HPP
#define LPA_COMET_ISO_HPP

#include "lpa/algebra.hpp"
#include "lpa/laurent.hpp"
#include "lpa/structure.hpp"

#include <vector>

namespace lpa {

/// L(E) -> M_Lambda(Q[x, x^-1]) for a row-finite comet. Lambda is the set of
/// paths ending at the cycle base v0 that meet v0 only at their range,
/// ordered by (length, edge sequence).
class CometIso {
public:
  /// Throws std::invalid_argument for flagged graphs and non-comets.
  explicit CometIso(const Algebra &alg);

  const Cycle &cycle() const { return cycle_; }
  VertexId base() const { return cycle_.base(); }
  const std::vector<Path> &index_set() const { return lambda_; }
  std::size_t size() const { return lambda_.size(); }
  std::size_t index_of(const Path &p) const;

  LaurentMatrix apply(const Walk &w) const;
  LaurentMatrix apply(const Element &x) const;

private:
  /// Paths from v to v0 meeting v0 only at their range.
  const std::vector<Path> &completions(VertexId v) const { return completions_[index(v)]; }
  /// gamma c^k with gamma in Lambda.
  std::pair<std::size_t, long> split(const Path &p) const;

  const Algebra *alg_;
  Cycle cycle_;
  std::vector<Path> lambda_;
  std::vector<std::vector<Path>> completions_;
};

} // namespace lpa

#endif // LPA_COMET_ISO_HPP
