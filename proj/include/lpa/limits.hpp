#ifndef LPA_LIMITS_HPP
#define LPA_LIMITS_HPP

#include "lpa/laurent.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lpa {

/// Coefficients of a matrix stage: Q[x, x^-1], or Q alone (degree 0 only).
enum class CoefficientRing { Laurent, Field };

std::string to_string(CoefficientRing r);

struct EmbeddingCheck {
  bool ok = true;
  std::string detail;
};

/// Monomorphism M_n(R) -> M_m(R) given by constant images F_ij of the
/// matrix units and extended R-linearly. Nice means the image is exactly
/// eBe with e = sum F_ii.
class NiceEmbedding {
public:
  /// A -> upper-left n x n block of M_m.
  static NiceEmbedding corner(std::size_t n, std::size_t m);
  /// images[i * n + j] = F_ij; every image must be an m x m constant matrix.
  static NiceEmbedding from_units(std::size_t n, std::size_t m, std::vector<LaurentMatrix> images);
  /// second after first; throws unless first.target_size() == second.source_size().
  static NiceEmbedding compose(const NiceEmbedding &first, const NiceEmbedding &second);

  std::size_t source_size() const { return n_; }
  std::size_t target_size() const { return m_; }
  const LaurentMatrix &image(std::size_t i, std::size_t j) const { return images_[i * n_ + j]; }
  LaurentMatrix idempotent() const;

  /// Matrix unit relations, F_11 != 0 and e E_ab e in span_Q{F_ij} for every
  /// target unit E_ab.
  EmbeddingCheck verify() const;

  LaurentMatrix apply(const LaurentMatrix &a) const;
  /// Inverse of apply on eBe: p_ij with F_ii b F_jj = p_ij F_ij. Throws if b
  /// is not in the image.
  LaurentMatrix project(const LaurentMatrix &b) const;

private:
  std::size_t n_ = 0, m_ = 0;
  std::vector<LaurentMatrix> images_;
};

struct MatrixCenter {
  std::vector<LaurentMatrix> basis;
  bool all_scalar = true;
};

/// Exact solution of z E_ab = E_ab z and z (xI) = (xI) z with entries
/// truncated to exponents |k| <= d (k = 0 over the field).
MatrixCenter matrix_center(std::size_t n, std::size_t d, CoefficientRing ring = CoefficientRing::Laurent);

/// First matrix unit (row-major) that fails to commute with z.
std::optional<std::pair<std::size_t, std::size_t>> noncommuting_unit(const LaurentMatrix &z);

/// Restriction of the centroid element "multiply by the central z" along
/// emb: z |-> project(e z e). Throws if emb fails verification or z is not
/// central.
LaurentMatrix sigma_map(const NiceEmbedding &emb, const LaurentMatrix &z);

struct MatrixTower {
  CoefficientRing ring = CoefficientRing::Laurent;
  std::vector<std::size_t> sizes;
  std::vector<NiceEmbedding> maps; ///< maps[i]: stage i -> stage i + 1

  /// M_1 -> M_2 -> ... -> M_stages by corner embeddings.
  static MatrixTower corner_tower(std::size_t stages, CoefficientRing ring = CoefficientRing::Laurent);
  /// stages copies of M_1(Q) with identity maps.
  static MatrixTower constant_tower(std::size_t stages);

  std::size_t stages() const { return sizes.size(); }
  /// Composite embedding stage i -> stage j (i < j).
  NiceEmbedding between(std::size_t i, std::size_t j) const;
};

struct LimitReport {
  bool stabilized = false;
  std::string limit;
  std::size_t stages = 0;
  std::size_t degree = 0;
  bool composition_ok = true;
  std::vector<std::string> observations;
};

/// Applies every connecting sigma map to the truncated centres x^k I,
/// |k| <= d, and checks sigma_ij sigma_jl = sigma_il on all stage triples.
LimitReport inverse_limit_stabilize(const MatrixTower &tower, std::size_t d);

} // namespace lpa

#endif // LPA_LIMITS_HPP
