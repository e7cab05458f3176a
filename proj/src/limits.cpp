#include "lpa/limits.hpp"
#include "lpa/linalg.hpp"

#include <stdexcept>

namespace lpa {

namespace {

std::string unit_name(std::size_t i, std::size_t j) {
  return "E" + std::to_string(i + 1) + std::to_string(j + 1);
}

std::string matrix_power_name(long k) {
  if (k == 0) return "I";
  return LaurentPoly::monomial(k).to_string() + "*I";
}

} // namespace

std::string to_string(CoefficientRing r) {
  return r == CoefficientRing::Laurent ? "K[x,x^-1]" : "K";
}

NiceEmbedding NiceEmbedding::corner(std::size_t n, std::size_t m) {
  if (n == 0 || n > m) throw std::invalid_argument("corner embedding needs 1 <= n <= m");
  std::vector<LaurentMatrix> images;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) images.push_back(LaurentMatrix::unit(m, i, j));
  return from_units(n, m, std::move(images));
}

NiceEmbedding NiceEmbedding::from_units(std::size_t n, std::size_t m, std::vector<LaurentMatrix> images) {
  if (n == 0 || images.size() != n * n)
    throw std::invalid_argument("embedding needs n * n unit images");
  for (const auto &f : images) {
    if (f.size() != m) throw std::invalid_argument("unit image has the wrong size");
    if (!f.is_constant()) throw std::invalid_argument("unit images must be constant matrices");
  }
  NiceEmbedding e;
  e.n_ = n;
  e.m_ = m;
  e.images_ = std::move(images);
  return e;
}

NiceEmbedding NiceEmbedding::compose(const NiceEmbedding &first, const NiceEmbedding &second) {
  if (first.m_ != second.n_) throw std::invalid_argument("compose: size mismatch");
  std::vector<LaurentMatrix> images;
  for (const auto &f : first.images_) images.push_back(second.apply(f));
  return from_units(first.n_, second.m_, std::move(images));
}

LaurentMatrix NiceEmbedding::idempotent() const {
  LaurentMatrix e(m_);
  for (std::size_t i = 0; i < n_; ++i) e += image(i, i);
  return e;
}

EmbeddingCheck NiceEmbedding::verify() const {
  LaurentMatrix zero(m_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k)
        for (std::size_t l = 0; l < n_; ++l) {
          LaurentMatrix want = j == k ? image(i, l) : zero;
          if (!(image(i, j) * image(k, l) == want))
            return {false, "unit relation fails for " + unit_name(i, j) + " * " + unit_name(k, l)};
        }
  if (image(0, 0).is_zero()) return {false, "image of E11 is zero"};

  // Coordinates of constant m x m matrices; column c is F_ij with c = i * n + j.
  auto coords = [&](const LaurentMatrix &a) {
    SparseVector v;
    for (std::size_t r = 0; r < m_; ++r)
      for (std::size_t s = 0; s < m_; ++s) {
        Rational c = a.at(r, s).coeff(0);
        if (c != 0) v[r * m_ + s] = c;
      }
    return v;
  };
  // Membership of eE_ab e in span{F_ij}: rank of span{F_ij} must not grow.
  EchelonSolver span(m_ * m_);
  for (const auto &f : images_) span.add_row(coords(f));
  LaurentMatrix e = idempotent();
  for (std::size_t a = 0; a < m_; ++a)
    for (std::size_t b = 0; b < m_; ++b) {
      LaurentMatrix piece = e * LaurentMatrix::unit(m_, a, b) * e;
      if (!span.in_row_space(coords(piece)))
        return {false, "e " + unit_name(a, b) + " e is not in the image"};
    }
  return {};
}

LaurentMatrix NiceEmbedding::apply(const LaurentMatrix &a) const {
  if (a.size() != n_) throw std::invalid_argument("apply: source size mismatch");
  LaurentMatrix out(m_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (!a.at(i, j).is_zero()) out += a.at(i, j) * image(i, j);
  return out;
}

LaurentMatrix NiceEmbedding::project(const LaurentMatrix &b) const {
  if (b.size() != m_) throw std::invalid_argument("project: target size mismatch");
  LaurentMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      LaurentMatrix piece = image(i, i) * b * image(j, j);
      const LaurentMatrix &f = image(i, j);
      std::optional<std::pair<std::size_t, std::size_t>> pos;
      for (std::size_t r = 0; r < m_ && !pos; ++r)
        for (std::size_t s = 0; s < m_ && !pos; ++s)
          if (!f.at(r, s).is_zero()) pos = std::make_pair(r, s);
      Rational scale = 1 / f.at(pos->first, pos->second).coeff(0);
      LaurentPoly p = LaurentPoly(scale) * piece.at(pos->first, pos->second);
      if (!(p * f == piece)) throw std::invalid_argument("project: matrix is not in the image");
      out.at(i, j) = p;
    }
  if (!(apply(out) == idempotent() * b * idempotent()))
    throw std::invalid_argument("project: matrix is not in the image");
  return out;
}

MatrixCenter matrix_center(std::size_t n, std::size_t d, CoefficientRing ring) {
  if (n == 0) throw std::invalid_argument("matrix_center: n must be positive");
  long lo = ring == CoefficientRing::Laurent ? -static_cast<long>(d) : 0;
  long hi = -lo;
  std::size_t width = static_cast<std::size_t>(hi - lo + 1);
  // Unknown (i, j, k) is the x^k coefficient of z_ij.
  auto col = [&](std::size_t i, std::size_t j, long k) {
    return (i * n + j) * width + static_cast<std::size_t>(k - lo);
  };
  EchelonSolver solver(n * n * width);
  // (z E_ab - E_ab z)_{rs} at x^k = z_ra [s == b] - [r == a] z_bs.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s)
          for (long k = lo; k <= hi; ++k) {
            SparseVector row;
            if (s == b) row[col(r, a, k)] += 1;
            if (r == a) row[col(b, s, k)] -= 1;
            solver.add_row(std::move(row));
          }
  // x I is central for any z, so it adds no rows; kept as an explicit check
  // on the output below.
  MatrixCenter out;
  LaurentMatrix xI = LaurentMatrix::scalar(n, LaurentPoly::monomial(1));
  for (const SparseVector &sol : solver.nullspace()) {
    LaurentMatrix z(n);
    for (const auto &[c, v] : sol) {
      std::size_t ij = c / width;
      long k = static_cast<long>(c % width) + lo;
      z.at(ij / n, ij % n).set(k, v);
    }
    if (!(z * xI == xI * z)) throw std::logic_error("matrix_center: solution does not commute with xI");
    out.all_scalar = out.all_scalar && z.is_scalar();
    out.basis.push_back(std::move(z));
  }
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> noncommuting_unit(const LaurentMatrix &z) {
  std::size_t n = z.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      LaurentMatrix u = LaurentMatrix::unit(n, a, b);
      if (!(z * u == u * z)) return std::make_pair(a, b);
    }
  return std::nullopt;
}

LaurentMatrix sigma_map(const NiceEmbedding &emb, const LaurentMatrix &z) {
  EmbeddingCheck chk = emb.verify();
  if (!chk.ok) throw std::invalid_argument("sigma_map: embedding rejected: " + chk.detail);
  if (z.size() != emb.target_size()) throw std::invalid_argument("sigma_map: size mismatch");
  if (auto bad = noncommuting_unit(z))
    throw std::invalid_argument("sigma_map: element is not central (fails against " +
                                unit_name(bad->first, bad->second) + ")");
  LaurentMatrix e = emb.idempotent();
  return emb.project(e * z * e);
}

MatrixTower MatrixTower::corner_tower(std::size_t stages, CoefficientRing ring) {
  if (stages == 0) throw std::invalid_argument("tower needs at least one stage");
  MatrixTower t;
  t.ring = ring;
  for (std::size_t i = 1; i <= stages; ++i) t.sizes.push_back(i);
  for (std::size_t i = 1; i < stages; ++i) t.maps.push_back(NiceEmbedding::corner(i, i + 1));
  return t;
}

MatrixTower MatrixTower::constant_tower(std::size_t stages) {
  if (stages == 0) throw std::invalid_argument("tower needs at least one stage");
  MatrixTower t;
  t.ring = CoefficientRing::Field;
  t.sizes.assign(stages, 1);
  for (std::size_t i = 1; i < stages; ++i) t.maps.push_back(NiceEmbedding::corner(1, 1));
  return t;
}

NiceEmbedding MatrixTower::between(std::size_t i, std::size_t j) const {
  if (i >= j || j >= stages()) throw std::out_of_range("tower: bad stage range");
  NiceEmbedding out = maps[i];
  for (std::size_t k = i + 1; k < j; ++k) out = NiceEmbedding::compose(out, maps[k]);
  return out;
}

LimitReport inverse_limit_stabilize(const MatrixTower &tower, std::size_t d) {
  if (tower.maps.size() + 1 != tower.stages())
    throw std::invalid_argument("tower: need one map between consecutive stages");
  LimitReport rep;
  rep.stages = tower.stages();
  std::size_t deg = tower.ring == CoefficientRing::Laurent ? d : 0;
  rep.degree = deg;
  long kd = static_cast<long>(deg);
  bool identity = true;

  for (std::size_t s = 0; s < tower.stages(); ++s) {
    MatrixCenter c = matrix_center(tower.sizes[s], deg, tower.ring);
    if (!c.all_scalar || c.basis.size() != 2 * deg + 1) {
      identity = false;
      rep.observations.push_back("stage " + std::to_string(s + 1) + ": centre has dimension " +
                                 std::to_string(c.basis.size()) +
                                 (c.all_scalar ? "" : " with non-scalar elements"));
    }
  }

  for (std::size_t s = 0; s + 1 < tower.stages(); ++s) {
    EmbeddingCheck chk = tower.maps[s].verify();
    if (!chk.ok) {
      identity = false;
      rep.observations.push_back("map " + std::to_string(s + 1) + ": " + chk.detail);
      continue;
    }
    std::size_t n = tower.sizes[s], m = tower.sizes[s + 1];
    for (long k = -kd; k <= kd; ++k) {
      LaurentPoly xk = LaurentPoly::monomial(k);
      LaurentMatrix got = sigma_map(tower.maps[s], LaurentMatrix::scalar(m, xk));
      if (!(got == LaurentMatrix::scalar(n, xk))) {
        identity = false;
        rep.observations.push_back("map " + std::to_string(s + 1) + ": " + matrix_power_name(k) +
                                   " -> " + got.to_string());
      }
    }
  }

  for (std::size_t i = 0; i < tower.stages(); ++i)
    for (std::size_t j = i + 1; j < tower.stages(); ++j)
      for (std::size_t l = j + 1; l < tower.stages(); ++l) {
        NiceEmbedding ij = tower.between(i, j), jl = tower.between(j, l), il = tower.between(i, l);
        for (long k = -kd; k <= kd; ++k) {
          LaurentMatrix z = LaurentMatrix::scalar(tower.sizes[l], LaurentPoly::monomial(k));
          if (!(sigma_map(ij, sigma_map(jl, z)) == sigma_map(il, z))) {
            rep.composition_ok = false;
            rep.observations.push_back("composition fails on stages " + std::to_string(i + 1) + "," +
                                       std::to_string(j + 1) + "," + std::to_string(l + 1));
          }
        }
      }

  rep.stabilized = identity && rep.composition_ok;
  if (rep.stabilized) {
    rep.limit = to_string(tower.ring);
    rep.observations.push_back("all connecting maps fix x^k I for |k| <= " + std::to_string(deg));
  } else {
    rep.limit = "unstabilized";
  }
  return rep;
}

} // namespace lpa
