#ifndef LPA_LAURENT_HPP
#define LPA_LAURENT_HPP

#include "lpa/algebra.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace lpa {

/// Exact element of Q[x, x^-1]; no zero coefficients are stored.
class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(const Rational &c) { set(0, c); } // NOLINT: constants convert
  static LaurentPoly monomial(long exponent, const Rational &c = 1);

  const std::map<long, Rational> &coeffs() const { return coeffs_; }
  Rational coeff(long exponent) const;
  void set(long exponent, const Rational &c);
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const;
  long min_exponent() const;
  long max_exponent() const;

  LaurentPoly operator+(const LaurentPoly &o) const;
  LaurentPoly operator-(const LaurentPoly &o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly &o) const;
  LaurentPoly &operator+=(const LaurentPoly &o);
  /// x -> x^-1
  LaurentPoly bar() const;

  bool operator==(const LaurentPoly &) const = default;

  /// `3*x^-2 + 1 + 2*x^5`, ascending exponents.
  std::string to_string() const;
  static LaurentPoly parse(std::string_view text);

private:
  std::map<long, Rational> coeffs_;
};

/// Square matrix over Q[x, x^-1].
class LaurentMatrix {
public:
  LaurentMatrix() = default;
  explicit LaurentMatrix(std::size_t n) : n_(n), entries_(n * n) {}
  static LaurentMatrix identity(std::size_t n);
  static LaurentMatrix scalar(std::size_t n, const LaurentPoly &p);
  static LaurentMatrix unit(std::size_t n, std::size_t i, std::size_t j);

  std::size_t size() const { return n_; }
  LaurentPoly &at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const LaurentPoly &at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  LaurentMatrix operator+(const LaurentMatrix &o) const;
  LaurentMatrix operator-(const LaurentMatrix &o) const;
  LaurentMatrix operator*(const LaurentMatrix &o) const;
  LaurentMatrix &operator+=(const LaurentMatrix &o);
  friend LaurentMatrix operator*(const LaurentPoly &p, const LaurentMatrix &m);

  bool is_zero() const;
  bool is_constant() const;
  /// p(x) * I for some p.
  bool is_scalar() const;
  /// Transpose combined with x -> x^-1 on every entry.
  LaurentMatrix conjugate_transpose() const;

  bool operator==(const LaurentMatrix &) const = default;

  /// Row-major bracketed list, e.g. `[[1, x], [0, x^-1]]`.
  std::string to_string() const;

private:
  std::size_t n_ = 0;
  std::vector<LaurentPoly> entries_;
};

} // namespace lpa

#endif // LPA_LAURENT_HPP
