#include "lpa/laurent.hpp"

#include <cctype>
#include <stdexcept>

namespace lpa {

LaurentPoly LaurentPoly::monomial(long exponent, const Rational &c) {
  LaurentPoly p;
  p.set(exponent, c);
  return p;
}

Rational LaurentPoly::coeff(long exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void LaurentPoly::set(long exponent, const Rational &c) {
  if (c == 0)
    coeffs_.erase(exponent);
  else
    coeffs_[exponent] = c;
}

bool LaurentPoly::is_constant() const {
  return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
}

long LaurentPoly::min_exponent() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
long LaurentPoly::max_exponent() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &o) {
  for (const auto &[k, c] : o.coeffs_) set(k, coeff(k) + c);
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly &o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto &[k, c] : r.coeffs_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly &o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly &o) const {
  LaurentPoly r;
  for (const auto &[a, ca] : coeffs_)
    for (const auto &[b, cb] : o.coeffs_) r.set(a + b, r.coeff(a + b) + ca * cb);
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  for (const auto &[k, c] : coeffs_) r.coeffs_.emplace(-k, c);
  return r;
}

std::string LaurentPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto &[k, c] : coeffs_) {
    Rational mag = c < 0 ? Rational(-c) : c;
    out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    first = false;
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += k == 1 ? "x" : "x^" + std::to_string(k);
  }
  return out;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  LaurentPoly p;
  std::size_t i = 0;
  auto ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string &msg) {
    throw std::invalid_argument("Laurent polynomial: " + msg + " at position " + std::to_string(i));
  };
  auto digits = [&] {
    std::size_t s = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    return std::string(text.substr(s, i - s));
  };
  ws();
  if (i < text.size() && text[i] == '0' && text.find_first_not_of("0 \t") == std::string_view::npos)
    return p;
  bool first = true;
  while (true) {
    ws();
    if (i >= text.size()) {
      if (first) fail("empty input");
      break;
    }
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      ws();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    Rational c = 1;
    bool have_coeff = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::string num = digits();
      if (i < text.size() && text[i] == '/') {
        ++i;
        std::string den = digits();
        if (den.empty() || den.find_first_not_of('0') == std::string::npos) fail("bad denominator");
        num += "/" + den;
      }
      c = Rational(num);
      c.canonicalize();
      have_coeff = true;
      ws();
    }
    long exp = 0;
    bool have_x = false;
    if (have_coeff && i < text.size() && text[i] == '*') {
      ++i;
      ws();
      if (i >= text.size() || text[i] != 'x') fail("expected 'x'");
    }
    if (i < text.size() && text[i] == 'x') {
      ++i;
      have_x = true;
      exp = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        bool neg = false;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) neg = text[i++] == '-';
        std::string e = digits();
        if (e.empty()) fail("expected exponent");
        exp = std::stol(e) * (neg ? -1 : 1);
      }
    }
    if (!have_coeff && !have_x) fail("expected a term");
    p.set(exp, p.coeff(exp) + c * sign);
  }
  return p;
}

// ----------------------------------------------------------- LaurentMatrix

LaurentMatrix LaurentMatrix::identity(std::size_t n) { return scalar(n, Rational(1)); }

LaurentMatrix LaurentMatrix::scalar(std::size_t n, const LaurentPoly &p) {
  LaurentMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = p;
  return m;
}

LaurentMatrix LaurentMatrix::unit(std::size_t n, std::size_t i, std::size_t j) {
  LaurentMatrix m(n);
  m.at(i, j) = Rational(1);
  return m;
}

LaurentMatrix &LaurentMatrix::operator+=(const LaurentMatrix &o) {
  if (n_ != o.n_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
  return *this;
}

LaurentMatrix LaurentMatrix::operator+(const LaurentMatrix &o) const {
  LaurentMatrix r = *this;
  r += o;
  return r;
}

LaurentMatrix LaurentMatrix::operator-(const LaurentMatrix &o) const {
  if (n_ != o.n_) throw std::invalid_argument("matrix size mismatch");
  LaurentMatrix r = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = r.entries_[k] - o.entries_[k];
  return r;
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix &o) const {
  if (n_ != o.n_) throw std::invalid_argument("matrix size mismatch");
  LaurentMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const LaurentPoly &a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (!o.at(k, j).is_zero()) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

LaurentMatrix operator*(const LaurentPoly &p, const LaurentMatrix &m) {
  LaurentMatrix r = m;
  for (auto &e : r.entries_) e = p * e;
  return r;
}

bool LaurentMatrix::is_zero() const {
  for (const auto &e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool LaurentMatrix::is_constant() const {
  for (const auto &e : entries_)
    if (!e.is_constant()) return false;
  return true;
}

bool LaurentMatrix::is_scalar() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      if (i != j && !at(i, j).is_zero()) return false;
      if (i == j && !(at(i, i) == at(0, 0))) return false;
    }
  return true;
}

LaurentMatrix LaurentMatrix::conjugate_transpose() const {
  LaurentMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r.at(j, i) = at(i, j).bar();
  return r;
}

std::string LaurentMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < n_; ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) out += ", ";
      out += at(i, j).to_string();
    }
    out += "]";
  }
  return out + "]";
}

} // namespace lpa
