#include "lpa/algebra.hpp"

#include <cctype>

namespace lpa {

namespace {

class Parser {
public:
  Parser(const Algebra &alg, std::string_view text) : alg_(alg), g_(alg.graph()), s_(text) {}

  Element parse() {
    Element x = sum();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return x;
  }

private:
  [[noreturn]] void fail(const std::string &msg) const { throw ElementParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  Element sum() {
    skip_ws();
    bool neg = accept('-');
    Element x = product();
    if (neg) x = -x;
    for (;;) {
      if (accept('+'))
        x += product();
      else if (accept('-'))
        x -= product();
      else
        return x;
    }
  }

  Element product() {
    Element x = factor();
    while (accept('*')) x = x * factor();
    return x;
  }

  Element factor() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Element x = sum();
      if (!accept(')')) fail("expected ')'");
      return x;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return alg_.scalar_unit(number());
    return walk();
  }

  Rational number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string num(s_.substr(start, pos_ - start));
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      std::size_t dstart = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (dstart == pos_) fail("expected denominator");
      std::string den(s_.substr(dstart, pos_ - dstart));
      if (den.find_first_not_of('0') == std::string::npos)
        fail("zero denominator");
      Rational q(num + "/" + den);
      q.canonicalize();
      return q;
    }
    return Rational(num);
  }

  std::optional<Path> path() {
    skip_ws();
    if (pos_ >= s_.size() || !ident_char(s_[pos_])) return std::nullopt;
    std::vector<std::pair<std::string, std::size_t>> ids;
    for (;;) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
      if (start == pos_) fail("expected identifier");
      ids.emplace_back(std::string(s_.substr(start, pos_ - start)), start);
      if (pos_ < s_.size() && s_[pos_] == '.')
        ++pos_;
      else
        break;
    }
    if (ids.size() == 1) {
      if (auto v = g_.find_vertex(ids[0].first)) return Path::vertex(*v);
    }
    Path p;
    for (const auto &[name, at] : ids) {
      auto e = g_.find_edge(name);
      if (!e) {
        pos_ = at;
        fail(g_.find_vertex(name) ? "vertex '" + name + "' inside a path"
                                  : "unknown identifier '" + name + "'");
      }
      if (!p.edges.empty() && g_.range(p.edges.back()) != g_.source(*e)) {
        pos_ = at;
        fail("edge '" + name + "' does not continue the path");
      }
      if (p.edges.empty()) p.base = g_.source(*e);
      p.edges.push_back(*e);
    }
    return p;
  }

  Element walk() {
    std::size_t start = pos_;
    std::optional<Path> alpha = path();
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '~') {
      ++pos_;
      std::optional<Path> beta = path();
      if (!alpha && !beta) fail("'~' needs a path on at least one side");
      if (!beta) return alg_.ghost(*alpha);
      if (!alpha) return alg_.ghost(*beta);
      if (path_range(g_, *alpha) != path_range(g_, *beta)) {
        pos_ = start;
        fail("walk ranges differ");
      }
      return alg_.walk(*alpha, *beta);
    }
    if (!alpha) fail("expected a walk, number or '('");
    return alg_.path(*alpha);
  }

  const Algebra &alg_;
  const Graph &g_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

} // namespace

Element parse_element(const Algebra &alg, std::string_view text) { return Parser(alg, text).parse(); }

} // namespace lpa
