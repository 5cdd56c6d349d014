#ifndef GCELL_BIVAR_HPP
#define GCELL_BIVAR_HPP

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcell/param_poly.hpp"

namespace gcell {

/// Monomial x^a y^b.
struct Mono {
  int x = 0;
  int y = 0;

  int deg() const { return x + y; }
  bool divides(const Mono& o) const { return x <= o.x && y <= o.y; }
  Mono operator*(const Mono& o) const { return {x + o.x, y + o.y}; }
  Mono operator/(const Mono& o) const { return {x - o.x, y - o.y}; }
  bool operator==(const Mono& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Mono& o) const { return !(*this == o); }
};

inline Mono lcm(const Mono& a, const Mono& b) {
  return {a.x > b.x ? a.x : b.x, a.y > b.y ? a.y : b.y};
}

/// Local ordering: lower total degree is greater; ties broken by lex with
/// x > y. Returns +1 when a > b, 0 on equality, -1 otherwise.
inline int compare_local(const Mono& a, const Mono& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg() ? 1 : -1;
  if (a.x != b.x) return a.x > b.x ? 1 : -1;
  return 0;
}

struct LocalGreater {
  bool operator()(const Mono& a, const Mono& b) const { return compare_local(a, b) > 0; }
};

/// Sparse polynomial in x, y over a coefficient ring K. Terms are kept in
/// descending local order, so begin() is the leading term.
template <class K>
class BivarPoly {
 public:
  using TermMap = std::map<Mono, K, LocalGreater>;

  BivarPoly() = default;

  static BivarPoly term(const Mono& m, K c) {
    BivarPoly p;
    if (!coeff_is_zero(c)) p.terms_[m] = std::move(c);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  const Mono& leading_mono() const {
    require_nonzero();
    return terms_.begin()->first;
  }
  const K& leading_coeff() const {
    require_nonzero();
    return terms_.begin()->second;
  }
  /// Minimal total degree among terms (the order of the series).
  int order() const {
    require_nonzero();
    return terms_.begin()->first.deg();
  }
  /// Maximal total degree among terms.
  int degree() const {
    require_nonzero();
    int d = 0;
    for (const auto& [m, c] : terms_)
      if (m.deg() > d) d = m.deg();
    return d;
  }
  /// ecart = degree - order; zero exactly for homogeneous polynomials.
  int ecart() const { return degree() - order(); }

  /// Coefficient of x^a y^b, default-constructed zero when absent.
  K coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? K() : it->second;
  }

  void add_term(const Mono& m, const K& c) {
    if (coeff_is_zero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end())
      terms_[m] = c;
    else {
      it->second = it->second + c;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  BivarPoly operator-() const {
    BivarPoly r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
  }
  BivarPoly& operator+=(const BivarPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  BivarPoly& operator-=(const BivarPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  BivarPoly operator+(const BivarPoly& o) const {
    BivarPoly r = *this;
    r += o;
    return r;
  }
  BivarPoly operator-(const BivarPoly& o) const {
    BivarPoly r = *this;
    r -= o;
    return r;
  }
  BivarPoly operator*(const BivarPoly& o) const {
    BivarPoly r;
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  /// Multiply by the single term c * x^a y^b.
  BivarPoly times_term(const Mono& m, const K& c) const {
    BivarPoly r;
    if (coeff_is_zero(c)) return r;
    for (const auto& [mm, cc] : terms_) {
      K prod = cc * c;
      if (!coeff_is_zero(prod)) r.terms_[mm * m] = prod;
    }
    return r;
  }

  bool operator==(const BivarPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    for (; a != terms_.end(); ++a, ++b)
      if (a->first != b->first || !(a->second == b->second)) return false;
    return true;
  }
  bool operator!=(const BivarPoly& o) const { return !(*this == o); }

 private:
  static bool coeff_is_zero(const K& c) { return c == K(); }
  void require_nonzero() const {
    if (terms_.empty()) throw std::domain_error("BivarPoly: zero polynomial has no leading term");
  }
  TermMap terms_;
};

// K() is not the zero for Fp-with-default modulus vs a populated one; give
// the ring-specific zero tests instead.
template <>
inline bool BivarPoly<Rational>::coeff_is_zero(const Rational& c) {
  return c == 0;
}
template <>
inline bool BivarPoly<Fp>::coeff_is_zero(const Fp& c) {
  return c.is_zero();
}
template <>
inline bool BivarPoly<ParamPoly>::coeff_is_zero(const ParamPoly& c) {
  return c.is_zero();
}

using ParamBivarPoly = BivarPoly<ParamPoly>;

inline std::string mono_str(const Mono& m) {
  if (m.x == 0 && m.y == 0) return "1";
  std::ostringstream os;
  if (m.x > 0) {
    os << "x";
    if (m.x > 1) os << "^" << m.x;
  }
  if (m.y > 0) {
    if (m.x > 0) os << "*";
    os << "y";
    if (m.y > 1) os << "^" << m.y;
  }
  return os.str();
}

namespace detail {
inline bool coeff_str(const Rational& c, std::string& body, bool& negative) {
  Rational a = c;
  negative = a < 0;
  if (negative) a = -a;
  body = a.str();
  return a == 1;  // unit coefficient, may be elided before a monomial
}
inline bool coeff_str(const Fp& c, std::string& body, bool& negative) {
  negative = false;
  body = std::to_string(c.value());
  return c.value() == 1;
}
inline bool coeff_str(const ParamPoly& c, std::string& body, bool& negative) {
  negative = false;
  if (c.terms().size() == 1) {
    const auto& [m, q] = *c.terms().begin();
    if (q == 1 || q == -1) {
      negative = q < 0;
      ParamPoly abs = negative ? -c : c;
      if (m.is_one()) {
        body = "1";
        return true;
      }
      body = abs.str();
      return true;  // print as bare monomial, e.g. "c2*y"
    }
    body = c.str();
    return false;
  }
  body = "(" + c.str() + ")";
  return false;
}
}  // namespace detail

/// Render with terms in descending local order, e.g. "-x + c2*y + c3*y^2".
template <class K>
std::string poly_str(const BivarPoly<K>& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    std::string body;
    bool neg = false;
    bool unit = detail::coeff_str(c, body, neg);
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    bool constant = (m.x == 0 && m.y == 0);
    if (constant)
      os << body;
    else if (unit && body == "1")
      os << mono_str(m);
    else
      os << body << "*" << mono_str(m);
    first = false;
  }
  return os.str();
}

}  // namespace gcell

#endif
