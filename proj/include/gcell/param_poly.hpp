#ifndef GCELL_PARAM_POLY_HPP
#define GCELL_PARAM_POLY_HPP

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gcell/field.hpp"

namespace gcell {

/// Monomial in the cell parameters c_1..c_D: sorted (index, exponent) pairs.
struct ParamMono {
  std::vector<std::pair<int, int>> factors;

  bool operator<(const ParamMono& o) const { return factors < o.factors; }
  bool operator==(const ParamMono& o) const { return factors == o.factors; }
  bool is_one() const { return factors.empty(); }

  ParamMono operator*(const ParamMono& o) const {
    ParamMono r;
    auto a = factors.begin(), b = o.factors.begin();
    while (a != factors.end() || b != o.factors.end()) {
      if (b == o.factors.end() || (a != factors.end() && a->first < b->first))
        r.factors.push_back(*a++);
      else if (a == factors.end() || b->first < a->first)
        r.factors.push_back(*b++);
      else {
        r.factors.emplace_back(a->first, a->second + b->second);
        ++a;
        ++b;
      }
    }
    return r;
  }
};

/// Polynomial in the parameter ring Q[c_1..c_D], sparse with exact rational
/// coefficients. Terms held in a canonical order so equality is structural.
class ParamPoly {
 public:
  ParamPoly() = default;
  explicit ParamPoly(Rational c) {
    if (c != 0) terms_[ParamMono{}] = std::move(c);
  }
  static ParamPoly param(int k) {
    ParamPoly p;
    ParamMono m;
    m.factors.emplace_back(k, 1);
    p.terms_[m] = 1;
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<ParamMono, Rational>& terms() const { return terms_; }

  /// True when the polynomial is a single parameter c_k; returns k or 0.
  int single_param() const {
    if (terms_.size() != 1) return 0;
    const auto& [m, c] = *terms_.begin();
    if (c != 1 || m.factors.size() != 1 || m.factors[0].second != 1) return 0;
    return m.factors[0].first;
  }

  ParamPoly operator-() const {
    ParamPoly r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
  }
  ParamPoly& operator+=(const ParamPoly& o) {
    for (const auto& [m, c] : o.terms_) {
      auto it = terms_.find(m);
      if (it == terms_.end())
        terms_[m] = c;
      else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
      }
    }
    return *this;
  }
  ParamPoly& operator-=(const ParamPoly& o) { return *this += -o; }
  ParamPoly operator+(const ParamPoly& o) const {
    ParamPoly r = *this;
    r += o;
    return r;
  }
  ParamPoly operator-(const ParamPoly& o) const {
    ParamPoly r = *this;
    r -= o;
    return r;
  }
  ParamPoly operator*(const ParamPoly& o) const {
    ParamPoly r;
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : o.terms_) {
        ParamMono m = ma * mb;
        auto it = r.terms_.find(m);
        if (it == r.terms_.end())
          r.terms_[m] = ca * cb;
        else {
          it->second += ca * cb;
          if (it->second == 0) r.terms_.erase(it);
        }
      }
    return r;
  }

  bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const ParamPoly& o) const { return !(*this == o); }
  bool operator<(const ParamPoly& o) const { return terms_ < o.terms_; }

  template <class K>
  K evaluate(const std::vector<K>& values, const K& one) const {
    K acc = one - one;  // zero of the field
    for (const auto& [m, c] : terms_) {
      K term = from_rational(c, one);
      for (const auto& [var, exp] : m.factors) {
        if (var < 1 || var > static_cast<int>(values.size()))
          throw std::invalid_argument("ParamPoly::evaluate: assignment does not cover parameter c_" +
                                      std::to_string(var));
        for (int e = 0; e < exp; ++e) term = term * values[static_cast<std::size_t>(var) - 1];
      }
      acc = acc + term;
    }
    return acc;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      Rational a = c;
      if (first) {
        if (a < 0) {
          os << "-";
          a = -a;
        }
      } else {
        os << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      bool unit = (a == 1) && !m.is_one();
      if (!unit) os << a.str();
      bool firstvar = !unit ? false : true;
      for (const auto& [var, exp] : m.factors) {
        if (!firstvar || !unit) os << "*";
        os << "c" << var;
        if (exp > 1) os << "^" << exp;
        firstvar = false;
      }
      first = false;
    }
    return os.str();
  }

 private:
  std::map<ParamMono, Rational> terms_;
};

}  // namespace gcell

#endif
