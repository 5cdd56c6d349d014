#ifndef GCELL_FIELD_HPP
#define GCELL_FIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gcell {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

struct FieldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Element of the prime field F_p. The modulus travels with the element so
/// polynomials over F_p need no shared context.
class Fp {
 public:
  Fp() = default;
  Fp(std::int64_t v, std::int64_t p) : p_(p) {
    if (p < 2) throw FieldError("Fp: modulus must be >= 2");
    v_ = v % p;
    if (v_ < 0) v_ += p;
  }

  std::int64_t value() const { return v_; }
  std::int64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator-() const { return Fp(p_ - v_, p_); }
  Fp operator+(const Fp& o) const { return Fp(v_ + o.check(p_), p_); }
  Fp operator-(const Fp& o) const { return Fp(v_ - o.check(p_), p_); }
  Fp operator*(const Fp& o) const {
    o.check(p_);
    return Fp(static_cast<std::int64_t>(
                  static_cast<unsigned __int128>(v_) * static_cast<std::uint64_t>(o.v_) %
                  static_cast<std::uint64_t>(p_)),
              p_);
  }
  Fp inv() const {
    if (v_ == 0) throw FieldError("Fp: division by zero");
    // extended gcd
    std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
    while (b != 0) {
      std::int64_t q = a / b;
      std::int64_t tmp = a - q * b;
      a = b;
      b = tmp;
      tmp = x0 - q * x1;
      x0 = x1;
      x1 = tmp;
    }
    return Fp(x0, p_);
  }
  Fp operator/(const Fp& o) const { return *this * o.inv(); }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }
  bool operator!=(const Fp& o) const { return !(*this == o); }

 private:
  std::int64_t check(std::int64_t p) const {
    if (p_ != p) throw FieldError("Fp: mixed moduli");
    return v_;
  }
  std::int64_t v_ = 0;
  std::int64_t p_ = 2;
};

// Helpers so generic polynomial code can mint constants in the right field.
inline Rational field_one(const Rational&) { return Rational(1); }
inline Fp field_one(const Fp& a) { return Fp(1, a.modulus()); }
inline bool field_is_zero(const Rational& a) { return a == 0; }
inline bool field_is_zero(const Fp& a) { return a.is_zero(); }

inline Rational from_rational(const Rational& q, const Rational&) { return q; }
inline Fp from_rational(const Rational& q, const Fp& witness) {
  std::int64_t p = witness.modulus();
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  BigInt bp = p;
  if (den % bp == 0) throw FieldError("from_rational: denominator divisible by field characteristic");
  Fp n(static_cast<std::int64_t>(num % bp), p);
  Fp d(static_cast<std::int64_t>(den % bp), p);
  return n / d;
}

inline std::string to_string(const Fp& a) { return std::to_string(a.value()); }
inline std::string to_string(const Rational& a) { return a.str(); }

}  // namespace gcell

#endif
