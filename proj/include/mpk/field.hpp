#pragma once

// Exact scalar arithmetic over the ground field: rationals (arbitrary
// precision, GMP-backed) or a prime field F_p.  Every value in a workspace
// lives over one FieldSpec; mixing fields is an error, not a conversion.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mpk {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

// x^-1 mod p via extended Euclid; requires 0 < x < p.
inline std::int64_t mod_inverse(std::int64_t x, std::int64_t p) {
  std::int64_t a = x, b = p, u = 1, v = 0;
  while (b != 0) {
    std::int64_t q = a / b;
    a -= q * b;
    std::swap(a, b);
    u -= q * v;
    std::swap(u, v);
  }
  if (a != 1) throw Error("element has no inverse mod " + std::to_string(p));
  return u >= 0 ? u : u + p;
}

}  // namespace detail

// Ground field descriptor.  characteristic == 0 means Q, otherwise a prime p.
struct FieldSpec {
  std::uint32_t characteristic = 0;

  static FieldSpec rationals() { return FieldSpec{0}; }

  static FieldSpec prime(std::uint32_t p) {
    if (!detail::is_prime_u32(p))
      throw Error("characteristic " + std::to_string(p) + " is not prime");
    return FieldSpec{p};
  }

  bool is_rational() const { return characteristic == 0; }

  bool operator==(const FieldSpec& o) const {
    return characteristic == o.characteristic;
  }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

  std::string str() const {
    return is_rational() ? "Q" : "F" + std::to_string(characteristic);
  }
};

// One exact field element.  Rationals are kept canonical (lowest terms,
// positive denominator); residues are kept in [0, p).
class Scalar {
 public:
  Scalar() : field_{0}, res_(0) {}

  static Scalar zero(FieldSpec f) { return of_int(f, 0); }
  static Scalar one(FieldSpec f) { return of_int(f, 1); }

  static Scalar of_int(FieldSpec f, long long n) {
    Scalar s;
    s.field_ = f;
    if (f.is_rational()) {
      s.rat_ = mpq_class(static_cast<long>(n));
    } else {
      std::int64_t p = f.characteristic;
      s.res_ = static_cast<std::int64_t>(n % p);
      if (s.res_ < 0) s.res_ += p;
    }
    return s;
  }

  // num/den; den must be invertible (nonzero, and coprime to p over F_p).
  static Scalar of_fraction(FieldSpec f, long long num, long long den) {
    if (den == 0) throw Error("zero denominator");
    if (f.is_rational()) {
      Scalar s;
      s.field_ = f;
      s.rat_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
      s.rat_.canonicalize();
      return s;
    }
    return of_int(f, num) / of_int(f, den);
  }

  const FieldSpec& field() const { return field_; }

  bool is_zero() const {
    return field_.is_rational() ? rat_ == 0 : res_ == 0;
  }
  bool is_one() const { return field_.is_rational() ? rat_ == 1 : res_ == 1; }

  Scalar operator-() const {
    Scalar s(*this);
    if (field_.is_rational())
      s.rat_ = -rat_;
    else if (res_ != 0)
      s.res_ = field_.characteristic - res_;
    return s;
  }

  Scalar operator+(const Scalar& o) const {
    check(o);
    Scalar s(*this);
    if (field_.is_rational()) {
      s.rat_ += o.rat_;
    } else {
      s.res_ += o.res_;
      if (s.res_ >= field_.characteristic) s.res_ -= field_.characteristic;
    }
    return s;
  }

  Scalar operator-(const Scalar& o) const { return *this + (-o); }

  Scalar operator*(const Scalar& o) const {
    check(o);
    Scalar s(*this);
    if (field_.is_rational())
      s.rat_ *= o.rat_;
    else
      s.res_ = (res_ * o.res_) % field_.characteristic;
    return s;
  }

  Scalar inverse() const {
    if (is_zero()) throw Error("division by zero");
    Scalar s(*this);
    if (field_.is_rational())
      s.rat_ = 1 / rat_;
    else
      s.res_ = detail::mod_inverse(res_, field_.characteristic);
    return s;
  }

  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const {
    check(o);
    return field_.is_rational() ? rat_ == o.rat_ : res_ == o.res_;
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Canonical rendering: "a" or "a/b" over Q (b > 0), residue in [0,p) else.
  std::string str() const {
    if (field_.is_rational()) return rat_.get_str();
    return std::to_string(res_);
  }

  // Residue value (prime fields only), in [0, p).
  std::int64_t residue() const {
    if (field_.is_rational()) throw Error("residue() on a rational scalar");
    return res_;
  }

  const mpq_class& rational() const {
    if (!field_.is_rational()) throw Error("rational() on a residue scalar");
    return rat_;
  }

 private:
  void check(const Scalar& o) const {
    if (field_ != o.field_)
      throw Error("field mismatch: " + field_.str() + " vs " + o.field_.str());
  }

  FieldSpec field_;
  mpq_class rat_;
  std::int64_t res_ = 0;
};

}  // namespace mpk
