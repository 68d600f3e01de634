#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "brisk/errors.hpp"

namespace brisk {

/// Deterministic trial-division primality test.
bool is_prime(std::int64_t n);

/// Runtime description of the ground field.
struct FieldSpec {
  enum class Kind { prime, rational };
  Kind kind = Kind::prime;
  std::int64_t p = 101;

  static FieldSpec prime(std::int64_t p);
  static FieldSpec rational() { return FieldSpec{Kind::rational, 0}; }
  /// Accepts "prime:<p>", "prime <p>" or "rational".
  static FieldSpec parse(const std::string& text);

  bool is_prime_field() const { return kind == Kind::prime; }
  std::string str() const;
  bool operator==(const FieldSpec&) const = default;
};

/// The prime field F_p for an odd prime 5 <= p < 2^31.
class PrimeField {
 public:
  using Elt = std::int64_t;

  PrimeField() : p_(101) {}
  explicit PrimeField(std::int64_t p);

  std::int64_t modulus() const { return p_; }
  FieldSpec spec() const { return FieldSpec::prime(p_); }
  static constexpr bool enumerable = true;

  Elt zero() const { return 0; }
  Elt one() const { return 1; }
  Elt from_int(long long v) const {
    long long r = v % p_;
    return r < 0 ? r + p_ : r;
  }
  Elt from_rational(const mpq_class& q) const;
  Elt add(Elt a, Elt b) const {
    Elt s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elt sub(Elt a, Elt b) const {
    Elt s = a - b;
    return s < 0 ? s + p_ : s;
  }
  Elt neg(Elt a) const { return a == 0 ? 0 : p_ - a; }
  Elt mul(Elt a, Elt b) const { return (a * b) % p_; }
  Elt inv(Elt a) const;
  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
  bool is_zero(Elt a) const { return a == 0; }
  bool is_one(Elt a) const { return a == 1; }
  bool eq(Elt a, Elt b) const { return a == b; }
  /// Total order used for canonical sorting.
  bool less(Elt a, Elt b) const { return a < b; }
  std::string str(Elt a) const { return std::to_string(a); }
  /// Symmetric representative in (-p/2, p/2], used for display.
  long long signed_value(Elt a) const { return a > p_ / 2 ? a - p_ : a; }

  /// Number of field elements and the element of index i in [0, p).
  std::int64_t size() const { return p_; }
  Elt element(std::int64_t i) const { return i; }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::int64_t p_;
};

/// The rational numbers with arbitrary precision.
class RationalField {
 public:
  using Elt = mpq_class;

  RationalField() = default;

  FieldSpec spec() const { return FieldSpec::rational(); }
  static constexpr bool enumerable = false;

  Elt zero() const { return Elt(0); }
  Elt one() const { return Elt(1); }
  Elt from_int(long long v) const { return Elt(static_cast<long>(v)); }
  Elt from_rational(const mpq_class& q) const { return q; }
  Elt add(const Elt& a, const Elt& b) const { return a + b; }
  Elt sub(const Elt& a, const Elt& b) const { return a - b; }
  Elt neg(const Elt& a) const { return -a; }
  Elt mul(const Elt& a, const Elt& b) const { return a * b; }
  Elt inv(const Elt& a) const;
  Elt div(const Elt& a, const Elt& b) const { return a * inv(b); }
  bool is_zero(const Elt& a) const { return sgn(a) == 0; }
  bool is_one(const Elt& a) const { return a == 1; }
  bool eq(const Elt& a, const Elt& b) const { return a == b; }
  bool less(const Elt& a, const Elt& b) const { return a < b; }
  std::string str(const Elt& a) const { return a.get_str(); }

  std::int64_t size() const { throw EnumerationUnsupported(); }
  Elt element(std::int64_t) const { throw EnumerationUnsupported(); }

  bool operator==(const RationalField&) const { return true; }
};

}  // namespace brisk
