// Ground fields: prime fields GF(p) and the rationals.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace hopfo {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a mathematical axiom or precondition (bad structure constants,
/// non-multiplicative action, unsupported catalog parameters, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Operands of incompatible shape or over different fields / Hopf algebras.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An invariant that theory guarantees failed to hold. Indicates a bug or an
/// inconsistent input that slipped through validation.
class InternalError : public Error {
 public:
  using Error::Error;
};

class Field {
 public:
  enum class Kind { Prime, Rational };

  /// GF(p). Throws ValidationError unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);
  static Field rationals() { return Field(Kind::Rational, 0); }

  Kind kind() const { return kind_; }
  bool is_prime() const { return kind_ == Kind::Prime; }
  /// p for GF(p), 0 for Q.
  std::uint64_t characteristic() const { return p_; }

  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint64_t p_;
};

bool is_prime_number(std::uint64_t n);

namespace modp {

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
/// Inverse of a nonzero residue.
std::uint64_t inv(std::uint64_t a, std::uint64_t p);
std::uint64_t from_int(std::int64_t v, std::uint64_t p);

}  // namespace modp

/// A field element. Carries its field so that arithmetic can check operands.
class Scalar {
 public:
  Scalar(const Field& field, std::int64_t value);
  Scalar(const Field& field, const Rational& value);

  static Scalar zero(const Field& f) { return Scalar(f, std::int64_t{0}); }
  static Scalar one(const Field& f) { return Scalar(f, std::int64_t{1}); }
  /// Internal constructor from a canonical residue (0 <= r < p).
  static Scalar from_residue(const Field& f, std::uint64_t r);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Canonical residue; only meaningful over GF(p).
  std::uint64_t residue() const { return residue_; }
  /// Exact value over Q; over GF(p) the least nonnegative representative.
  Rational rational() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inverse() const;
  Scalar pow(std::uint64_t e) const;

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Integer for GF(p) and integral rationals, "a/b" otherwise.
  std::string to_string() const;

 private:
  void check_same(const Scalar& o) const;

  Field field_;
  std::uint64_t residue_ = 0;
  Rational value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Parses "3", "-2", "1/2" into a scalar of the given field.
Scalar parse_scalar(const Field& f, const std::string& text);

}  // namespace hopfo
