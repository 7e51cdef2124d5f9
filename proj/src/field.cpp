#include "hopfo/field.hpp"

#include <ostream>
#include <sstream>

namespace hopfo {

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31)) {
    throw ValidationError("field characteristic " + std::to_string(p) + " exceeds 2^31");
  }
  if (!is_prime_number(p)) {
    throw ValidationError("field characteristic " + std::to_string(p) + " is not prime");
  }
  return Field(Kind::Prime, p);
}

std::string Field::to_string() const {
  return is_prime() ? "GF(" + std::to_string(p_) + ")" : std::string("Q");
}

namespace modp {

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) result = mul(result, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return result;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw DimensionError("division by zero in GF(" + std::to_string(p) + ")");
  return pow(a, p - 2, p);
}

std::uint64_t from_int(std::int64_t v, std::uint64_t p) {
  auto sp = static_cast<std::int64_t>(p);
  std::int64_t r = v % sp;
  if (r < 0) r += sp;
  return static_cast<std::uint64_t>(r);
}

}  // namespace modp

Scalar::Scalar(const Field& field, std::int64_t value) : field_(field) {
  if (field_.is_prime()) {
    residue_ = modp::from_int(value, field_.characteristic());
  } else {
    value_ = value;
  }
}

Scalar::Scalar(const Field& field, const Rational& value) : field_(field) {
  if (field_.is_prime()) {
    const auto p = field_.characteristic();
    BigInt num = boost::multiprecision::numerator(value) % BigInt(p);
    BigInt den = boost::multiprecision::denominator(value) % BigInt(p);
    if (num < 0) num += p;
    if (den < 0) den += p;
    auto n = num.convert_to<std::uint64_t>();
    auto d = den.convert_to<std::uint64_t>();
    residue_ = modp::mul(n, modp::inv(d, p), p);
  } else {
    value_ = value;
  }
}

Scalar Scalar::from_residue(const Field& f, std::uint64_t r) {
  Scalar s(f, std::int64_t{0});
  s.residue_ = r;
  return s;
}

bool Scalar::is_zero() const { return field_.is_prime() ? residue_ == 0 : value_ == 0; }
bool Scalar::is_one() const { return field_.is_prime() ? residue_ == 1 : value_ == 1; }

Rational Scalar::rational() const {
  return field_.is_prime() ? Rational(static_cast<long long>(residue_)) : value_;
}

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_)) {
    throw DimensionError("scalar arithmetic across fields " + field_.to_string() + " and " +
                         o.field_.to_string());
  }
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar r = *this;
  if (field_.is_prime()) {
    r.residue_ = modp::add(residue_, o.residue_, field_.characteristic());
  } else {
    r.value_ += o.value_;
  }
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  Scalar r = *this;
  if (field_.is_prime()) {
    r.residue_ = modp::sub(residue_, o.residue_, field_.characteristic());
  } else {
    r.value_ -= o.value_;
  }
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar r = *this;
  if (field_.is_prime()) {
    r.residue_ = modp::mul(residue_, o.residue_, field_.characteristic());
  } else {
    r.value_ *= o.value_;
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DimensionError("inverse of zero");
  Scalar r = *this;
  if (field_.is_prime()) {
    r.residue_ = modp::inv(residue_, field_.characteristic());
  } else {
    r.value_ = Rational(1) / value_;
  }
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const { return Scalar::zero(field_) - *this; }

Scalar Scalar::pow(std::uint64_t e) const {
  Scalar result = Scalar::one(field_);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_prime() ? a.residue_ == b.residue_ : a.value_ == b.value_;
}

std::string Scalar::to_string() const {
  if (field_.is_prime()) return std::to_string(residue_);
  std::ostringstream os;
  os << boost::multiprecision::numerator(value_);
  if (boost::multiprecision::denominator(value_) != 1) {
    os << '/' << boost::multiprecision::denominator(value_);
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar parse_scalar(const Field& f, const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Scalar(f, Rational(BigInt(text)));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw ValidationError("zero denominator in scalar '" + text + "'");
    return Scalar(f, Rational(num, den));
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const ValidationError*>(&e) != nullptr) throw;
    throw ValidationError("cannot parse scalar '" + text + "'");
  }
}

}  // namespace hopfo
