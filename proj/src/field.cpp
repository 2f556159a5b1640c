#include "grpder/field.hpp"

#include <utility>

namespace grpder {
namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t mod_reduce(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

// Inverse mod p via extended Euclid; gcd(v, p) = 1 is guaranteed for p prime
// and v in (0, p).
std::int64_t mod_inverse(std::int64_t v, std::int64_t p) {
  std::int64_t r0 = p, r1 = v, t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  return mod_reduce(t0, p);
}

}  // namespace

FieldSpec FieldSpec::prime(std::int64_t p) {
  if (p == 2) throw CharTwoError();
  if (!is_prime(p))
    throw FieldError("field characteristic must be 0 or an odd prime, got " +
                     std::to_string(p));
  if (p >= (std::int64_t{1} << 31))
    throw FieldError("prime characteristic too large");
  FieldSpec f;
  f.char_ = p;
  return f;
}

FieldSpec FieldSpec::of_characteristic(std::int64_t c) {
  return c == 0 ? rationals() : prime(c);
}

Scalar Scalar::zero(const FieldSpec& f) { return {f.characteristic(), BigRational(0), 0}; }

Scalar Scalar::one(const FieldSpec& f) {
  return {f.characteristic(), BigRational(1), f.is_rationals() ? 0 : 1};
}

Scalar Scalar::of_int(const FieldSpec& f, std::int64_t v) {
  if (f.is_rationals()) return {0, BigRational(v), 0};
  return {f.characteristic(), BigRational(0), mod_reduce(v, f.characteristic())};
}

Scalar Scalar::of_rational(const FieldSpec& f, const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (f.is_rationals()) return {0, BigRational(num) / BigRational(den), 0};
  const std::int64_t p = f.characteristic();
  const std::int64_t n = static_cast<std::int64_t>(num % p);
  const std::int64_t d = static_cast<std::int64_t>(den % p);
  if (mod_reduce(d, p) == 0) throw std::domain_error("denominator vanishes mod p");
  std::int64_t r = mod_reduce(n, p) * mod_inverse(mod_reduce(d, p), p) % p;
  return {p, BigRational(0), r};
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
  if (text.empty()) throw FieldError("empty scalar literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return of_rational(f, BigInt(text), 1);
    return of_rational(f, BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const FieldError&) {
    throw;
  } catch (const std::exception&) {
    throw FieldError("bad scalar literal: " + text);
  }
}

FieldSpec Scalar::field() const { return FieldSpec::of_characteristic(char_); }

bool Scalar::is_zero() const { return char_ == 0 ? q_.is_zero() : r_ == 0; }

void Scalar::check_same_field(const Scalar& o) const {
  if (char_ != o.char_)
    throw MismatchError("scalars from different fields (characteristics " +
                        std::to_string(char_) + " and " + std::to_string(o.char_) + ")");
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  if (char_ == 0) return {0, q_ + o.q_, 0};
  return {char_, BigRational(0), (r_ + o.r_) % char_};
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  if (char_ == 0) return {0, q_ - o.q_, 0};
  return {char_, BigRational(0), mod_reduce(r_ - o.r_, char_)};
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  if (char_ == 0) return {0, q_ * o.q_, 0};
  return {char_, BigRational(0), r_ * o.r_ % char_};
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  if (char_ == 0) return {0, -q_, 0};
  return {char_, BigRational(0), mod_reduce(-r_, char_)};
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (char_ == 0) return {0, 1 / q_, 0};
  return {char_, BigRational(0), mod_inverse(r_, char_)};
}

bool Scalar::operator==(const Scalar& o) const {
  return char_ == o.char_ && (char_ == 0 ? q_ == o.q_ : r_ == o.r_);
}

std::string Scalar::str() const {
  if (char_ != 0) return std::to_string(r_);
  const BigInt num = numerator(q_), den = denominator(q_);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace grpder
