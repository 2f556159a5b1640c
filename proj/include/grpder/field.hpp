#pragma once

// Exact scalar arithmetic over Q or a prime field F_p (p an odd prime).

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace grpder {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

struct FieldError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Characteristic 2 is outside the supported range and gets its own type so
// callers can distinguish it from a generic bad characteristic.
struct CharTwoError : FieldError {
  CharTwoError() : FieldError("characteristic 2 is not supported") {}
};

struct MismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class FieldSpec {
 public:
  FieldSpec() : char_(0) {}  // rationals

  static FieldSpec rationals() { return FieldSpec(); }
  static FieldSpec prime(std::int64_t p);
  // characteristic 0 -> rationals, otherwise odd prime p.
  static FieldSpec of_characteristic(std::int64_t c);

  std::int64_t characteristic() const { return char_; }
  bool is_rationals() const { return char_ == 0; }
  bool operator==(const FieldSpec&) const = default;

 private:
  std::int64_t char_;
};

class Scalar {
 public:
  Scalar() : char_(0), q_(0), r_(0) {}  // zero over Q

  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  static Scalar of_int(const FieldSpec& f, std::int64_t v);
  static Scalar of_rational(const FieldSpec& f, const BigInt& num, const BigInt& den);
  // Inverse of str(): "num", "num/den" over Q; a decimal residue over F_p.
  static Scalar parse(const FieldSpec& f, const std::string& text);

  FieldSpec field() const;
  bool is_zero() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws std::domain_error on zero divisor
  Scalar operator-() const;
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Canonical text form: lowest terms with positive denominator ("-3", "2/5")
  // over Q; the residue in [0, p) in decimal over F_p.
  std::string str() const;

 private:
  Scalar(std::int64_t c, BigRational q, std::int64_t r)
      : char_(c), q_(std::move(q)), r_(r) {}
  void check_same_field(const Scalar& o) const;

  std::int64_t char_;
  BigRational q_;    // value when char_ == 0
  std::int64_t r_;   // residue in [0, char_) when char_ > 0
};

}  // namespace grpder
