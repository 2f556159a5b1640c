#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grpder/field.hpp"
#include "test_util.hpp"

using namespace grpder;

TEST_CASE("field spec accepts 0 and odd primes only") {
  CHECK(FieldSpec::rationals().characteristic() == 0);
  CHECK(FieldSpec::rationals().is_rationals());
  CHECK(FieldSpec::prime(3).characteristic() == 3);
  CHECK(FieldSpec::prime(5).characteristic() == 5);
  CHECK(FieldSpec::prime(7).characteristic() == 7);
  CHECK(FieldSpec::of_characteristic(0) == FieldSpec::rationals());
  CHECK(FieldSpec::of_characteristic(11) == FieldSpec::prime(11));

  CHECK_THROWS_AS(FieldSpec::prime(2), CharTwoError);
  CHECK_THROWS_AS(FieldSpec::of_characteristic(2), CharTwoError);
  CHECK_THROWS_AS(FieldSpec::prime(1), FieldError);
  CHECK_THROWS_AS(FieldSpec::prime(9), FieldError);
  CHECK_THROWS_AS(FieldSpec::prime(-3), FieldError);
  CHECK_THROWS_AS(FieldSpec::prime(15), FieldError);
  // characteristic 2 failures must be distinguishable from other bad inputs
  CHECK_THROWS_AS(FieldSpec::prime(9), std::invalid_argument);
  bool two_specific = false;
  try {
    FieldSpec::prime(2);
  } catch (const CharTwoError&) {
    two_specific = true;
  }
  CHECK(two_specific);
}

TEST_CASE("rational scalars are canonical") {
  const FieldSpec q = FieldSpec::rationals();
  CHECK(Scalar::of_rational(q, 2, 4).str() == "1/2");
  CHECK(Scalar::of_rational(q, 1, -2).str() == "-1/2");
  CHECK(Scalar::of_rational(q, -6, -4).str() == "3/2");
  CHECK(Scalar::of_int(q, -3).str() == "-3");
  CHECK(Scalar::zero(q).str() == "0");
  CHECK(Scalar::one(q).str() == "1");
  CHECK((Scalar::of_rational(q, 1, 3) + Scalar::of_rational(q, 2, 3)).str() == "1");
  CHECK((Scalar::of_rational(q, 1, 2) * Scalar::of_rational(q, 2, 3)).str() == "1/3");
  CHECK((Scalar::of_int(q, 1) / Scalar::of_int(q, -4)).str() == "-1/4");
  CHECK((-Scalar::of_rational(q, 5, 10)).str() == "-1/2");
  CHECK(Scalar::of_rational(q, 0, 7) == Scalar::zero(q));
  CHECK_THROWS_AS(Scalar::of_rational(q, 1, 0), std::domain_error);
  CHECK_THROWS_AS(Scalar::one(q) / Scalar::zero(q), std::domain_error);
  CHECK_THROWS_AS(Scalar::zero(q).inverse(), std::domain_error);
}

TEST_CASE("scalar parsing round-trips") {
  const FieldSpec q = FieldSpec::rationals();
  for (const char* lit : {"0", "1", "-1", "7", "-3", "1/2", "-5/3", "22/7"}) {
    const Scalar s = Scalar::parse(q, lit);
    CHECK(s.str() == lit);
    CHECK(Scalar::parse(q, s.str()) == s);
  }
  CHECK(Scalar::parse(q, "3/6").str() == "1/2");
  CHECK(Scalar::parse(q, "-2/4").str() == "-1/2");
  CHECK_THROWS_AS(Scalar::parse(q, ""), FieldError);
  CHECK_THROWS_AS(Scalar::parse(q, "x"), FieldError);
  CHECK_THROWS_AS(Scalar::parse(q, "1/"), FieldError);

  const FieldSpec f5 = FieldSpec::prime(5);
  CHECK(Scalar::parse(f5, "12").str() == "2");
  CHECK(Scalar::parse(f5, "-1").str() == "4");
  CHECK(Scalar::parse(f5, "4") == Scalar::of_int(f5, -1));
}

TEST_CASE("prime field arithmetic") {
  const FieldSpec f5 = FieldSpec::prime(5);
  CHECK(Scalar::of_int(f5, 7).str() == "2");
  CHECK(Scalar::of_int(f5, -1).str() == "4");
  CHECK((Scalar::of_int(f5, 3) + Scalar::of_int(f5, 4)).str() == "2");
  CHECK((Scalar::of_int(f5, 3) * Scalar::of_int(f5, 4)).str() == "2");
  CHECK(Scalar::of_rational(f5, 1, 2).str() == "3");  // 2 * 3 = 6 = 1 mod 5
  CHECK_THROWS_AS(Scalar::of_rational(f5, 1, 10), std::domain_error);

  for (const std::int64_t p : {3, 5, 7, 11}) {
    const FieldSpec f = FieldSpec::prime(p);
    for (std::int64_t v = 1; v < p; ++v) {
      const Scalar s = Scalar::of_int(f, v);
      CHECK(s * s.inverse() == Scalar::one(f));
      CHECK(s / s == Scalar::one(f));
    }
    CHECK_THROWS_AS(Scalar::zero(f).inverse(), std::domain_error);
  }
}

TEST_CASE("scalars from different fields do not mix") {
  const Scalar a = Scalar::one(FieldSpec::rationals());
  const Scalar b = Scalar::one(FieldSpec::prime(3));
  const Scalar c = Scalar::one(FieldSpec::prime(5));
  CHECK_THROWS_AS(a + b, MismatchError);
  CHECK_THROWS_AS(b * c, MismatchError);
  CHECK_THROWS_AS(a - c, MismatchError);
  CHECK(a != b);
}

TEST_CASE("field axioms hold on random scalars") {
  for (const std::int64_t ch : {std::int64_t{0}, std::int64_t{3}, std::int64_t{5},
                                std::int64_t{7}}) {
    const FieldSpec f = FieldSpec::of_characteristic(ch);
    testing::Rng rng(20251101u + static_cast<unsigned>(ch));
    for (int t = 0; t < 200; ++t) {
      const Scalar x = testing::random_scalar(f, rng);
      const Scalar y = testing::random_scalar(f, rng);
      const Scalar z = testing::random_scalar(f, rng);
      CHECK(x + y == y + x);
      CHECK(x * y == y * x);
      CHECK((x + y) + z == x + (y + z));
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x + Scalar::zero(f) == x);
      CHECK(x * Scalar::one(f) == x);
      CHECK(x - x == Scalar::zero(f));
      if (!x.is_zero()) {
        CHECK(x * x.inverse() == Scalar::one(f));
        CHECK(Scalar::parse(f, x.str()) == x);
      }
    }
  }
}
