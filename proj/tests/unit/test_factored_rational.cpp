#include "doctest.h"

#include <random>

#include "hallfix/bignum.hpp"
#include "hallfix/errors.hpp"
#include "hallfix/factored_rational.hpp"

using namespace hallfix;

TEST_CASE("factored arithmetic")
{
  auto a = FactoredRational::of(12);
  CHECK(a.to_string() == "{2:2, 3:1}");
  CHECK(a.exponent(2) == 2);
  CHECK(a.exponent(5) == 0);
  CHECK(FactoredRational::of(1).is_one());
  CHECK(FactoredRational::of(1).to_string() == "1");
  CHECK((a * a.inverse()).is_one());
  CHECK(a.pow(3) == FactoredRational::of(1728));
  CHECK(a.pow(-1) == a.inverse());
  CHECK(a.pow(0).is_one());
  CHECK(a.mul_pow(6, -2).to_string() == "{3:-1}");
  CHECK(a.is_integer());
  CHECK_FALSE(a.inverse().is_integer());
  CHECK_THROWS_AS(a.mul_pow(0, 1), InvalidArgument);
  CHECK_THROWS_AS(a.mul_pow(0, 0), InvalidArgument);
}

TEST_CASE("sign signature")
{
  CHECK(FactoredRational::of(25).sign_signature() == 1);
  CHECK(FactoredRational::of(25).inverse().sign_signature() == -1);
  CHECK(FactoredRational::of(1).sign_signature() == 0);
  CHECK(FactoredRational::of(5).mul_pow(3, -1).sign_signature() == 0);
}

TEST_CASE("factored values agree with big rationals")
{
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    FactoredRational f;
    BigRational q = 1;
    for (int k = 0; k < 6; ++k) {
      std::uint64_t v = 1 + rng() % 500;
      std::int64_t e = static_cast<std::int64_t>(rng() % 9) - 4;
      f = f.mul_pow(v, e);
      q *= e >= 0 ? BigRational(big_pow(BigInt(static_cast<unsigned long>(v)), static_cast<std::uint64_t>(e)))
                  : BigRational(1) / big_pow(BigInt(static_cast<unsigned long>(v)), static_cast<std::uint64_t>(-e));
    }
    CHECK(to_rational(f) == q);
    CHECK(f.is_one() == (q == 1));
    CHECK(f.is_integer() == is_integer(q));
  }
}

TEST_CASE("exponent overflow is detected")
{
  auto big = FactoredRational::of(2).pow(std::numeric_limits<std::int64_t>::max());
  CHECK_THROWS_AS(big * FactoredRational::of(2), Error);
}
