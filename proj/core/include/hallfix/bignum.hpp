#ifndef HALLFIX_BIGNUM_HPP
#define HALLFIX_BIGNUM_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace hallfix {

class FactoredRational;

/// Arbitrary precision integer.
using BigInt = mpz_class;

/// Arbitrary precision rational, always in lowest terms with positive
/// denominator.
using BigRational = mpq_class;

BigInt big_pow(BigInt const &base, std::uint64_t exponent);
BigRational big_pow(BigRational const &base, std::uint64_t exponent);

/// Builds num/den in lowest terms. Throws InvalidArgument if den is 0.
BigRational make_rational(BigInt num, BigInt den);

bool is_integer(BigRational const &q);

/// The value of a factored rational.
BigRational to_rational(FactoredRational const &f);

/// Decimal rendering: "33", "-7", "5/16".
std::string to_decimal(BigInt const &x);
std::string to_decimal(BigRational const &q);

} // namespace hallfix

#endif // HALLFIX_BIGNUM_HPP
