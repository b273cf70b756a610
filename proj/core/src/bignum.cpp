#include "hallfix/bignum.hpp"

#include <limits>

#include "hallfix/errors.hpp"
#include "hallfix/factored_rational.hpp"

namespace hallfix {

BigInt big_pow(BigInt const &base, std::uint64_t exponent)
{
  if (exponent > std::numeric_limits<unsigned long>::max())
    throw InvalidArgument("exponent too large");
  BigInt res;
  mpz_pow_ui(res.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exponent));
  return res;
}

BigRational big_pow(BigRational const &base, std::uint64_t exponent)
{
  BigRational res(big_pow(BigInt(base.get_num()), exponent),
                  big_pow(BigInt(base.get_den()), exponent));
  res.canonicalize();
  return res;
}

BigRational to_rational(FactoredRational const &f)
{
  BigInt num = 1, den = 1;
  for (auto const &[p, e] : f.factors()) {
    auto &side = e > 0 ? num : den;
    auto mag = e > 0 ? static_cast<std::uint64_t>(e) : static_cast<std::uint64_t>(-(e + 1)) + 1;
    side *= big_pow(BigInt(static_cast<unsigned long>(p)), mag);
  }
  return make_rational(num, den);
}

BigRational make_rational(BigInt num, BigInt den)
{
  if (den == 0)
    throw InvalidArgument("zero denominator");
  BigRational res(num, den);
  res.canonicalize();
  return res;
}

bool is_integer(BigRational const &q)
{
  return q.get_den() == 1;
}

std::string to_decimal(BigInt const &x)
{
  return x.get_str(10);
}

std::string to_decimal(BigRational const &q)
{
  return q.get_str(10);
}

} // namespace hallfix
