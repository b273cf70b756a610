#include "hallfix/factored_rational.hpp"

#include "hallfix/errors.hpp"
#include "hallfix/number_theory.hpp"

namespace hallfix {

namespace {

FactoredRational::Exponent checked_mul(FactoredRational::Exponent a, FactoredRational::Exponent b)
{
  FactoredRational::Exponent r;
  if (__builtin_mul_overflow(a, b, &r))
    throw InvalidArgument("factored exponent overflow");
  return r;
}

} // namespace

void FactoredRational::add_exponent(std::uint64_t p, Exponent e)
{
  if (e == 0)
    return;
  auto [it, inserted] = _factors.try_emplace(p, 0);
  if (__builtin_add_overflow(it->second, e, &it->second))
    throw InvalidArgument("factored exponent overflow");
  if (it->second == 0)
    _factors.erase(it);
}

FactoredRational FactoredRational::mul_pow(std::uint64_t value, Exponent exponent) const
{
  if (value == 0u)
    throw InvalidArgument("factored rationals cannot hold 0");

  FactoredRational res = *this;
  if (exponent == 0 || value == 1u)
    return res;
  for (auto [p, k] : factorize(value))
    res.add_exponent(p, checked_mul(static_cast<Exponent>(k), exponent));
  return res;
}

FactoredRational FactoredRational::operator*(FactoredRational const &rhs) const
{
  FactoredRational res = *this;
  for (auto [p, e] : rhs._factors)
    res.add_exponent(p, e);
  return res;
}

FactoredRational FactoredRational::inverse() const
{
  return pow(-1);
}

FactoredRational FactoredRational::pow(Exponent k) const
{
  FactoredRational res;
  if (k == 0)
    return res;
  for (auto [p, e] : _factors)
    res._factors.emplace(p, checked_mul(e, k));
  return res;
}

bool FactoredRational::is_integer() const noexcept
{
  for (auto [p, e] : _factors) {
    if (e < 0)
      return false;
  }
  return true;
}

FactoredRational::Exponent FactoredRational::exponent(std::uint64_t p) const
{
  auto it = _factors.find(p);
  return it == _factors.end() ? 0 : it->second;
}

int FactoredRational::sign_signature() const noexcept
{
  bool pos = false, neg = false;
  for (auto [p, e] : _factors)
    (e > 0 ? pos : neg) = true;
  if (pos == neg)
    return 0;
  return pos ? 1 : -1;
}

std::string FactoredRational::to_string() const
{
  if (_factors.empty())
    return "1";

  std::string res = "{";
  bool first = true;
  for (auto [p, e] : _factors) {
    if (!first)
      res += ", ";
    first = false;
    res += std::to_string(p) + ":" + std::to_string(e);
  }
  return res + "}";
}

} // namespace hallfix
