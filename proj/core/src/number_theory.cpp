#include "hallfix/number_theory.hpp"

#include <algorithm>
#include <sstream>

#include "hallfix/errors.hpp"

namespace hallfix {

bool is_prime(std::uint64_t n)
{
  if (n < 2u)
    return false;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0u)
      return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n)
{
  if (n == 0u)
    throw InvalidArgument("cannot factor 0");

  std::vector<std::pair<std::uint64_t, unsigned>> res;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p)
      continue;
    unsigned k = 0;
    while (n % p == 0u) {
      n /= p;
      ++k;
    }
    res.emplace_back(p, k);
  }
  if (n > 1u)
    res.emplace_back(n, 1u);
  return res;
}

int moebius(std::uint64_t d)
{
  if (d == 0u)
    throw InvalidArgument("moebius undefined at 0");

  int res = 1;
  for (auto [p, k] : factorize(d)) {
    if (k > 1u)
      return 0;
    res = -res;
  }
  return res;
}

std::uint64_t totient(std::uint64_t n)
{
  if (n == 0u)
    throw InvalidArgument("totient undefined at 0");

  std::uint64_t res = n;
  for (auto [p, k] : factorize(n))
    res = res / p * (p - 1u);
  return res;
}

std::vector<std::uint64_t> divisors(std::uint64_t n)
{
  if (n == 0u)
    throw InvalidArgument("divisors undefined at 0");

  std::vector<std::uint64_t> res{1};
  for (auto [p, k] : factorize(n)) {
    auto const prev = res.size();
    std::uint64_t pk = 1;
    for (unsigned i = 0; i < k; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < prev; ++j)
        res.push_back(res[j] * pk);
    }
  }
  std::sort(res.begin(), res.end());
  return res;
}

std::uint64_t radical(std::uint64_t n)
{
  std::uint64_t res = 1;
  for (auto [p, k] : factorize(n))
    res *= p;
  return res;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n)
{
  std::vector<std::uint64_t> res;
  for (auto [p, k] : factorize(n))
    res.push_back(p);
  return res;
}

PiSet::PiSet(std::vector<std::uint64_t> primes)
: _primes(std::move(primes))
{
  for (auto p : _primes) {
    if (!is_prime(p))
      throw InvalidArgument(std::to_string(p) + " is not prime");
  }
  std::sort(_primes.begin(), _primes.end());
  _primes.erase(std::unique(_primes.begin(), _primes.end()), _primes.end());
}

PiSet PiSet::parse(std::string const &text)
{
  std::vector<std::uint64_t> primes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t{}");
    auto e = item.find_last_not_of(" \t{}");
    if (b == std::string::npos)
      throw InvalidArgument("empty entry in prime list '" + text + "'");
    item = item.substr(b, e - b + 1u);
    if (item.find_first_not_of("0123456789") != std::string::npos)
      throw InvalidArgument("invalid prime '" + item + "'");
    primes.push_back(std::stoull(item));
  }
  if (primes.empty())
    throw InvalidArgument("empty prime list");
  return PiSet(std::move(primes));
}

PiSet PiSet::complement_in(std::uint64_t n) const
{
  std::vector<std::uint64_t> res;
  for (auto p : prime_divisors(n)) {
    if (!contains(p))
      res.push_back(p);
  }
  return PiSet(std::move(res));
}

bool PiSet::contains(std::uint64_t p) const
{
  return std::binary_search(_primes.begin(), _primes.end(), p);
}

bool PiSet::covers(std::uint64_t n) const
{
  for (auto p : prime_divisors(n)) {
    if (!contains(p))
      return false;
  }
  return true;
}

std::string PiSet::to_string() const
{
  std::string res = "{";
  for (std::size_t i = 0; i < _primes.size(); ++i) {
    if (i)
      res += ',';
    res += std::to_string(_primes[i]);
  }
  return res + "}";
}

} // namespace hallfix
