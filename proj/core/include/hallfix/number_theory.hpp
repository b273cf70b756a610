#ifndef HALLFIX_NUMBER_THEORY_HPP
#define HALLFIX_NUMBER_THEORY_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace hallfix {

bool is_prime(std::uint64_t n);

/// Trial division; (prime, multiplicity) pairs in ascending prime order.
/// Factoring 1 yields an empty list. Throws InvalidArgument for 0.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// Number-theoretic Moebius function.
int moebius(std::uint64_t d);

std::uint64_t totient(std::uint64_t n);

/// All divisors of n, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Product of the distinct primes dividing n.
std::uint64_t radical(std::uint64_t n);

std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// A finite set of primes.
class PiSet {
public:
  PiSet() = default;

  /// Throws InvalidArgument if a member is not prime. Duplicates collapse.
  explicit PiSet(std::vector<std::uint64_t> primes);
  PiSet(std::initializer_list<std::uint64_t> primes)
  : PiSet(std::vector<std::uint64_t>(primes))
  {}

  /// Parses "2,3,7". Throws InvalidArgument on malformed lists.
  static PiSet parse(std::string const &text);

  /// The primes dividing n that are not in this set.
  PiSet complement_in(std::uint64_t n) const;

  bool contains(std::uint64_t p) const;
  bool empty() const noexcept { return _primes.empty(); }

  /// True iff every prime divisor of n lies in the set.
  bool covers(std::uint64_t n) const;

  std::vector<std::uint64_t> const &primes() const noexcept { return _primes; }

  /// "{2,3}"
  std::string to_string() const;

  friend bool operator==(PiSet const &, PiSet const &) = default;
  friend auto operator<=>(PiSet const &, PiSet const &) = default;

private:
  std::vector<std::uint64_t> _primes;
};

} // namespace hallfix

#endif // HALLFIX_NUMBER_THEORY_HPP
