#ifndef HALLFIX_FACTORED_RATIONAL_HPP
#define HALLFIX_FACTORED_RATIONAL_HPP

#include <cstdint>
#include <map>
#include <string>

namespace hallfix {

/// A positive rational stored as its prime exponent vector. The value 1 is
/// the empty map; zero exponents are never stored.
class FactoredRational {
public:
  using Exponent = std::int64_t;

  FactoredRational() = default;

  static FactoredRational one() { return {}; }
  static FactoredRational of(std::uint64_t value) { return one().mul_pow(value, 1); }

  /// *this * value^exponent. Throws InvalidArgument for value 0 and on
  /// exponent overflow.
  FactoredRational mul_pow(std::uint64_t value, Exponent exponent) const;

  FactoredRational operator*(FactoredRational const &rhs) const;
  FactoredRational inverse() const;
  FactoredRational pow(Exponent k) const;

  bool is_one() const noexcept { return _factors.empty(); }
  bool is_integer() const noexcept;

  /// Exponent of p (0 if absent).
  Exponent exponent(std::uint64_t p) const;
  std::map<std::uint64_t, Exponent> const &factors() const noexcept { return _factors; }

  /// -1 if every stored exponent is negative, +1 if every one is positive,
  /// 0 for the value 1 or a mixed signature.
  int sign_signature() const noexcept;

  /// "1" or "{2:4, 3:-2}".
  std::string to_string() const;

  friend bool operator==(FactoredRational const &, FactoredRational const &) = default;

private:
  void add_exponent(std::uint64_t p, Exponent e);

  std::map<std::uint64_t, Exponent> _factors;
};

inline FactoredRational fr_mul_pow(FactoredRational const &acc, std::uint64_t value,
                                   FactoredRational::Exponent exponent)
{
  return acc.mul_pow(value, exponent);
}

inline bool fr_is_one(FactoredRational const &x) noexcept { return x.is_one(); }

} // namespace hallfix

#endif // HALLFIX_FACTORED_RATIONAL_HPP
