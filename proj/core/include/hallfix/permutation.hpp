#ifndef HALLFIX_PERMUTATION_HPP
#define HALLFIX_PERMUTATION_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace hallfix {

using Point = std::uint32_t;

/// A bijection of {1..degree}. Points are 1-based everywhere.
///
/// Products compose right to left: (g * h)(x) = g(h(x)), so that
/// g acting after h is the action of g * h.
class Permutation {
public:
  /// Identity on `degree` points.
  explicit Permutation(unsigned degree = 1);

  /// `images[i]` is the image of point i + 1. Throws InvalidArgument if
  /// the images are not a bijection of {1..images.size()}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(unsigned degree) { return Permutation(degree); }

  unsigned degree() const noexcept { return static_cast<unsigned>(_images.size()); }
  std::vector<Point> const &images() const noexcept { return _images; }

  Point operator[](Point x) const { return _images[x - 1u]; }

  bool is_identity() const noexcept;

  Permutation operator*(Permutation const &rhs) const;
  Permutation inverse() const;
  Permutation pow(std::int64_t k) const;

  /// Disjoint cycles of length >= 2, each starting at its least point,
  /// ordered by least point.
  std::vector<std::vector<Point>> cycles() const;

  /// c[i] = number of cycles of length i (fixed points included), i in 1..degree.
  std::vector<unsigned> cycle_type() const;

  /// Canonical cycle notation, "()" for the identity.
  std::string to_string() const;

  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend auto operator<=>(Permutation const &, Permutation const &) = default;

private:
  std::vector<Point> _images;
};

/// Parses whitespace-insensitive disjoint cycle notation over 1..degree.
/// Throws ParseError on repeated points, out-of-range points, unbalanced
/// parentheses or stray tokens.
Permutation parse_permutation(std::string_view text, unsigned degree);

/// Least k >= 1 with g^k = 1.
std::uint64_t element_order(Permutation const &g);

} // namespace hallfix

template<>
struct std::hash<hallfix::Permutation> {
  std::size_t operator()(hallfix::Permutation const &p) const noexcept
  {
    std::size_t h = 1469598103934665603ull;
    for (auto x : p.images()) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

#endif // HALLFIX_PERMUTATION_HPP
