#include "hallfix/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "hallfix/errors.hpp"

namespace hallfix {

Permutation::Permutation(unsigned degree)
: _images(degree)
{
  if (degree == 0u)
    throw InvalidArgument("permutation degree must be positive");
  std::iota(_images.begin(), _images.end(), Point{1});
}

Permutation::Permutation(std::vector<Point> images)
: _images(std::move(images))
{
  if (_images.empty())
    throw InvalidArgument("permutation degree must be positive");

  std::vector<bool> hit(_images.size(), false);
  for (auto x : _images) {
    if (x < 1u || x > _images.size() || hit[x - 1u])
      throw InvalidArgument("images do not form a bijection");
    hit[x - 1u] = true;
  }
}

bool Permutation::is_identity() const noexcept
{
  for (std::size_t i = 0; i < _images.size(); ++i) {
    if (_images[i] != i + 1u)
      return false;
  }
  return true;
}

Permutation Permutation::operator*(Permutation const &rhs) const
{
  if (degree() != rhs.degree())
    throw InvalidArgument("cannot multiply permutations of different degree");

  Permutation res(degree());
  for (std::size_t i = 0; i < _images.size(); ++i)
    res._images[i] = _images[rhs._images[i] - 1u];
  return res;
}

Permutation Permutation::inverse() const
{
  Permutation res(degree());
  for (std::size_t i = 0; i < _images.size(); ++i)
    res._images[_images[i] - 1u] = static_cast<Point>(i + 1u);
  return res;
}

Permutation Permutation::pow(std::int64_t k) const
{
  Permutation base = k < 0 ? inverse() : *this;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1u
                          : static_cast<std::uint64_t>(k);

  Permutation res(degree());
  while (e) {
    if (e & 1u)
      res = res * base;
    base = base * base;
    e >>= 1u;
  }
  return res;
}

std::vector<std::vector<Point>> Permutation::cycles() const
{
  std::vector<std::vector<Point>> res;
  std::vector<bool> seen(_images.size(), false);

  for (Point x = 1; x <= degree(); ++x) {
    if (seen[x - 1u] || (*this)[x] == x)
      continue;

    std::vector<Point> cycle;
    for (Point y = x; !seen[y - 1u]; y = (*this)[y]) {
      seen[y - 1u] = true;
      cycle.push_back(y);
    }
    res.push_back(std::move(cycle));
  }
  return res;
}

std::vector<unsigned> Permutation::cycle_type() const
{
  std::vector<unsigned> counts(degree() + 1u, 0u);
  std::vector<bool> seen(_images.size(), false);

  for (Point x = 1; x <= degree(); ++x) {
    if (seen[x - 1u])
      continue;
    unsigned len = 0;
    for (Point y = x; !seen[y - 1u]; y = (*this)[y]) {
      seen[y - 1u] = true;
      ++len;
    }
    ++counts[len];
  }
  return counts;
}

std::string Permutation::to_string() const
{
  auto cs = cycles();
  if (cs.empty())
    return "()";

  std::string res;
  for (auto const &c : cs) {
    res += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i)
        res += ' ';
      res += std::to_string(c[i]);
    }
    res += ')';
  }
  return res;
}

Permutation parse_permutation(std::string_view text, unsigned degree)
{
  if (degree == 0u)
    throw InvalidArgument("permutation degree must be positive");

  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{1});
  std::vector<bool> used(degree, false);

  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };

  std::size_t pos = 0;
  bool any_cycle = false;

  while (true) {
    while (pos < text.size() && is_space(text[pos]))
      ++pos;
    if (pos == text.size())
      break;

    if (text[pos] == ')')
      throw ParseError(ParseErrorKind::MalformedParentheses,
                       "unmatched ')' at offset " + std::to_string(pos));
    if (text[pos] != '(') {
      auto kind = std::isdigit(static_cast<unsigned char>(text[pos]))
                    ? ParseErrorKind::MalformedParentheses
                    : ParseErrorKind::InvalidToken;
      throw ParseError(kind, "expected '(' at offset " + std::to_string(pos));
    }
    ++pos;
    any_cycle = true;

    std::vector<Point> cycle;
    bool closed = false;
    while (pos < text.size()) {
      char c = text[pos];
      if (is_space(c) || c == ',') {
        ++pos;
      } else if (c == ')') {
        ++pos;
        closed = true;
        break;
      } else if (c == '(') {
        throw ParseError(ParseErrorKind::MalformedParentheses,
                         "nested '(' at offset " + std::to_string(pos));
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::uint64_t value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          value = value * 10u + static_cast<unsigned>(text[pos] - '0');
          if (value > degree) {
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
              ++pos;
            break;
          }
          ++pos;
        }
        if (value < 1u || value > degree)
          throw ParseError(ParseErrorKind::PointOutOfRange,
                           "point " + std::to_string(value) + " outside 1.." + std::to_string(degree));
        auto p = static_cast<Point>(value);
        if (used[p - 1u])
          throw ParseError(ParseErrorKind::RepeatedPoint,
                           "point " + std::to_string(p) + " repeated");
        used[p - 1u] = true;
        cycle.push_back(p);
      } else {
        throw ParseError(ParseErrorKind::InvalidToken,
                         std::string("unexpected character '") + c + "' at offset " + std::to_string(pos));
      }
    }
    if (!closed)
      throw ParseError(ParseErrorKind::MalformedParentheses, "unterminated cycle");

    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i] - 1u] = cycle[(i + 1u) % cycle.size()];
  }

  if (!any_cycle)
    throw ParseError(ParseErrorKind::MalformedParentheses, "no cycles; use \"()\" for the identity");

  return Permutation(std::move(images));
}

std::uint64_t element_order(Permutation const &g)
{
  std::uint64_t res = 1;
  for (auto const &c : g.cycles())
    res = std::lcm(res, static_cast<std::uint64_t>(c.size()));
  return res;
}

} // namespace hallfix
