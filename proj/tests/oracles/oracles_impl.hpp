#ifndef HALLFIX_TESTS_ORACLES_IMPL_HPP
#define HALLFIX_TESTS_ORACLES_IMPL_HPP

#include <numeric>

namespace oracle {

template <class Act>
std::uint64_t tuple_orbits_explicit(ElementSet const &h, std::uint32_t np, unsigned k, Act act)
{
  std::uint64_t total = 1;
  for (unsigned i = 0; i < k; ++i)
    total *= np;
  std::vector<std::uint64_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint64_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::uint32_t> digits(k);
  for (std::uint64_t code = 0; code < total; ++code) {
    auto c = code;
    for (unsigned i = 0; i < k; ++i) {
      digits[i] = static_cast<std::uint32_t>(c % np);
      c /= np;
    }
    for (auto const &g : h) {
      std::uint64_t img = 0;
      for (unsigned i = k; i-- > 0;)
        img = img * np + act(g, digits[i]);
      auto a = find(code), b = find(img);
      if (a != b)
        parent[a] = b;
    }
  }
  std::uint64_t orbits = 0;
  for (std::uint64_t x = 0; x < total; ++x)
    if (find(x) == x)
      ++orbits;
  return orbits;
}

} // namespace oracle

#endif
