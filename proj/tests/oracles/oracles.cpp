#include "oracles/oracles.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

Permutation compose(Permutation const &a, Permutation const &b)
{
  std::vector<hallfix::Point> img(b.degree());
  for (hallfix::Point x = 1; x <= b.degree(); ++x)
    img[x - 1] = a.images()[b.images()[x - 1] - 1];
  return Permutation(img);
}

namespace {

Permutation invert(Permutation const &a)
{
  std::vector<hallfix::Point> img(a.degree());
  for (hallfix::Point x = 1; x <= a.degree(); ++x)
    img[a.images()[x - 1] - 1] = x;
  return Permutation(img);
}

ElementSet sorted(std::set<Permutation> const &s) { return {s.begin(), s.end()}; }

} // namespace

bool contains(ElementSet const &s, Permutation const &x)
{
  return std::binary_search(s.begin(), s.end(), x);
}

ElementSet naive_closure(std::vector<Permutation> const &gens, unsigned degree)
{
  std::set<Permutation> s{Permutation::identity(degree)};
  s.insert(gens.begin(), gens.end());
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Permutation> cur(s.begin(), s.end());
    for (auto const &a : cur)
      for (auto const &b : cur)
        grew |= s.insert(compose(a, b)).second;
  }
  return sorted(s);
}

std::set<ElementSet> subgroups_by_subsets(ElementSet const &g, unsigned max_gens)
{
  auto deg = g.front().degree();
  auto generated = [&](std::vector<Permutation> const &gens) {
    std::set<Permutation> acc{Permutation::identity(deg)};
    std::vector<Permutation> queue{Permutation::identity(deg)};
    while (!queue.empty()) {
      auto a = queue.back();
      queue.pop_back();
      for (auto const &b : gens) {
        auto ab = compose(a, b);
        if (acc.insert(ab).second)
          queue.push_back(ab);
      }
    }
    return sorted(acc);
  };

  // subgroup -> one generating list of minimal length found
  std::map<ElementSet, std::vector<Permutation>> all{{ElementSet{Permutation::identity(deg)}, {}}};
  std::vector<ElementSet> layer{all.begin()->first};
  for (unsigned k = 0; k < max_gens && !layer.empty(); ++k) {
    std::vector<ElementSet> next;
    for (auto const &s : layer) {
      auto const gens = all.at(s);
      for (auto const &c : g) {
        if (contains(s, c))
          continue;
        auto more = gens;
        more.push_back(c);
        auto sub = generated(more);
        if (all.emplace(sub, more).second)
          next.push_back(std::move(sub));
      }
    }
    layer = std::move(next);
  }
  std::set<ElementSet> res;
  for (auto const &[s, gens] : all)
    res.insert(s);
  return res;
}

std::vector<ElementSet> subgroups_of_order(ElementSet const &g, std::uint64_t m)
{
  std::vector<ElementSet> res;
  for (auto const &s : subgroups_by_subsets(g))
    if (s.size() == m)
      res.push_back(s);
  return res;
}

std::vector<ElementSet> conjugacy_classes(ElementSet const &g)
{
  std::set<Permutation> seen;
  std::vector<ElementSet> res;
  for (auto const &x : g) {
    if (seen.count(x))
      continue;
    std::set<Permutation> cls;
    for (auto const &y : g)
      cls.insert(compose(compose(y, x), invert(y)));
    seen.insert(cls.begin(), cls.end());
    res.push_back(sorted(cls));
  }
  return res;
}

std::set<ElementSet> normal_subgroups_by_class_union(ElementSet const &g)
{
  auto classes = conjugacy_classes(g);
  // classes[0] holds the identity since g is sorted and the identity is least
  std::set<ElementSet> res;
  auto nc = classes.size() - 1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nc); ++mask) {
    std::set<Permutation> u(classes[0].begin(), classes[0].end());
    for (std::size_t i = 0; i < nc; ++i)
      if (mask >> i & 1u)
        u.insert(classes[i + 1].begin(), classes[i + 1].end());
    if (g.size() % u.size())
      continue;
    bool closed = true;
    for (auto const &a : u) {
      for (auto const &b : u)
        if (!u.count(compose(a, b))) {
          closed = false;
          break;
        }
      if (!closed)
        break;
    }
    if (closed)
      res.insert(sorted(u));
  }
  return res;
}

bool is_normal(ElementSet const &g, ElementSet const &h)
{
  for (auto const &y : g)
    for (auto const &x : h)
      if (!contains(h, compose(compose(y, x), invert(y))))
        return false;
  return true;
}

ElementSet centralizer_by_commuting(ElementSet const &n, Permutation const &x)
{
  ElementSet res;
  for (auto const &y : n)
    if (compose(x, y) == compose(y, x))
      res.push_back(y);
  return res;
}

ElementSet centralizer_by_commuting(ElementSet const &n, ElementSet const &s)
{
  ElementSet res;
  for (auto const &y : n)
    if (std::all_of(s.begin(), s.end(), [&](auto const &x) { return compose(x, y) == compose(y, x); }))
      res.push_back(y);
  return res;
}

std::uint64_t order_by_powers(Permutation const &x)
{
  auto id = Permutation::identity(x.degree());
  auto p = x;
  std::uint64_t k = 1;
  while (p != id) {
    p = compose(p, x);
    ++k;
  }
  return k;
}

std::uint64_t lambda_by_membership(std::vector<ElementSet> const &halls, Permutation const &x)
{
  return static_cast<std::uint64_t>(
    std::count_if(halls.begin(), halls.end(), [&](auto const &h) { return contains(h, x); }));
}

std::uint64_t totient_by_gcd(std::uint64_t n)
{
  std::uint64_t c = 0;
  for (std::uint64_t k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1)
      ++c;
  return c;
}

int moebius_naive(std::uint64_t n)
{
  int primes = 0;
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (n % p)
      continue;
    n /= p;
    if (n % p == 0)
      return 0;
    ++primes;
  }
  return primes % 2 ? -1 : 1;
}

std::uint64_t irreducible_cubics_f2()
{
  // Polynomials as bit masks, bit i = coefficient of x^i.
  auto mul = [](unsigned a, unsigned b) {
    unsigned r = 0;
    for (unsigned i = 0; i < 8; ++i)
      if (b >> i & 1u)
        r ^= a << i;
    return r;
  };
  std::set<unsigned> reducible;
  for (unsigned a = 2; a < 4; ++a)       // monic degree 1: x, x+1
    for (unsigned b = 4; b < 8; ++b)     // monic degree 2
      reducible.insert(mul(a, b));
  std::uint64_t count = 0;
  for (unsigned c = 8; c < 16; ++c)      // monic degree 3
    if (!reducible.count(c))
      ++count;
  return count;
}

std::vector<std::vector<std::uint32_t>> conjugation_table(ElementSet const &g,
                                                          std::vector<ElementSet> const &subs)
{
  std::vector<std::vector<std::uint32_t>> t(g.size(), std::vector<std::uint32_t>(subs.size()));
  for (std::size_t i = 0; i < g.size(); ++i) {
    auto gi = invert(g[i]);
    for (std::size_t j = 0; j < subs.size(); ++j) {
      std::set<Permutation> c;
      for (auto const &x : subs[j])
        c.insert(compose(compose(g[i], x), gi));
      auto cs = sorted(c);
      t[i][j] = static_cast<std::uint32_t>(std::find(subs.begin(), subs.end(), cs) - subs.begin());
    }
  }
  return t;
}

std::vector<unsigned> cycle_lengths(Permutation const &x)
{
  std::vector<bool> seen(x.degree() + 1);
  std::vector<unsigned> res;
  for (hallfix::Point p = 1; p <= x.degree(); ++p) {
    unsigned len = 0;
    for (auto q = p; !seen[q]; q = x.images()[q - 1]) {
      seen[q] = true;
      ++len;
    }
    if (len)
      res.push_back(len);
  }
  std::sort(res.begin(), res.end());
  return res;
}

} // namespace oracle
