#include "doctest.h"

#include <map>
#include <random>

#include "hallfix/cyclic_lattice.hpp"
#include "hallfix/errors.hpp"
#include "hallfix/hall.hpp"
#include "hallfix/number_theory.hpp"
#include "helpers.hpp"

using namespace hallfix;
using testing::builtin;

namespace {

std::vector<PermGroup> lattice_hosts()
{
  std::vector<PermGroup> hs;
  for (auto const &e : builtin_corpus()) {
    if (e.order > 168)
      continue;
    auto g = e.group();
    hs.push_back(g);
    for (auto const &pi : e.scan_pis()) {
      try {
        hs.push_back(build_hall_context(g, pi).canonical_hall());
      } catch (NoHallSubgroup const &) {
      }
    }
  }
  return hs;
}

} // namespace

TEST_CASE("cyclic subgroups are exactly the <x>")
{
  auto h = builtin("S4");
  auto lat = cyclic_lattice(h);
  std::set<oracle::ElementSet> want;
  for (auto const &x : h.elements())
    want.insert(oracle::naive_closure({x}, h.degree()));
  std::set<oracle::ElementSet> got;
  for (auto const &z : lat.subgroups())
    got.insert(z.elements());
  CHECK(got == want);
  CHECK(lat.subgroup(0).order() == 1u);
  for (auto const &x : h.elements())
    CHECK(lat.subgroup(lat.index_of_cyclic(x)).elements() == oracle::naive_closure({x}, h.degree()));
}

TEST_CASE("poset Moebius on cyclic lattices is the number theoretic one")
{
  for (auto const &h : lattice_hosts()) {
    auto lat = cyclic_lattice(h);
    for (std::size_t z = 0; z < lat.size(); ++z)
      for (std::size_t w = 0; w < lat.size(); ++w) {
        auto const &Z = lat.subgroup(z);
        auto const &W = lat.subgroup(w);
        bool leq = Z.is_subgroup_of(W);
        CHECK(lat.contained(z, w) == leq);
        CHECK(lat.mu2(z, w) == (leq ? moebius(W.order() / Z.order()) : 0));
      }
  }
}

TEST_CASE("|H| = sum |Z| f(Z) on every lattice")
{
  for (auto const &h : lattice_hosts()) {
    auto lat = cyclic_lattice(h);
    std::int64_t s = 0;
    for (std::size_t z = 0; z < lat.size(); ++z)
      s += static_cast<std::int64_t>(lat.subgroup(z).order()) * lat.f(z);
    CHECK(s == static_cast<std::int64_t>(h.order()));
  }
}

TEST_CASE("V4 lattice values")
{
  auto v4 = subgroups_of_order(builtin("A4"), 4).front();
  auto lat = cyclic_lattice(v4);
  REQUIRE(lat.size() == 4u);
  CHECK(lat.f(0) == -2);
  for (std::size_t z = 1; z < 4; ++z)
    CHECK(lat.f(z) == 1);
}

TEST_CASE("Moebius partition identity with random weights")
{
  auto s4 = builtin("S4");
  std::vector<PermGroup> subs;
  for (auto m : divisors(s4.order()))
    for (auto const &h : subgroups_of_order(s4, m))
      subs.push_back(h);
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    auto const &h = subs[rng() % subs.size()];
    std::map<Permutation, std::uint64_t> table;
    for (auto const &x : h.elements())
      table[x] = 1 + rng() % 9;
    ElementWeight gamma = [&table](Permutation const &x) { return table.at(x); };
    auto lat = cyclic_lattice(h);
    auto [lhs, rhs] = moebius_partition_sides(lat, gamma);
    FactoredRational direct;
    for (auto const &[x, v] : table)
      direct = direct.mul_pow(v, 1);
    CHECK(lhs == direct);
    CHECK(lhs == rhs);
    CHECK(moebius_partition_check(h, gamma));
  }
}

TEST_CASE("Moebius partition named instances")
{
  auto v4 = subgroups_of_order(builtin("A4"), 4).front();
  CHECK(moebius_partition_check(v4, [](Permutation const &) { return std::uint64_t{1}; }));
  CHECK(moebius_partition_check(v4, [](Permutation const &x) { return element_order(x); }));
}
