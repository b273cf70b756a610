#include "hallfix/cyclic_lattice.hpp"

#include <algorithm>
#include <map>

#include "hallfix/errors.hpp"
#include "hallfix/number_theory.hpp"

namespace hallfix {

namespace {

std::vector<Permutation> powers_of(Permutation const &x)
{
  std::vector<Permutation> res{Permutation::identity(x.degree())};
  for (auto y = x; !y.is_identity(); y = y * x)
    res.push_back(y);
  return res;
}

} // namespace

CyclicLattice::CyclicLattice(PermGroup host)
: _host(std::move(host)), _cyclic_of(_host.order())
{
  std::map<std::vector<Permutation>, std::vector<std::size_t>> by_set;
  for (std::size_t i = 0; i < _host.order(); ++i) {
    auto elems = powers_of(_host.element(i));
    std::sort(elems.begin(), elems.end());
    by_set[std::move(elems)].push_back(i);
  }

  std::vector<std::pair<std::vector<Permutation>, std::vector<std::size_t>>> ordered(
    by_set.begin(), by_set.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](auto const &a, auto const &b) { return a.first.size() < b.first.size(); });

  for (std::size_t z = 0; z < ordered.size(); ++z) {
    auto const &[elems, gens] = ordered[z];
    std::vector<Permutation> gen_perms;
    for (auto i : gens) {
      gen_perms.push_back(_host.element(i));
      _cyclic_of[i] = z;
    }
    _subgroups.push_back(
      PermGroup::from_elements(_host.degree(), {gen_perms.front()}, elems));
    _generators.push_back(std::move(gen_perms));
  }

  auto const m = size();
  _leq.assign(m * m, 0);
  _mu2.assign(m * m, 0);
  _f.assign(m, 0);
  for (std::size_t z = 0; z < m; ++z) {
    for (std::size_t w = 0; w < m; ++w) {
      if (!_subgroups[z].is_subgroup_of(_subgroups[w]))
        continue;
      _leq[z * m + w] = 1;
      _mu2[z * m + w] = moebius(_subgroups[w].order() / _subgroups[z].order());
      _f[z] += _mu2[z * m + w];
    }
  }
}

std::size_t CyclicLattice::index_of_cyclic(Permutation const &x) const
{
  auto i = _host.index_of(x);
  if (!i)
    throw InvalidArgument("element outside the lattice host");
  return _cyclic_of[*i];
}

std::pair<FactoredRational, FactoredRational>
moebius_partition_sides(CyclicLattice const &lattice, ElementWeight const &gamma)
{
  FactoredRational lhs;
  for (auto const &x : lattice.host().elements())
    lhs = lhs.mul_pow(gamma(x), 1);

  FactoredRational rhs;
  for (std::size_t z = 0; z < lattice.size(); ++z) {
    if (lattice.f(z) == 0)
      continue;
    FactoredRational inner;
    for (auto const &x : lattice.subgroup(z).elements())
      inner = inner.mul_pow(gamma(x), 1);
    rhs = rhs * inner.pow(lattice.f(z));
  }
  return {lhs, rhs};
}

bool moebius_partition_check(PermGroup const &h, ElementWeight const &gamma)
{
  auto [lhs, rhs] = moebius_partition_sides(CyclicLattice(h), gamma);
  return lhs == rhs;
}

} // namespace hallfix
