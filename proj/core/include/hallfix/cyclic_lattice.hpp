#ifndef HALLFIX_CYCLIC_LATTICE_HPP
#define HALLFIX_CYCLIC_LATTICE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "hallfix/factored_rational.hpp"
#include "hallfix/perm_group.hpp"

namespace hallfix {

/// The poset of cyclic subgroups of a group H with its Moebius data.
///
/// mu2(Z, W) is the poset Moebius function, which on cyclic groups equals
/// moebius(|W|/|Z|) for Z <= W and 0 otherwise; f(Z) = sum over W of
/// mu2(Z, W). Subgroups are ordered by (order, element list), so index 0 is
/// the trivial subgroup.
class CyclicLattice {
public:
  explicit CyclicLattice(PermGroup host);

  PermGroup const &host() const noexcept { return _host; }
  std::size_t size() const noexcept { return _subgroups.size(); }
  std::vector<PermGroup> const &subgroups() const noexcept { return _subgroups; }
  PermGroup const &subgroup(std::size_t i) const { return _subgroups[i]; }

  bool contained(std::size_t z, std::size_t w) const { return _leq[z * size() + w]; }
  int mu2(std::size_t z, std::size_t w) const { return _mu2[z * size() + w]; }
  std::int64_t f(std::size_t z) const { return _f[z]; }

  /// Generators [W] of the i-th subgroup.
  std::vector<Permutation> const &generator_set(std::size_t i) const { return _generators[i]; }

  /// Index of <x> for x in H.
  std::size_t index_of_cyclic(Permutation const &x) const;

private:
  PermGroup _host;
  std::vector<PermGroup> _subgroups;
  std::vector<char> _leq;
  std::vector<int> _mu2;
  std::vector<std::int64_t> _f;
  std::vector<std::vector<Permutation>> _generators;
  std::vector<std::size_t> _cyclic_of; // host element index -> subgroup index
};

inline CyclicLattice cyclic_lattice(PermGroup const &h) { return CyclicLattice(h); }

using ElementWeight = std::function<std::uint64_t(Permutation const &)>;

/// prod_{x in H} gamma(x) and prod_Z (prod_{z in Z} gamma(z))^f(Z).
std::pair<FactoredRational, FactoredRational>
moebius_partition_sides(CyclicLattice const &lattice, ElementWeight const &gamma);

/// True iff both sides of the cyclic-lattice product identity agree.
bool moebius_partition_check(PermGroup const &h, ElementWeight const &gamma);

} // namespace hallfix

#endif // HALLFIX_CYCLIC_LATTICE_HPP
