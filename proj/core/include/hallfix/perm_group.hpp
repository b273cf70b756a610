#ifndef HALLFIX_PERM_GROUP_HPP
#define HALLFIX_PERM_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hallfix/number_theory.hpp"
#include "hallfix/permutation.hpp"

namespace hallfix {

inline constexpr std::uint64_t kDefaultElementCap = 10080;

/// A finite permutation group with its full element list.
///
/// Elements are kept sorted (lexicographically by image vector), so the
/// identity is always element 0 and two groups with the same element set
/// compare equal regardless of their generators. Instances are immutable
/// and cheap to copy.
class PermGroup {
public:
  /// Trivial group on one point.
  PermGroup();

  static PermGroup trivial(unsigned degree);

  /// Builds a group from an element set already known to be closed.
  /// Throws InvalidArgument if the set is not a group containing `generators`.
  static PermGroup from_elements(unsigned degree,
                                 std::vector<Permutation> generators,
                                 std::vector<Permutation> elements);

  unsigned degree() const noexcept;
  std::vector<Permutation> const &generators() const noexcept;
  std::vector<Permutation> const &elements() const noexcept;
  std::uint64_t order() const noexcept;

  Permutation const &element(std::size_t i) const { return elements()[i]; }
  std::optional<std::size_t> index_of(Permutation const &g) const;
  bool contains(Permutation const &g) const { return index_of(g).has_value(); }

  bool is_trivial() const noexcept { return order() == 1u; }
  bool is_abelian() const;
  bool is_cyclic() const;
  bool is_subgroup_of(PermGroup const &g) const;

  /// Generators if present, printed canonically, e.g. "<(1 2 3), (1 2)>".
  std::string to_string() const;

  friend bool operator==(PermGroup const &a, PermGroup const &b);

  struct Data; // opaque storage, defined in the implementation

private:
  explicit PermGroup(std::shared_ptr<Data const> data);

  friend PermGroup close(std::vector<Permutation> const &, unsigned, std::uint64_t);

  std::shared_ptr<Data const> _data;
};

/// Closes a generating set. Throws CapExceeded once more than `cap` elements
/// have been produced, InvalidArgument if generator degrees disagree.
PermGroup close(std::vector<Permutation> const &generators, unsigned degree,
                std::uint64_t cap = kDefaultElementCap);

/// Subgroup of `group` generated by `generators`, all of which must lie in it.
PermGroup subgroup(PermGroup const &group, std::vector<Permutation> const &generators);

/// {g in G : gs = sg}. Throws InvalidArgument if s is not in G.
PermGroup centralizer(PermGroup const &g, Permutation const &s);
/// {g in G : gs = sg for all s in S}. Throws InvalidArgument unless S <= G.
PermGroup centralizer(PermGroup const &g, PermGroup const &s);

/// Elements of `n` commuting with `x`; x need not lie in n.
PermGroup centralizer_in(PermGroup const &n, Permutation const &x);
/// Elements of `n` commuting with every element of `s`.
PermGroup centralizer_in(PermGroup const &n, PermGroup const &s);

/// {g in G : gHg^-1 = H}. Throws InvalidArgument unless H <= G.
PermGroup normalizer(PermGroup const &g, PermGroup const &h);

bool is_normal(PermGroup const &g, PermGroup const &h);

/// g H g^-1.
PermGroup conjugate(PermGroup const &h, Permutation const &g);

/// All distinct conjugates of H in G, in order of first appearance when
/// running over the elements of G.
std::vector<PermGroup> conjugates(PermGroup const &g, PermGroup const &h);

PermGroup intersection(PermGroup const &a, PermGroup const &b);

/// Conjugacy classes as lists of elements, ordered by least element.
std::vector<std::vector<Permutation>> conjugacy_classes(PermGroup const &g);

/// All subgroups of order m, ordered by sorted element set. Throws
/// InvalidArgument unless m divides |G|.
std::vector<PermGroup> subgroups_of_order(PermGroup const &g, std::uint64_t m);

/// All normal subgroups, ordered by (order, element set).
std::vector<PermGroup> normal_subgroups(PermGroup const &g);

/// Largest normal subgroup whose order is supported on pi.
PermGroup core_pi(PermGroup const &g, PiSet const &pi);

/// A homomorphism between permutation groups given by its element table.
class GroupHom {
public:
  /// `map[i]` is the index in `target` of the image of source element i.
  /// Throws InvalidArgument unless the table is total and multiplicative.
  GroupHom(PermGroup source, PermGroup target, std::vector<std::size_t> map);

  PermGroup const &source() const noexcept { return _source; }
  PermGroup const &target() const noexcept { return _target; }
  std::vector<std::size_t> const &table() const noexcept { return _map; }

  Permutation const &operator()(Permutation const &g) const;
  PermGroup kernel() const;
  bool is_surjective() const;

private:
  PermGroup _source;
  PermGroup _target;
  std::vector<std::size_t> _map;
};

struct Quotient {
  PermGroup group;
  GroupHom projection;
};

/// G/N realised by the action of G on the cosets of N (numbered by least
/// element). Throws InvalidArgument unless N is normal in G.
Quotient quotient(PermGroup const &g, PermGroup const &n);

/// Repeatedly factors out O_pi and O_pi'; true iff this reaches the trivial group.
bool is_pi_separable(PermGroup const &g, PiSet const &pi);

/// True iff G is p-separable for every prime p dividing |G|.
bool is_solvable(PermGroup const &g);

/// A left action of a permutation group on a finite labelled point set.
class FiniteAction {
public:
  /// `table[i * points + x]` is the image of point x under element i.
  /// Throws InvalidArgument unless the table defines an action.
  FiniteAction(PermGroup group, std::vector<std::string> labels,
               std::vector<std::uint32_t> table);

  PermGroup const &group() const noexcept { return _group; }
  std::size_t num_points() const noexcept { return _labels.size(); }
  std::vector<std::string> const &labels() const noexcept { return _labels; }

  std::uint32_t act(Permutation const &g, std::uint32_t x) const;
  std::uint64_t fixed_points(Permutation const &g) const;
  std::vector<std::vector<std::uint32_t>> orbits() const;

private:
  std::size_t index(Permutation const &g) const;

  PermGroup _group;
  std::vector<std::string> _labels;
  std::vector<std::uint32_t> _table;
};

/// G acting on the points it permutes.
FiniteAction natural_action(PermGroup const &g);

/// G acting by conjugation on a conjugation-closed list of its subgroups.
FiniteAction conjugation_action(PermGroup const &g, std::vector<PermGroup> const &subgroups);

/// G acting on itself by conjugation.
FiniteAction conjugation_action(PermGroup const &g);

} // namespace hallfix

#endif // HALLFIX_PERM_GROUP_HPP
