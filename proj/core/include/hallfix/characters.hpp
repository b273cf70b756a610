#ifndef HALLFIX_CHARACTERS_HPP
#define HALLFIX_CHARACTERS_HPP

#include <cstddef>
#include <vector>

#include "hallfix/bignum.hpp"
#include "hallfix/hall.hpp"
#include "hallfix/perm_group.hpp"

namespace hallfix {

/// A rational-valued class function on a group, stored per element.
class CharacterTable {
public:
  /// `values[i]` belongs to group.element(i). Throws InvalidArgument unless
  /// the values are constant on conjugacy classes.
  CharacterTable(PermGroup group, std::vector<BigRational> values);

  PermGroup const &group() const noexcept { return _group; }
  BigRational const &operator()(Permutation const &g) const;
  std::vector<BigRational> const &values() const noexcept { return _values; }

  /// Scalar product with the trivial character.
  BigRational trivial_multiplicity() const;

private:
  PermGroup _group;
  std::vector<BigRational> _values;
};

CharacterTable trivial_character(PermGroup const &g);

/// Number of fixed points of each element of the acting group.
CharacterTable permutation_character(FiniteAction const &action);

/// chi(g) = |C_G(g)|, the character of G conjugating itself.
CharacterTable conjugation_character(PermGroup const &g);

/// lambda restricted to H, i.e. the permutation character of H conjugating
/// the Hall subgroups. H must be one of ctx.halls().
CharacterTable lambda_character(HallContext const &ctx, PermGroup const &h);

/// Sign character of a permutation group.
CharacterTable sign_character(PermGroup const &a);

/// A permutation group A <= S_n with a rational class function alpha and
/// the cycle counts c_i(a) of its elements.
class SymCharSpec {
public:
  explicit SymCharSpec(CharacterTable alpha);

  PermGroup const &group() const noexcept { return _alpha.group(); }
  unsigned n() const noexcept { return group().degree(); }
  CharacterTable const &alpha() const noexcept { return _alpha; }

  /// c_i(a) for i in 1..n; index 0 unused.
  std::vector<unsigned> const &cycle_counts(std::size_t a) const { return _cycles[a]; }

private:
  CharacterTable _alpha;
  std::vector<std::vector<unsigned>> _cycles;
};

} // namespace hallfix

#endif // HALLFIX_CHARACTERS_HPP
