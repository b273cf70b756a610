#include "hallfix/characters.hpp"

#include "hallfix/errors.hpp"

namespace hallfix {

CharacterTable::CharacterTable(PermGroup group, std::vector<BigRational> values)
: _group(std::move(group)), _values(std::move(values))
{
  if (_values.size() != _group.order())
    throw InvalidArgument("character table size does not match the group");

  auto const &pool = _group.generators().empty() ? _group.elements() : _group.generators();
  for (std::size_t i = 0; i < _group.order(); ++i) {
    auto const &x = _group.element(i);
    for (auto const &s : pool) {
      auto j = *_group.index_of(s * x * s.inverse());
      if (_values[j] != _values[i])
        throw InvalidArgument("values are not constant on conjugacy classes");
    }
  }
}

BigRational const &CharacterTable::operator()(Permutation const &g) const
{
  auto i = _group.index_of(g);
  if (!i)
    throw InvalidArgument("character evaluated outside its group");
  return _values[*i];
}

BigRational CharacterTable::trivial_multiplicity() const
{
  BigRational sum = 0;
  for (auto const &v : _values)
    sum += v;
  return sum / BigRational(BigInt(_group.order()));
}

CharacterTable trivial_character(PermGroup const &g)
{
  return CharacterTable(g, std::vector<BigRational>(g.order(), BigRational(1)));
}

CharacterTable permutation_character(FiniteAction const &action)
{
  std::vector<BigRational> values;
  for (auto const &e : action.group().elements())
    values.emplace_back(BigInt(action.fixed_points(e)));
  return CharacterTable(action.group(), std::move(values));
}

CharacterTable conjugation_character(PermGroup const &g)
{
  std::vector<BigRational> values;
  for (auto const &e : g.elements())
    values.emplace_back(BigInt(centralizer(g, e).order()));
  return CharacterTable(g, std::move(values));
}

CharacterTable lambda_character(HallContext const &ctx, PermGroup const &h)
{
  if (!ctx.hall_index(h))
    throw InvalidArgument("lambda_character: subgroup is not a Hall subgroup of the context");
  std::vector<BigRational> values;
  for (auto const &e : h.elements())
    values.emplace_back(BigInt(ctx.lambda(e)));
  return CharacterTable(h, std::move(values));
}

CharacterTable sign_character(PermGroup const &a)
{
  std::vector<BigRational> values;
  for (auto const &e : a.elements()) {
    int sign = 1;
    for (auto const &c : e.cycles()) {
      if (c.size() % 2u == 0u)
        sign = -sign;
    }
    values.emplace_back(sign);
  }
  return CharacterTable(a, std::move(values));
}

SymCharSpec::SymCharSpec(CharacterTable alpha)
: _alpha(std::move(alpha))
{
  for (auto const &a : group().elements()) {
    auto counts = a.cycle_type();
    unsigned total = 0;
    for (unsigned i = 1; i < counts.size(); ++i)
      total += i * counts[i];
    if (total != n())
      throw InvalidArgument("cycle counts do not partition n");
    _cycles.push_back(std::move(counts));
  }
}

} // namespace hallfix
