#ifndef HALLFIX_TESTS_HELPERS_HPP
#define HALLFIX_TESTS_HELPERS_HPP

#include <string>

#include "hallfix/corpus.hpp"
#include "hallfix/perm_group.hpp"
#include "hallfix/permutation.hpp"
#include "oracles/oracles.hpp"

namespace testing {

inline hallfix::Permutation P(std::string const &text, unsigned degree)
{
  return hallfix::parse_permutation(text, degree);
}

inline hallfix::PermGroup builtin(std::string const &name)
{
  auto const *e = hallfix::find_builtin(name);
  REQUIRE(e != nullptr);
  return e->group();
}

inline oracle::ElementSet elems(hallfix::PermGroup const &g) { return g.elements(); }

inline hallfix::PermGroup from_set(oracle::ElementSet const &s)
{
  return hallfix::PermGroup::from_elements(s.front().degree(), {}, s);
}

} // namespace testing

#endif
