#ifndef HALLFIX_HALL_HPP
#define HALLFIX_HALL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hallfix/number_theory.hpp"
#include "hallfix/perm_group.hpp"

namespace hallfix {

/// Largest divisor of `order` supported on pi.
std::uint64_t pi_part(std::uint64_t order, PiSet const &pi);

struct LambdaEntry {
  Permutation element;
  std::uint64_t order;
  std::uint64_t lambda;
};

/// A group together with all of its Hall pi-subgroups and the function
/// lambda(x) = number of Hall pi-subgroups containing the pi-element x.
///
/// Hall subgroups are all subgroups of order pi_part(|G|, pi); conjugacy
/// is not assumed.
class HallContext {
public:
  PermGroup const &group() const noexcept { return _group; }
  PiSet const &pi() const noexcept { return _pi; }
  std::uint64_t n() const noexcept { return _n; }
  std::vector<PermGroup> const &halls() const noexcept { return _halls; }
  std::uint64_t t() const noexcept { return _halls.size(); }

  /// The member of halls() with the least sorted element list.
  PermGroup const &canonical_hall() const { return _halls.front(); }

  bool is_pi_element(Permutation const &x) const;

  /// Throws InvalidArgument unless x is a pi-element of the group.
  std::uint64_t lambda(Permutation const &x) const;

  /// All pi-elements in element order.
  std::vector<LambdaEntry> lambda_table() const;

  /// G acting by conjugation on halls().
  FiniteAction const &hall_action() const noexcept { return *_action; }

  /// Position of h in halls(), if it is one of them.
  std::optional<std::size_t> hall_index(PermGroup const &h) const;

private:
  friend HallContext build_hall_context(PermGroup const &, PiSet const &);

  HallContext(PermGroup group, PiSet pi, std::uint64_t n, std::vector<PermGroup> halls,
              std::vector<std::int64_t> lambda, FiniteAction action);

  PermGroup _group;
  PiSet _pi;
  std::uint64_t _n;
  std::vector<PermGroup> _halls;
  std::vector<std::int64_t> _lambda; // -1 off the pi-elements
  std::optional<FiniteAction> _action;
};

/// Throws NoHallSubgroup if G has no subgroup of order pi_part(|G|, pi).
HallContext build_hall_context(PermGroup const &g, PiSet const &pi);

/// "element <cycles> order <k> lambda <v>" lines.
std::string lambda_report_text(HallContext const &ctx);
/// JSON array of {element, order, lambda}.
std::string lambda_report_json(HallContext const &ctx);

} // namespace hallfix

#endif // HALLFIX_HALL_HPP
