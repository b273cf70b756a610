#include "hallfix/hall.hpp"

#include "json.hpp"

#include "hallfix/errors.hpp"

namespace hallfix {

std::uint64_t pi_part(std::uint64_t order, PiSet const &pi)
{
  std::uint64_t res = 1;
  for (auto [p, k] : factorize(order)) {
    if (!pi.contains(p))
      continue;
    for (unsigned i = 0; i < k; ++i)
      res *= p;
  }
  return res;
}

HallContext::HallContext(PermGroup group, PiSet pi, std::uint64_t n, std::vector<PermGroup> halls,
                         std::vector<std::int64_t> lambda, FiniteAction action)
: _group(std::move(group)), _pi(std::move(pi)), _n(n), _halls(std::move(halls)),
  _lambda(std::move(lambda)), _action(std::move(action))
{}

bool HallContext::is_pi_element(Permutation const &x) const
{
  auto i = _group.index_of(x);
  return i && _lambda[*i] >= 0;
}

std::uint64_t HallContext::lambda(Permutation const &x) const
{
  auto i = _group.index_of(x);
  if (!i)
    throw InvalidArgument("lambda: " + x.to_string() + " is not in the group");
  if (_lambda[*i] < 0)
    throw InvalidArgument("lambda: " + x.to_string() + " is not a pi-element");
  return static_cast<std::uint64_t>(_lambda[*i]);
}

std::vector<LambdaEntry> HallContext::lambda_table() const
{
  std::vector<LambdaEntry> res;
  for (std::size_t i = 0; i < _group.order(); ++i) {
    if (_lambda[i] < 0)
      continue;
    auto const &e = _group.element(i);
    res.push_back({e, element_order(e), static_cast<std::uint64_t>(_lambda[i])});
  }
  return res;
}

std::optional<std::size_t> HallContext::hall_index(PermGroup const &h) const
{
  for (std::size_t i = 0; i < _halls.size(); ++i) {
    if (_halls[i] == h)
      return i;
  }
  return std::nullopt;
}

HallContext build_hall_context(PermGroup const &g, PiSet const &pi)
{
  auto const n = pi_part(g.order(), pi);
  auto halls = subgroups_of_order(g, n);
  if (halls.empty())
    throw NoHallSubgroup("no Hall " + pi.to_string() + "-subgroup of order " + std::to_string(n));

  std::vector<std::int64_t> lambda(g.order(), -1);
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (pi.covers(element_order(g.element(i))))
      lambda[i] = 0;
  }
  for (auto const &h : halls) {
    for (auto const &x : h.elements())
      ++lambda[*g.index_of(x)];
  }

  auto action = conjugation_action(g, halls);
  return HallContext(g, pi, n, std::move(halls), std::move(lambda), std::move(action));
}

std::string lambda_report_text(HallContext const &ctx)
{
  std::string res;
  for (auto const &e : ctx.lambda_table()) {
    res += "element " + e.element.to_string() + " order " + std::to_string(e.order) +
           " lambda " + std::to_string(e.lambda) + "\n";
  }
  return res;
}

std::string lambda_report_json(HallContext const &ctx)
{
  auto arr = nlohmann::ordered_json::array();
  for (auto const &e : ctx.lambda_table()) {
    arr.push_back({{"element", e.element.to_string()},
                   {"order", e.order},
                   {"lambda", e.lambda}});
  }
  return arr.dump();
}

} // namespace hallfix
