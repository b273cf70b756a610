#include "hallfix/verifiers.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hallfix/errors.hpp"
#include "hallfix/number_theory.hpp"

namespace hallfix {

namespace {

void require_hall(HallContext const &ctx, PermGroup const &h)
{
  if (!ctx.hall_index(h))
    throw InvalidArgument("subgroup is not a Hall subgroup of the context");
}

// Sum of values^exponent, grouping equal values first.
BigInt power_sum(std::map<std::uint64_t, std::uint64_t> const &value_counts, std::uint64_t exponent)
{
  BigInt res = 0;
  for (auto [v, c] : value_counts)
    res += BigInt(c) * big_pow(BigInt(v), exponent);
  return res;
}

bool is_power_of(std::uint64_t n, std::uint64_t p)
{
  while (n % p == 0u)
    n /= p;
  return n == 1u;
}

} // namespace

FactoredRational alpha_multiplicative(HallContext const &ctx, PermGroup const &h)
{
  return alpha_multiplicative_with_order(ctx, h, ctx.n());
}

FactoredRational alpha_multiplicative_with_order(HallContext const &ctx, PermGroup const &h,
                                                 std::uint64_t m)
{
  require_hall(ctx, h);
  if (m == 0u)
    throw InvalidArgument("exponent order must be positive");

  std::map<std::uint64_t, FactoredRational::Exponent> exponents;
  for (auto d : divisors(m)) {
    auto const mu = moebius(d);
    if (mu == 0)
      continue;
    auto const e = static_cast<FactoredRational::Exponent>(m / d) * mu;
    for (auto const &x : h.elements())
      exponents[ctx.lambda(x.pow(static_cast<std::int64_t>(d)))] += e;
  }

  FactoredRational res;
  for (auto [value, e] : exponents)
    res = res.mul_pow(value, e);
  return res;
}

bool radical_reduction_check(HallContext const &ctx, PermGroup const &h)
{
  auto const n = ctx.n();
  auto const r = radical(n);
  auto full = alpha_multiplicative_with_order(ctx, h, n);
  auto reduced = alpha_multiplicative_with_order(ctx, h, r);
  return full == reduced.pow(static_cast<FactoredRational::Exponent>(n / r));
}

bool verify_cyclic_case(PermGroup const &g, PiSet const &pi)
{
  auto ctx = build_hall_context(g, pi);
  for (auto const &h : ctx.halls()) {
    if (h.is_cyclic())
      return alpha_multiplicative(ctx, h).is_one();
  }
  throw NotApplicable("no cyclic Hall " + pi.to_string() + "-subgroup");
}

Nr2Sides nr2_sides(HallContext const &ctx, PermGroup const &h, std::uint64_t p)
{
  require_hall(ctx, h);
  if (!is_prime(p))
    throw InvalidArgument(std::to_string(p) + " is not prime");

  Nr2Sides res;
  for (auto const &x : h.elements()) {
    res.powered = res.powered.mul_pow(ctx.lambda(x.pow(static_cast<std::int64_t>(p))), 1);
    res.raised = res.raised.mul_pow(ctx.lambda(x), static_cast<FactoredRational::Exponent>(p));
  }
  return res;
}

CoprimeActionScenario::CoprimeActionScenario(PermGroup g, PermGroup n, PermGroup h)
: _g(std::move(g)), _n(std::move(n)), _h(std::move(h))
{
  if (!_n.is_subgroup_of(_g) || !_h.is_subgroup_of(_g))
    throw InvalidArgument("scenario: N and H must be subgroups of G");
  if (!is_normal(_g, _n))
    throw InvalidArgument("scenario: N is not normal in G");
  if (_n.order() * _h.order() != _g.order())
    throw InvalidArgument("scenario: |N||H| != |G|");
  if (!intersection(_n, _h).is_trivial())
    throw InvalidArgument("scenario: N and H intersect nontrivially");
  if (std::gcd(_n.order(), _h.order()) != 1u)
    throw InvalidArgument("scenario: |N| and |H| are not coprime");
}

NrCheck nr_check(CoprimeActionScenario const &s, std::uint64_t p)
{
  auto const &n = s.n();
  auto const &h = s.h();
  if (!is_prime(p))
    throw InvalidArgument(std::to_string(p) + " is not prime");
  if (!is_power_of(h.order(), p))
    throw NotApplicable("acting group is not a " + std::to_string(p) + "-group");
  if (n.order() % p == 0u)
    throw NotApplicable("acted-on group is not a " + std::to_string(p) + "'-group");

  auto const pe = static_cast<FactoredRational::Exponent>(p);
  auto const cp = centralizer_in(n, h).order();

  NrCheck res;
  res.lhs = cp;

  FactoredRational prod_cx_p, prod_cxp;
  for (auto const &x : h.elements()) {
    auto const cx = centralizer_in(n, x).order();
    auto const cxp = centralizer_in(n, x.pow(static_cast<std::int64_t>(p))).order();
    prod_cx_p = prod_cx_p.mul_pow(cx, pe);
    prod_cxp = prod_cxp.mul_pow(cxp, 1);
    res.eq2_left = res.eq2_left.mul_pow(cxp / cp, 1);
    res.eq2_right = res.eq2_right.mul_pow(cx / cp, pe);
  }

  auto const root = static_cast<FactoredRational::Exponent>(h.order() * (p - 1u));
  res.cleared_left = FactoredRational::of(cp).pow(root) * prod_cxp;
  res.cleared_right = prod_cx_p;

  auto inner = prod_cx_p * prod_cxp.inverse();
  res.rhs_exact = true;
  for (auto [q, e] : inner.factors()) {
    if (e % root != 0) {
      res.rhs_exact = false;
      continue;
    }
    res.rhs = res.rhs.mul_pow(q, e / root);
  }
  return res;
}

WielandtSides wielandt_product(CoprimeActionScenario const &s)
{
  CyclicLattice lattice(s.h());
  WielandtSides res;
  res.lhs = FactoredRational::of(centralizer_in(s.n(), s.h()).order())
              .pow(static_cast<FactoredRational::Exponent>(s.h().order()));
  for (std::size_t z = 0; z < lattice.size(); ++z) {
    auto const &zg = lattice.subgroup(z);
    auto const e = static_cast<FactoredRational::Exponent>(zg.order()) * lattice.f(z);
    res.rhs = res.rhs.mul_pow(centralizer_in(s.n(), zg).order(), e);
  }
  return res;
}

FactoredRational wielandt_alpha_link(CoprimeActionScenario const &s)
{
  auto sides = wielandt_product(s);
  return (sides.lhs.inverse() * sides.rhs)
    .pow(static_cast<FactoredRational::Exponent>(totient(s.h().order())));
}

bool lambda_multiplicativity_check(HallContext const &ctx)
{
  auto const &g = ctx.group();
  auto const &h = ctx.canonical_hall();
  auto const n = core_pi(g, ctx.pi().complement_in(g.order()));

  std::vector<Permutation> gens = h.generators();
  gens.insert(gens.end(), n.generators().begin(), n.generators().end());
  auto hn = subgroup(g, gens);
  auto ctx_hn = build_hall_context(hn, ctx.pi());

  auto q = quotient(g, n);
  auto ctx_q = build_hall_context(q.group, ctx.pi());

  for (auto const &x : h.elements()) {
    if (ctx.lambda(x) != ctx_hn.lambda(x) * ctx_q.lambda(q.projection(x)))
      return false;
  }
  return true;
}

BigRational beta_additive(HallContext const &ctx)
{
  return beta_additive_for(ctx, ctx.canonical_hall());
}

BigRational beta_additive_for(HallContext const &ctx, PermGroup const &h)
{
  require_hall(ctx, h);
  auto const n = ctx.n();

  BigInt sum = 0;
  for (auto d : divisors(n)) {
    auto const mu = moebius(d);
    if (mu == 0)
      continue;
    std::map<std::uint64_t, std::uint64_t> counts;
    for (auto const &x : h.elements())
      ++counts[ctx.lambda(x.pow(static_cast<std::int64_t>(d)))];
    sum += mu * power_sum(counts, n / d);
  }
  return make_rational(sum, BigInt(n) * BigInt(n));
}

BigRational sym_char(SymCharSpec const &spec, CharacterTable const &chi, Permutation const &h)
{
  if (!chi.group().contains(h))
    throw InvalidArgument("sym_char: element outside the character's group");

  auto const n = spec.n();
  std::vector<BigRational> powers(n + 1u);
  for (unsigned i = 1; i <= n; ++i)
    powers[i] = chi(h.pow(i));

  BigRational sum = 0;
  auto const &a = spec.group();
  for (std::size_t j = 0; j < a.order(); ++j) {
    auto const &alpha = spec.alpha().values()[j];
    if (alpha == 0)
      continue;
    BigRational term = alpha;
    auto const &c = spec.cycle_counts(j);
    for (unsigned i = 1; i <= n; ++i) {
      if (c[i])
        term *= big_pow(powers[i], c[i]);
    }
    sum += term;
  }
  return sum / BigRational(BigInt(a.order()));
}

BigRational sym_char_cyclic(CharacterTable const &chi, std::uint64_t n, Permutation const &h)
{
  if (!chi.group().contains(h))
    throw InvalidArgument("sym_char_cyclic: element outside the character's group");
  if (n == 0u)
    throw InvalidArgument("sym_char_cyclic: n must be positive");

  BigRational sum = 0;
  for (auto d : divisors(n)) {
    auto const mu = moebius(d);
    if (mu == 0)
      continue;
    sum += BigRational(mu) * big_pow(chi(h.pow(static_cast<std::int64_t>(d))), n / d);
  }
  return sum / BigRational(BigInt(n));
}

BigInt burnside_orbit_count(PermGroup const &h, FiniteAction const &action, std::uint64_t k,
                            std::uint64_t cap)
{
  if (k == 0u)
    throw InvalidArgument("tuple length must be positive");
  if (big_pow(BigInt(action.num_points()), k) > BigInt(cap))
    throw CapExceeded(std::to_string(action.num_points()) + "^" + std::to_string(k) + " tuples",
                      cap);

  std::map<std::uint64_t, std::uint64_t> counts;
  for (auto const &x : h.elements())
    ++counts[action.fixed_points(x)];
  auto total = power_sum(counts, k);

  BigInt q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), total.get_mpz_t(), BigInt(h.order()).get_mpz_t());
  if (r != 0)
    throw Error("orbit count is not an integer; the table is not an action of H");
  return q;
}

InterpretationCheck interpretation_check(HallContext const &ctx, std::uint64_t cap)
{
  auto const &h = ctx.canonical_hall();
  if (!h.is_abelian())
    throw NotApplicable("Hall subgroup is not abelian");

  auto const n = ctx.n();
  BigInt sum = 0;
  for (auto d : divisors(n)) {
    auto const mu = moebius(d);
    if (mu == 0)
      continue;
    std::vector<Permutation> powers;
    for (auto const &x : h.elements())
      powers.push_back(x.pow(static_cast<std::int64_t>(d)));
    std::sort(powers.begin(), powers.end());
    powers.erase(std::unique(powers.begin(), powers.end()), powers.end());
    auto hd = PermGroup::from_elements(h.degree(), {}, std::move(powers));
    sum += mu * burnside_orbit_count(hd, ctx.hall_action(), n / d, cap);
  }

  return InterpretationCheck{beta_additive(ctx), make_rational(sum, BigInt(n))};
}

bool proof_bound_check(std::uint64_t t, std::uint64_t n)
{
  if (t < 3u || n < 2u)
    throw InvalidArgument("proof_bound_check needs t >= 3 and n >= 2");

  BigInt sum = 0;
  for (auto d : divisors(n)) {
    if (d != 1u)
      sum += big_pow(BigInt(t), n / d);
  }
  return BigInt(n) * sum < big_pow(BigInt(t), n);
}

BigRational curiosity(PermGroup const &g, PiSet const &target_pi, std::uint64_t n)
{
  if (n == 0u)
    throw InvalidArgument("curiosity: n must be positive");

  auto ctx = build_hall_context(g, target_pi);
  auto const &action = ctx.hall_action();

  BigInt sum = 0;
  for (auto d : divisors(n)) {
    auto const mu = moebius(d);
    if (mu == 0)
      continue;
    std::map<std::uint64_t, std::uint64_t> counts;
    for (auto const &x : g.elements())
      ++counts[action.fixed_points(x.pow(static_cast<std::int64_t>(d)))];
    sum += mu * power_sum(counts, n / d);
  }
  return make_rational(sum, BigInt(n) * BigInt(n));
}

} // namespace hallfix
