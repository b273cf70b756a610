#ifndef HALLFIX_VERIFIERS_HPP
#define HALLFIX_VERIFIERS_HPP

#include <cstdint>

#include "hallfix/bignum.hpp"
#include "hallfix/characters.hpp"
#include "hallfix/cyclic_lattice.hpp"
#include "hallfix/factored_rational.hpp"
#include "hallfix/hall.hpp"
#include "hallfix/perm_group.hpp"

namespace hallfix {

inline constexpr std::uint64_t kDefaultTupleCap = 10'000'000;

// Multiplicative formula ----------------------------------------------------

/// prod_{d | n} prod_{x in H} lambda(x^d)^((n/d) mu(d)) with n = |H|, in
/// factored form. H must be one of ctx.halls().
FactoredRational alpha_multiplicative(HallContext const &ctx, PermGroup const &h);

/// Same product with n replaced by an arbitrary positive `m` in the
/// exponents (d still runs over the divisors of m).
FactoredRational alpha_multiplicative_with_order(HallContext const &ctx, PermGroup const &h,
                                                 std::uint64_t m);

/// alpha computed with n equals alpha computed with rad(n), raised to n/rad(n).
bool radical_reduction_check(HallContext const &ctx, PermGroup const &h);

/// True iff alpha = 1 for a group whose Hall pi-subgroups are cyclic. Throws
/// NoHallSubgroup, or NotApplicable if the Hall subgroups are not cyclic.
bool verify_cyclic_case(PermGroup const &g, PiSet const &pi);

struct Nr2Sides {
  FactoredRational powered;   ///< prod_{x in H} lambda(x^p)
  FactoredRational raised;    ///< prod_{x in H} lambda(x)^p

  /// raised / powered; 1 exactly when the two sides agree.
  FactoredRational deviation() const { return raised * powered.inverse(); }
};

/// Both sides of the p-power lambda identity over a Hall subgroup H.
Nr2Sides nr2_sides(HallContext const &ctx, PermGroup const &h, std::uint64_t p);

// Coprime actions -------------------------------------------------------------

/// G = N H with N normal, N and H intersecting trivially and of coprime orders.
class CoprimeActionScenario {
public:
  /// Throws InvalidArgument if any defining condition fails.
  CoprimeActionScenario(PermGroup g, PermGroup n, PermGroup h);

  PermGroup const &g() const noexcept { return _g; }
  PermGroup const &n() const noexcept { return _n; }
  PermGroup const &h() const noexcept { return _h; }

private:
  PermGroup _g, _n, _h;
};

struct NrCheck {
  std::uint64_t lhs = 0;        ///< |C_N(P)|
  FactoredRational rhs;         ///< the fractional-exponent right side, exact when rhs_exact
  bool rhs_exact = false;       ///< every exponent divided evenly by |P|(p-1)
  FactoredRational cleared_left;  ///< |C_N(P)|^(|P|(p-1)) prod_x |C_N(x^p)|
  FactoredRational cleared_right; ///< prod_x |C_N(x)|^p
  FactoredRational eq2_left;    ///< prod_x lambda(x^p), lambda(x) = |C_N(x) : C_N(P)|
  FactoredRational eq2_right;   ///< prod_x lambda(x)^p

  bool holds() const
  {
    return rhs_exact && FactoredRational::of(lhs) == rhs && cleared_left == cleared_right &&
           eq2_left == eq2_right;
  }
};

/// Throws NotApplicable unless H is a p-group and N a p'-group.
NrCheck nr_check(CoprimeActionScenario const &s, std::uint64_t p);

struct WielandtSides {
  FactoredRational lhs; ///< |C_N(H)|^|H|
  FactoredRational rhs; ///< prod_Z |C_N(Z)|^(|Z| f(Z))
  bool holds() const { return lhs == rhs; }
};

WielandtSides wielandt_product(CoprimeActionScenario const &s);

/// (|C_N(H)|^-|H| prod_Z |C_N(Z)|^(|Z| f(Z)))^phi(|H|), the value alpha(G)
/// reduces to when G = NH.
FactoredRational wielandt_alpha_link(CoprimeActionScenario const &s);

/// lambda_G(x) = lambda_{HN}(x) lambda_{G/N}(xN) for x in the canonical Hall
/// subgroup H, with N = O_pi'(G).
bool lambda_multiplicativity_check(HallContext const &ctx);

// Additive formula ------------------------------------------------------------

/// (1/n^2) sum_{d | n} mu(d) sum_{h in H} lambda(h^d)^(n/d) for the
/// canonical Hall subgroup.
BigRational beta_additive(HallContext const &ctx);
BigRational beta_additive_for(HallContext const &ctx, PermGroup const &h);

/// (1/|A|) sum_{a in A} alpha(a) prod_i chi(h^i)^c_i(a).
BigRational sym_char(SymCharSpec const &spec, CharacterTable const &chi, Permutation const &h);

/// (1/n) sum_{d | n} mu(d) chi(h^d)^(n/d).
BigRational sym_char_cyclic(CharacterTable const &chi, std::uint64_t n, Permutation const &h);

/// Orbits of H on k-tuples of action points, as (1/|H|) sum_h fix(h)^k.
/// H must lie in the acting group. Throws CapExceeded if points^k > cap.
BigInt burnside_orbit_count(PermGroup const &h, FiniteAction const &action, std::uint64_t k,
                            std::uint64_t cap = kDefaultTupleCap);

struct InterpretationCheck {
  BigRational beta;
  BigRational orbit_sum; ///< (1/n) sum_d mu(d) f_{n/d}(H^d)
  bool holds() const { return beta == orbit_sum; }
};

/// Orbit-count form of beta. Throws NotApplicable for non-abelian H.
InterpretationCheck interpretation_check(HallContext const &ctx,
                                         std::uint64_t cap = kDefaultTupleCap);

/// n sum_{1 != d | n} t^(n/d) < t^n. Throws InvalidArgument unless t >= 3, n >= 2.
bool proof_bound_check(std::uint64_t t, std::uint64_t n);

/// (1/n^2) sum_{d | n} mu(d) sum_{g in G} tau(g^d)^(n/d) where tau is the
/// conjugation character of G on its Hall target_pi-subgroups.
BigRational curiosity(PermGroup const &g, PiSet const &target_pi, std::uint64_t n);

} // namespace hallfix

#endif // HALLFIX_VERIFIERS_HPP
