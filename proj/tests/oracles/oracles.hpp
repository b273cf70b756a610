#ifndef HALLFIX_TESTS_ORACLES_HPP
#define HALLFIX_TESTS_ORACLES_HPP

// Brute-force reference implementations. Deliberately naive and independent
// of the library's group algorithms: they only use permutation composition.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "hallfix/permutation.hpp"

namespace oracle {

using hallfix::Permutation;
using ElementSet = std::vector<Permutation>; // sorted, duplicate free

/// Composition straight from image vectors, (a*b)(x) = a(b(x)).
Permutation compose(Permutation const &a, Permutation const &b);

/// Repeated multiplication until nothing new appears.
ElementSet naive_closure(std::vector<Permutation> const &gens, unsigned degree);

/// Every subgroup generated by at most `max_gens` elements of g.
std::set<ElementSet> subgroups_by_subsets(ElementSet const &g, unsigned max_gens = 3);

std::vector<ElementSet> subgroups_of_order(ElementSet const &g, std::uint64_t m);

std::vector<ElementSet> conjugacy_classes(ElementSet const &g);

/// Normal subgroups as unions of conjugacy classes closed under products.
std::set<ElementSet> normal_subgroups_by_class_union(ElementSet const &g);

bool is_normal(ElementSet const &g, ElementSet const &h);

/// Elements of n commuting with x.
ElementSet centralizer_by_commuting(ElementSet const &n, Permutation const &x);

/// Elements of n commuting with every element of s.
ElementSet centralizer_by_commuting(ElementSet const &n, ElementSet const &s);

std::uint64_t order_by_powers(Permutation const &x);

/// Number of subgroups in `halls` containing x.
std::uint64_t lambda_by_membership(std::vector<ElementSet> const &halls, Permutation const &x);

/// Counts gcd(k, n) = 1 for 1 <= k <= n.
std::uint64_t totient_by_gcd(std::uint64_t n);

/// Moebius function from a naive prime count.
int moebius_naive(std::uint64_t n);

/// Monic irreducible polynomials of degree 3 over the 2-element field,
/// by testing every product of lower degree monics.
std::uint64_t irreducible_cubics_f2();

/// Orbits of h on k-tuples of points 0..np-1, by explicit enumeration with
/// union-find. act(g, x) must give the image of x.
template <class Act>
std::uint64_t tuple_orbits_explicit(ElementSet const &h, std::uint32_t np, unsigned k, Act act);

/// Subgroups of g of order m, as the conjugation action table on them:
/// result[i][j] = index of g_i H_j g_i^-1.
std::vector<std::vector<std::uint32_t>> conjugation_table(ElementSet const &g,
                                                          std::vector<ElementSet> const &subs);

/// Cycle lengths of x from the image vector (fixed points included), sorted.
std::vector<unsigned> cycle_lengths(Permutation const &x);

bool contains(ElementSet const &s, Permutation const &x);

} // namespace oracle

#include "oracles_impl.hpp"

#endif
