#include "doctest.h"

#include "hallfix/characters.hpp"
#include "hallfix/errors.hpp"
#include "hallfix/verifiers.hpp"
#include "helpers.hpp"

using namespace hallfix;
using testing::builtin;

namespace {

SymCharSpec s2_spec(bool alternating)
{
  auto s2 = close({parse_permutation("(1 2)", 2)}, 2);
  return SymCharSpec(alternating ? sign_character(s2) : trivial_character(s2));
}

} // namespace

TEST_CASE("class function validation")
{
  auto s3 = builtin("S3");
  std::vector<BigRational> v(s3.order(), 1);
  CHECK_NOTHROW(CharacterTable(s3, v));
  v[1] = 2;
  CHECK_THROWS_AS(CharacterTable(s3, v), InvalidArgument);
  CHECK_THROWS_AS(CharacterTable(s3, std::vector<BigRational>(2, 1)), InvalidArgument);
}

TEST_CASE("standard characters")
{
  auto a5 = builtin("A5");
  auto conj = conjugation_character(a5);
  CHECK(conj(a5.element(0)) == 60);
  for (auto const &g : a5.elements())
    CHECK(conj(g) == oracle::centralizer_by_commuting(a5.elements(), g).size());
  CHECK(conj.trivial_multiplicity() == 5);   // number of classes

  auto ctx = build_hall_context(a5, PiSet{2});
  auto lam = lambda_character(ctx, ctx.canonical_hall());
  for (auto const &h : ctx.canonical_hall().elements())
    CHECK(lam(h) == ctx.lambda(h));
  CHECK(trivial_character(a5).trivial_multiplicity() == 1);
  auto perm = permutation_character(natural_action(a5));
  CHECK(perm.trivial_multiplicity() == 1);
  CHECK(sign_character(builtin("S4")).trivial_multiplicity() == 0);
}

TEST_CASE("cycle counts of the symmetrizing group")
{
  auto spec = SymCharSpec(trivial_character(builtin("S4")));
  CHECK(spec.n() == 4u);
  for (std::size_t a = 0; a < spec.group().order(); ++a) {
    auto const &c = spec.cycle_counts(a);
    unsigned total = 0;
    for (unsigned i = 1; i < c.size(); ++i)
      total += i * c[i];
    CHECK(total == 4u);
  }
}

TEST_CASE("S2 symmetric and alternating squares on every corpus group")
{
  auto sym = s2_spec(false);
  auto alt = s2_spec(true);
  for (auto const &e : builtin_corpus()) {
    CAPTURE(e.name);
    auto g = e.group();
    auto chi = conjugation_character(g);
    for (auto const &h : g.elements()) {
      auto s = sym_char(sym, chi, h);
      auto a = sym_char(alt, chi, h);
      CHECK(s + a == chi(h) * chi(h));
      CHECK(s - a == chi(h * h));
    }
  }
}

TEST_CASE("trivial character gives the alpha multiplicity")
{
  auto g = builtin("S3");
  auto one = trivial_character(g);
  auto spec = SymCharSpec(sign_character(builtin("S4")));
  for (auto const &h : g.elements())
    CHECK(sym_char(spec, one, h) == 0);
  auto spec2 = SymCharSpec(trivial_character(builtin("S4")));
  for (auto const &h : g.elements())
    CHECK(sym_char(spec2, one, h) == 1);
}

TEST_CASE("cyclic specialisation")
{
  auto g = builtin("S3");
  auto one = trivial_character(g);
  for (std::uint64_t n = 2; n <= 8; ++n)
    for (auto const &h : g.elements())
      CHECK(sym_char_cyclic(one, n, h) == 0);

  // t = 2, n = 3: necklace count equals the irreducible cubics over F2
  auto c2 = close({parse_permutation("(1 2)", 2)}, 2);
  auto reg = permutation_character(natural_action(c2));
  CHECK(reg(c2.element(0)) == 2);
  CHECK(sym_char_cyclic(reg, 3, c2.element(0)) == 2);
  CHECK(sym_char_cyclic(reg, 3, c2.element(0)) == oracle::irreducible_cubics_f2());
}

TEST_CASE("averaging the cyclic specialisation over H gives beta")
{
  for (auto const &e : builtin_corpus()) {
    auto g = e.group();
    for (auto const &pi : e.scan_pis()) {
      CAPTURE(e.name);
      CAPTURE(pi.to_string());
      HallContext const *ctxp = nullptr;
      std::optional<HallContext> ctx;
      try {
        ctx.emplace(build_hall_context(g, pi));
        ctxp = &*ctx;
      } catch (NoHallSubgroup const &) {
        continue;
      }
      auto const &h = ctxp->canonical_hall();
      auto lam = lambda_character(*ctxp, h);
      BigRational sum = 0;
      for (auto const &x : h.elements())
        sum += sym_char_cyclic(lam, ctxp->n(), x);
      sum /= static_cast<unsigned long>(h.order());
      CHECK(sum == beta_additive(*ctxp));
    }
  }
}
