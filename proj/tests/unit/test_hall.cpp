#include "doctest.h"

#include <numeric>
#include <set>

#include "hallfix/errors.hpp"
#include "hallfix/hall.hpp"
#include "helpers.hpp"

using namespace hallfix;
using testing::builtin;

TEST_CASE("pi parts")
{
  CHECK(pi_part(60, PiSet{2}) == 4u);
  CHECK(pi_part(60, PiSet{2, 3}) == 12u);
  CHECK(pi_part(60, PiSet{7}) == 1u);
  CHECK(pi_part(168, PiSet{2, 7}) == 56u);
}

TEST_CASE("Hall subgroups and lambda against oracles")
{
  for (auto const &e : builtin_corpus()) {
    if (e.order > 168)
      continue;
    auto g = e.group();
    auto all = oracle::subgroups_by_subsets(g.elements());
    for (auto const &pi : e.scan_pis()) {
      CAPTURE(e.name);
      CAPTURE(pi.to_string());
      auto n = pi_part(g.order(), pi);
      std::vector<oracle::ElementSet> want;
      for (auto const &s : all)
        if (s.size() == n)
          want.push_back(s);
      if (want.empty()) {
        CHECK_THROWS_AS(build_hall_context(g, pi), NoHallSubgroup);
        continue;
      }
      auto ctx = build_hall_context(g, pi);
      CHECK(ctx.n() == n);
      REQUIRE(ctx.t() == want.size());
      for (std::size_t i = 0; i < want.size(); ++i)
        CHECK(ctx.halls()[i].elements() == want[i]);

      for (auto const &x : g.elements()) {
        auto ord = oracle::order_by_powers(x);
        bool is_pi = pi.covers(ord);
        CHECK(ctx.is_pi_element(x) == is_pi);
        if (!is_pi) {
          CHECK_THROWS_AS(ctx.lambda(x), InvalidArgument);
          continue;
        }
        auto lam = ctx.lambda(x);
        CHECK(lam == oracle::lambda_by_membership(want, x));
        // lambda depends only on <x>
        for (std::uint64_t k = 2; k < ord; ++k)
          if (std::gcd(k, ord) == 1)
            CHECK(ctx.lambda(x.pow(static_cast<std::int64_t>(k))) == lam);
      }

      // t >= 3 whenever H is not normal; t = 1 exactly when it is
      bool normal = oracle::is_normal(g.elements(), want.front());
      CHECK((ctx.t() == 1) == normal);
      if (!normal)
        CHECK(ctx.t() >= 3u);

      // sum_{h in H} lambda(h) = |H| * (H-orbits on the Hall subgroups)
      auto const &h = ctx.canonical_hall();
      std::uint64_t sum = 0;
      for (auto const &x : h.elements())
        sum += ctx.lambda(x);
      auto const &act = ctx.hall_action();
      auto orbits = oracle::tuple_orbits_explicit(
        h.elements(), static_cast<std::uint32_t>(act.num_points()), 1,
        [&](Permutation const &y, std::uint32_t p) { return act.act(y, p); });
      CHECK(sum == h.order() * orbits);
    }
  }
}

TEST_CASE("known Hall data of the corpus")
{
  for (auto const &e : builtin_corpus()) {
    auto g = e.group();
    for (auto const &kh : e.known_halls) {
      CAPTURE(e.name);
      CAPTURE(kh.pi.to_string());
      auto ctx = build_hall_context(g, kh.pi);
      CHECK(ctx.n() == kh.order);
      CHECK(ctx.t() == kh.count);
    }
  }
}

TEST_CASE("lambda reports")
{
  auto ctx = build_hall_context(builtin("A5"), PiSet{2});
  CHECK(ctx.t() == 5u);
  auto text = lambda_report_text(ctx);
  CHECK(text.rfind("element () order 1 lambda 5\n", 0) == 0);
  CHECK(text.find("order 2 lambda 1\n") != std::string::npos);
  // 1 identity + 15 involutions
  CHECK(std::count(text.begin(), text.end(), '\n') == 16);
  auto json = lambda_report_json(ctx);
  CHECK(json.find("{\"element\":\"()\",\"order\":1,\"lambda\":5}") != std::string::npos);
  CHECK(lambda_report_json(ctx) == json);
}

TEST_CASE("missing Hall subgroups")
{
  CHECK_THROWS_AS(build_hall_context(builtin("A5"), PiSet{2, 5}), NoHallSubgroup);
  CHECK_THROWS_AS(build_hall_context(builtin("A5"), PiSet{3, 5}), NoHallSubgroup);
  auto ctx = build_hall_context(builtin("A5"), PiSet{7});
  CHECK(ctx.n() == 1u);
  CHECK(ctx.t() == 1u);
}
