#include "bu/errors.hpp"
#include "bu/group_rep.hpp"
#include "doctest.h"
#include "grid.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace bu;

TEST_CASE("make_group") {
  CHECK(make_group(2, 0).order() == 2);
  CHECK(make_group(3, 1).order() == 9);
  CHECK(make_group(5, 2).power(2) == 25);
  CHECK_THROWS_AS(make_group(4, 0), InvalidInput);
  CHECK_THROWS_AS(make_group(1, 0), InvalidInput);
  CHECK_THROWS_AS(make_group(2, -1), InvalidInput);
  CHECK_THROWS_AS(make_group(2, 40), InvalidInput);
}

TEST_CASE("make_rep profiles and folding") {
  const auto r = make_rep(make_group(2, 1), {1, 1, 2});
  CHECK(r.profile() == std::vector<std::int64_t>{2, 1});
  CHECK(r.dim() == 3);

  const auto s = make_rep(make_group(3, 0), {1, 2});
  CHECK(s.profile() == std::vector<std::int64_t>{2});

  CHECK_THROWS_AS(make_rep(make_group(2, 1), {4}), InvalidInput);
  CHECK_THROWS_AS(make_rep(make_group(2, 1), {}), InvalidInput);

  const auto folded = make_rep(make_group(2, 1), {-1, 6, 5});
  CHECK(folded.exponents() == std::vector<std::int64_t>{1, 2, 3});
}

TEST_CASE("delta") {
  CHECK(delta(make_rep(make_group(2, 0), {1, 1, 1})) == 3);
  CHECK(delta(rep_from_profile(make_group(3, 1), {2, 1})) == 3);
  CHECK(delta(rep_from_profile(make_group(2, 1), {0, 1})) == 1);
  CHECK_THROWS_AS(delta(make_rep(make_group(2, 2), {2})), ReductionRequired);
}

TEST_CASE("effective_reduction") {
  const auto a = effective_reduction(make_rep(make_group(2, 2), {4}));
  CHECK(a.k == 2);
  CHECK(a.rep == make_rep(make_group(2, 2), {4}));
  CHECK(a.delta == 1);

  const auto b = effective_reduction(make_rep(make_group(2, 2), {2}));
  CHECK(b.k == 1);
  CHECK(b.rep.group().order() == 4);
  CHECK(b.rep.exponents() == std::vector<std::int64_t>{2});
  CHECK(b.delta == 1);

  const auto c = effective_reduction(make_rep(make_group(3, 2), {1, 1}));
  CHECK(c.k == 0);
  CHECK(c.delta == 2);
}

TEST_CASE("profile and delta properties on random representations") {
  std::mt19937_64 rng(1234);
  for (const auto& [p, k] : testing::standard_groups()) {
    const auto g = make_group(p, k);
    for (int trial = 0; trial < 200; ++trial) {
      const auto rep = make_rep(g, testing::random_exponents(rng, g, 8));
      const auto& m = rep.profile();
      CHECK(std::accumulate(m.begin(), m.end(), std::int64_t{0}) == rep.dim());

      const auto red = effective_reduction(rep);
      const auto again = effective_reduction(red.rep);
      CHECK(again.k == red.k);
      CHECK(again.rep == red.rep);
      CHECK(again.delta == red.delta);

      if (rep.has_top_level()) {
        const std::int64_t d = delta(rep);
        CHECK(d >= rep.dim());
        const bool equality_case =
            k == 0 || (m[0] == rep.dim() - 1 && m[k] == 1);
        CHECK((d == rep.dim()) == equality_case);
        CHECK(red.k == k);
        CHECK(red.rep == rep);
      }

      // multiplying by a unit keeps every valuation
      std::vector<std::int64_t> scaled;
      for (std::int64_t t : rep.exponents()) scaled.push_back(t * testing::random_unit(rng, p, g.order()));
      CHECK(make_rep(g, scaled).profile() == m);
    }
  }
}

TEST_CASE("rep_from_profile uses pure powers") {
  const auto r = rep_from_profile(make_group(3, 2), {1, 2, 1});
  CHECK(r.exponents() == std::vector<std::int64_t>{1, 3, 3, 9});
  CHECK(r.weighted_dim() == 1 + 6 + 9);
  CHECK_THROWS_AS(rep_from_profile(make_group(3, 2), {1, 2}), InvalidInput);
}
