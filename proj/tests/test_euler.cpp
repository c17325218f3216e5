#include "bu/errors.hpp"
#include "bu/euler.hpp"
#include "doctest.h"
#include "grid.hpp"

#include <random>

using namespace bu;

namespace {

using Poly = std::vector<Integer>;

Poly naive_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Poly naive_add(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Integer(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

// (1 - z^{p^l})^{(p-1)p^{k-l}} == -p(1 + (1-z) a) + phi in Z[z], expanded naively.
bool identity_holds(std::int64_t p, std::int64_t k, std::int64_t l, const Poly& a) {
  const std::int64_t step = checked_pow(p, l);
  Poly factor(step + 1, Integer(0));
  factor[0] = 1;
  factor[step] = -1;
  Poly lhs{Integer(1)};
  for (std::int64_t i = 0; i < (p - 1) * checked_pow(p, k - l); ++i) lhs = naive_mul(lhs, factor);

  Poly rhs = a.empty() ? Poly{Integer(0)} : naive_mul(Poly{Integer(1), Integer(-1)}, a);
  rhs = naive_add(rhs, Poly{Integer(1)});
  for (auto& c : rhs) c *= -p;
  Poly phi(static_cast<std::size_t>((p - 1) * checked_pow(p, k) + 1), Integer(0));
  for (std::int64_t i = 0; i < p; ++i) phi[i * checked_pow(p, k)] = 1;
  rhs = naive_add(rhs, phi);
  return trim(lhs) == trim(rhs);
}

CyclicPoly poly(const GroupSpec& g, std::vector<int> c) {
  IntVector v = IntVector::Zero(g.order());
  for (std::size_t i = 0; i < c.size(); ++i) v(static_cast<Index>(i)) = c[i];
  return CyclicPoly(g, v);
}

}  // namespace

TEST_CASE("euler_class examples") {
  const auto g4 = make_group(2, 1);
  CHECK(euler_class(make_rep(g4, {1})) == poly(g4, {1, -1}));
  const auto g2 = make_group(2, 0);
  CHECK(euler_class(make_rep(g2, {1, 1})) == poly(g2, {2, -2}));
  CHECK(euler_class(make_rep(g4, {2})) == poly(g4, {1, 0, -1}));
}

TEST_CASE("euler_class is multiplicative and has zero augmentation") {
  std::mt19937_64 rng(31);
  for (const auto& [p, k] : testing::standard_groups()) {
    const auto g = make_group(p, k);
    for (int trial = 0; trial < 30; ++trial) {
      auto a = testing::random_exponents(rng, g, 5);
      const auto b = testing::random_exponents(rng, g, 5);
      const auto ea = euler_class(make_rep(g, a));
      const auto eb = euler_class(make_rep(g, b));
      a.insert(a.end(), b.begin(), b.end());
      const auto whole = euler_class(make_rep(g, a));
      CHECK(whole == ea * eb);
      const std::int64_t j = std::uniform_int_distribution<std::int64_t>(0, 4)(rng);
      CHECK((whole * binomial_one_minus_z(g, j)).augmentation() == 0);
    }
  }
}

TEST_CASE("lemma41_nonvanishing examples") {
  const auto g2 = make_group(2, 0);
  const auto single = make_rep(g2, {1});
  const auto twice = make_rep(g2, {1, 1});
  for (auto loc : {Locality::integral, Locality::p_local}) {
    CHECK_FALSE(lemma41_nonvanishing({single, 1, 0, loc}));
    CHECK(lemma41_nonvanishing({single, 2, 0, loc}));
    CHECK(lemma41_nonvanishing({twice, 4, 1, loc}));
    CHECK_FALSE(lemma41_nonvanishing({twice, 3, 1, loc}));
  }
  CHECK_THROWS_AS(lemma41_nonvanishing({make_rep(make_group(2, 1), {1}), 3, 0}), ReductionRequired);
  CHECK_THROWS_AS(lemma41_nonvanishing({twice, 0, 0}), InvalidInput);
  CHECK_THROWS_AS(lemma41_nonvanishing({twice, 3, -1}), InvalidInput);
}

TEST_CASE("sharpness_scan examples") {
  const auto g2 = make_group(2, 0);
  const auto twice = make_rep(g2, {1, 1});
  const auto s4 = sharpness_scan(twice, 4, Locality::p_local);
  REQUIRE(s4.j_max);
  CHECK(*s4.j_max == 1);
  CHECK(s4.table == std::vector<bool>{true, true, false, false, false});
  CHECK_FALSE(sharpness_scan(twice, 2, Locality::p_local).j_max);

  const auto s = sharpness_scan(make_rep(make_group(2, 1), {2}), 3, Locality::p_local);
  REQUIRE(s.j_max);
  CHECK(*s.j_max == 1);
}

TEST_CASE("phi_poly examples") {
  CHECK(phi_poly(make_group(2, 0)) == poly(make_group(2, 0), {1, 1}));
  CHECK(phi_poly(make_group(2, 1)) == poly(make_group(2, 1), {1, 0, 1}));
  CHECK(phi_poly(make_group(3, 0)) == poly(make_group(3, 0), {1, 1, 1}));
  for (const auto& [p, k] : testing::standard_groups()) {
    const auto g = make_group(p, k);
    auto x = phi_poly(g);
    x.mul_one_minus_z_power(g.power(k));
    CHECK(x.is_zero());
  }
}

TEST_CASE("a_l identity") {
  CHECK(verify_identity_a(make_group(2, 0), 0) == std::vector<Integer>{-1});
  CHECK(verify_identity_a(make_group(3, 0), 0) == std::vector<Integer>{-1});
  CHECK(verify_identity_a(make_group(2, 1), 1) == std::vector<Integer>{-1, -1});
  CHECK_THROWS_AS(verify_identity_a(make_group(2, 1), 2), InvalidInput);
  CHECK_THROWS_AS(verify_identity_a(make_group(2, 1), -1), InvalidInput);

  for (std::int64_t p : {2, 3, 5}) {
    for (std::int64_t k = 0; k <= 3; ++k) {
      const auto g = make_group(p, k);
      for (std::int64_t l = 0; l <= k; ++l) {
        const auto a = verify_identity_a(g, l);
        CHECK(static_cast<std::int64_t>(a.size()) <= (p - 1) * checked_pow(p, k));
        CHECK(check_identity_a(g, l, a));
        CHECK(identity_holds(p, k, l, a));
        auto wrong = a;
        if (wrong.empty()) wrong.push_back(0);
        wrong[0] += 1;
        CHECK_FALSE(check_identity_a(g, l, wrong));
        CHECK_FALSE(identity_holds(p, k, l, wrong));
      }
    }
  }
}

TEST_CASE("threshold on a small grid, both localities") {
  for (const auto& [p, k] : testing::standard_groups()) {
    const auto g = make_group(p, k);
    QuotientCache cache(g);
    for (const auto& m : testing::profiles_up_to(p, k, 12)) {
      const auto rep = rep_from_profile(g, m);
      const std::int64_t d = delta(rep);
      for (std::int64_t j = 0; j <= 2; ++j) {
        for (std::int64_t n = std::max<std::int64_t>(1, j + d - 1); n <= j + d + 2; ++n) {
          const auto ctx = cache.get(n);
          const bool local = lemma41_nonvanishing({rep, n, j, Locality::p_local}, *ctx);
          const bool integral = lemma41_nonvanishing({rep, n, j, Locality::integral}, *ctx);
          CHECK(local == (n >= j + 1 + d));
          if (n >= j + 1 + d) CHECK(integral);
          if (integral) CHECK(local);
        }
      }
    }
  }
}

TEST_CASE("unit-factor invariance of the p-local verdict") {
  std::mt19937_64 rng(77);
  for (const auto& [p, k] : testing::standard_groups()) {
    const auto g = make_group(p, k);
    QuotientCache cache(g);
    for (const auto& m : testing::profiles_up_to(p, k, 10)) {
      const auto base = rep_from_profile(g, m);
      std::vector<std::int64_t> scaled;
      for (std::int64_t t : base.exponents()) scaled.push_back(t * testing::random_unit(rng, p, g.order()));
      const auto twisted = make_rep(g, scaled);
      const std::int64_t d = delta(base);
      for (std::int64_t j = 0; j <= 2; ++j) {
        for (std::int64_t n : {j + d, j + d + 1}) {
          if (n < 1) continue;
          const auto ctx = cache.get(n);
          CHECK(lemma41_nonvanishing({base, n, j, Locality::p_local}, *ctx) ==
                lemma41_nonvanishing({twisted, n, j, Locality::p_local}, *ctx));
        }
      }
    }
  }
}

TEST_CASE("scan agrees with pointwise queries") {
  const auto g = make_group(3, 1);
  const auto rep = make_rep(g, {1, 2, 3, 6});
  const auto ctx = make_quotient_ctx(g, 9);
  for (auto loc : {Locality::integral, Locality::p_local}) {
    const auto scan = sharpness_scan(rep, ctx, loc);
    REQUIRE(scan.table.size() == 10);
    for (std::int64_t j = 0; j <= 9; ++j)
      CHECK(scan.table[j] == lemma41_nonvanishing({rep, 9, j, loc}, ctx));
  }
}
