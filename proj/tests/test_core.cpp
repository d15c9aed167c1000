#include <doctest.h>

#include <random>

#include "uhitlab/core.hpp"
#include "uhitlab/search.hpp"
#include "test_util.hpp"

using namespace uhitlab;

TEST_CASE("measures of the named instances") {
  Measures dt3_measures = measures(dt3());
  CHECK(dt3_measures.n == 3);
  CHECK(dt3_measures.c == 5);
  CHECK(dt3_measures.delta == 2);

  ClauseSet bottom{Clause{}};
  Measures bottom_measures = measures(bottom);
  CHECK(bottom_measures.n == 0);
  CHECK(bottom_measures.c == 1);
  CHECK(bottom_measures.delta == 1);

  Measures full = measures(full_clause_set(3));
  CHECK(full.n == 3);
  CHECK(full.c == 8);
  CHECK(full.delta == 5);
}

TEST_CASE("hitting condition") {
  CHECK(is_hitting(dt3()));
  CHECK_FALSE(is_hitting(ClauseSet{{1}, {2}}));
  CHECK(is_hitting(ClauseSet{{1, 2}, {-1, -2}}));  // two clashes allowed
  CHECK(is_hitting(ClauseSet{}));
  CHECK(is_hitting(ClauseSet{Clause{}}));
}

TEST_CASE("dyadic sums of the examples") {
  CHECK(dyadic_sum(dt3()).is_one());
  CHECK(dyadic_sum(ClauseSet{{1, 2}, {-1, -2}}) == DyadicSum(1, 1));
  CHECK(dyadic_sum(ClauseSet{}).is_zero());
}

TEST_CASE("uhit detection") {
  CHECK(is_uhit(dt2()));
  CHECK_FALSE(is_uhit(ClauseSet{{1, 2}, {-1, -2}}));
  ClauseSet k2 = construct_km(2);
  CHECK(is_uhit(k2));
  CHECK_FALSE(sat_oracle(k2));
}

TEST_CASE("sat oracle basics") {
  CHECK_FALSE(sat_oracle(dt3()));
  CHECK(sat_oracle(ClauseSet{}));
  CHECK_FALSE(sat_oracle(ClauseSet{Clause{}}));
  CHECK(sat_oracle(ClauseSet{{1, 2}, {-1, -2}}));
  ClauseSet wide{{65, 70}, {-65, -70}};  // beyond the bitmap fast path
  CHECK(sat_oracle(wide));
}

TEST_CASE("oracle bound is enforced") {
  std::vector<Clause> clauses;
  for (Var v = 1; v <= 30; ++v) clauses.push_back(Clause{v});
  ClauseSet wide(clauses);
  CHECK_THROWS_AS(sat_oracle(wide), Error);
  CHECK(sat_oracle(wide, 30));
}

TEST_CASE("logical equivalence") {
  CHECK(logically_equivalent(ClauseSet{{1, 2}, {1, -2}}, ClauseSet{{1}}));
  CHECK(logically_equivalent(dt3(), ClauseSet{Clause{}}));
  CHECK_FALSE(logically_equivalent(ClauseSet{{1}}, ClauseSet{{-1}}));
}

TEST_CASE("irredundancy") {
  CHECK(is_irredundant(dt2()));
  CHECK_FALSE(is_irredundant(ClauseSet{{1}, {1, 2}}));
  CHECK(is_irredundant(ClauseSet{}));
  // Subsets of hitting clause-sets stay irredundant.
  std::mt19937_64 rng(11);
  ClauseSet f = dt3();
  for (int round = 0; round < 8; ++round) {
    std::vector<Clause> subset;
    for (const Clause& c : f)
      if (rng() & 1) subset.push_back(c);
    CHECK(is_irredundant(ClauseSet(subset)));
  }
}

TEST_CASE("combinatorial disjunction") {
  ClauseSet left{{1}};
  ClauseSet right{{2}, {-2}};
  CHECK(combinatorial_or(left, right) == ClauseSet{{1, 2}, {1, -2}});
  // Disjoining with {⊥} is the identity.
  CHECK(combinatorial_or(dt3(), ClauseSet{Clause{}}) == dt3());
  // A(V) as the disjunction of unit pairs.
  ClauseSet a2 = combinatorial_or(ClauseSet{{1}, {-1}}, ClauseSet{{2}, {-2}});
  CHECK(a2 == full_clause_set(2));
  // Clashing pairs drop out.
  CHECK(combinatorial_or(ClauseSet{{1}}, ClauseSet{{-1}}).empty());
}

TEST_CASE("combinatorial disjunction properties") {
  std::mt19937_64 rng(23);
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    ClauseSet f = testing::random_clause_set(rng, 3, 4);
    ClauseSet g = testing::random_clause_set(rng, 3, 4);
    CHECK(combinatorial_or(f, g) == combinatorial_or(g, f));
    ClauseSet h = testing::random_clause_set(rng, 2, 3);
    CHECK(combinatorial_or(f, combinatorial_or(g, h)) ==
          combinatorial_or(combinatorial_or(f, g), h));
  }
  // On disjoint-variable UHIT inputs the disjunction is UHIT again.
  ClauseSet f = dt2();
  ClauseSet g{{3}, {-3, 4}, {-3, -4}};
  REQUIRE(is_uhit(g));
  CHECK(is_uhit(combinatorial_or(f, g)));
}

TEST_CASE("membership in the class is multiplicative under disjunction") {
  // For hitting inputs, shared variables included: the disjunction is in
  // the class exactly when both sides are. Proper subsets of members give
  // the hitting-but-satisfiable side of the equivalence.
  std::mt19937_64 rng(53);
  int negative_cases = 0;
  for (std::uint64_t seed = 80; seed < 100; ++seed) {
    ClauseSet f = random_uhit(seed, 3);
    ClauseSet g = random_uhit(seed + 1000, 3);
    auto maybe_shrink = [&](const ClauseSet& s) {
      if (rng() & 1 || s.c() < 2) return s;
      return s.without_clause(s[rng() % s.c()]);
    };
    ClauseSet left = maybe_shrink(f);
    ClauseSet right = maybe_shrink(g);
    ClauseSet joined = combinatorial_or(left, right);
    CHECK(is_hitting(joined));
    CHECK(is_uhit(joined) == (is_uhit(left) && is_uhit(right)));
    if (!is_uhit(left) || !is_uhit(right)) ++negative_cases;
  }
  CHECK(negative_cases > 0);
}

TEST_CASE("apply_literal follows the assignment rule") {
  // Independent recomputation of the Dt3 projection: drop clauses with the
  // literal, erase its complement elsewhere.
  ClauseSet expected{{-2, -3}, {2}, {-2, 3}};
  ClauseSet projected = apply_literal(dt3(), 1);
  CHECK(projected == expected);
  CHECK_FALSE(sat_oracle(projected));
  CHECK(projected.delta() == 1);

  CHECK(apply_literal(full_clause_set(2), 1) == ClauseSet{{2}, {-2}});
  CHECK(apply_literal(ClauseSet{{1}}, 1) == ClauseSet{});
  CHECK_THROWS_AS(apply_literal(dt3(), 9), Error);
}

TEST_CASE("dyadic criterion agrees with the semantic oracle") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 400; ++round) {
    ClauseSet f = testing::random_clause_set(rng, 4, 6);
    bool hitting = is_hitting(f);
    if (hitting) CHECK(dyadic_sum(f) <= DyadicSum::one());
    CHECK(is_uhit(f) == (hitting && !sat_oracle(f)));
    if (dyadic_sum(f) < DyadicSum::one()) CHECK(sat_oracle(f));
  }
  // Members of the class pass both routes as well.
  for (std::uint64_t seed = 60; seed < 70; ++seed) {
    ClauseSet f = random_uhit(seed, 4);
    CHECK(is_uhit(f));
    CHECK(is_hitting(f));
    CHECK_FALSE(sat_oracle(f));
  }
}

TEST_CASE("uhit members have positive deficiency") {
  std::mt19937_64 rng(37);
  for (int round = 0; round < 300; ++round) {
    ClauseSet f = testing::random_clause_set(rng, 4, 6);
    if (is_uhit(f)) CHECK(f.delta() >= 1);
  }
  for (std::uint64_t seed = 0; seed < 10; ++seed)
    CHECK(random_uhit(seed, 5).delta() >= 1);
}
