#include <doctest.h>

#include <random>

#include "uhitlab/core.hpp"
#include "uhitlab/factor.hpp"
#include "uhitlab/iso.hpp"
#include "uhitlab/search.hpp"
#include "uhitlab/singular.hpp"
#include "test_util.hpp"

using namespace uhitlab;

TEST_CASE("pointed combinatorial disjunction") {
  Clause pivot{1, 2};
  CHECK(pointed_or(dt2(), pivot, ClauseSet{Clause{}}) == dt2());
  CHECK(pointed_or(dt2(), pivot, ClauseSet{}) == dt2().without_clause(pivot));
  ClauseSet g{{5}, {-5}};
  CHECK(pointed_or(ClauseSet{Clause{}}, Clause{}, g) == g);
  CHECK_THROWS_AS(pointed_or(dt2(), Clause{7}, g), Error);
}

TEST_CASE("clause-factor decision") {
  // The 2-subsets of Dt2 with exactly one clash are factors.
  ClauseSet pair{{1, 2}, {-1, 2}};
  std::optional<ClauseFactor> factor = is_clause_factor(dt2(), pair);
  REQUIRE(factor.has_value());
  CHECK(factor->intersection == Clause{2});
  CHECK(factor->residue == ClauseSet{{1}, {-1}});
  CHECK_FALSE(factor->trivial);

  // Singletons are trivial factors with residue {⊥}.
  std::optional<ClauseFactor> singleton =
      is_clause_factor(dt2(), ClauseSet{Clause{1, 2}});
  REQUIRE(singleton.has_value());
  CHECK(singleton->trivial);
  CHECK(singleton->residue == ClauseSet{Clause{}});

  // No 2-subset of Dt3 qualifies.
  ClauseSet d3 = dt3();
  for (std::size_t i = 0; i < d3.clauses().size(); ++i)
    for (std::size_t j = i + 1; j < d3.clauses().size(); ++j)
      CHECK_FALSE(
          is_clause_factor(d3, ClauseSet{d3[i], d3[j]}).has_value());

  CHECK_THROWS_AS(is_clause_factor(dt2(), ClauseSet{}), Error);
  CHECK_THROWS_AS(is_clause_factor(dt2(), ClauseSet{Clause{9}}), Error);
}

TEST_CASE("factor decision works on general clause-sets via the oracle") {
  // Satisfiable set equivalent to a clause: a factor of itself, nontrivial.
  ClauseSet f{{1, 2}, {1, -2}};
  std::optional<ClauseFactor> whole = is_clause_factor(f, f);
  REQUIRE(whole.has_value());
  CHECK(whole->intersection == Clause{1});
  CHECK_FALSE(whole->trivial);

  ClauseSet not_factor{{1, 2}, {2, 3}};
  CHECK_FALSE(is_clause_factor(not_factor, not_factor).has_value());
}

TEST_CASE("factor enumeration on the named instances") {
  std::vector<ClauseFactor> dt2_factors = enumerate_factors(dt2(), true);
  CHECK(dt2_factors.size() == 4);
  for (const ClauseFactor& factor : dt2_factors) {
    CHECK(factor.subset.c() == 2);
    CHECK_FALSE(factor.trivial);
    CHECK(is_isomorphic(factor.residue, ClauseSet{{1}, {-1}}));
  }

  CHECK(enumerate_factors(dt3(), true).empty());

  // With trivial factors included: c singletons plus the set itself.
  std::vector<ClauseFactor> all = enumerate_factors(dt3(), false);
  CHECK(all.size() == 6);
  for (const ClauseFactor& factor : all) CHECK(factor.trivial);
}

TEST_CASE("singular and full variables yield factors") {
  ClauseSet flipped{{2, 3}, {-1, -2, -3}, {-1, 2, -3}, {-2, 3}, {-3, 1}};
  REQUIRE(is_uhit(flipped));
  std::vector<ClauseFactor> factors = enumerate_factors(flipped, false);
  auto contains_subset = [&](const ClauseSet& s) {
    for (const ClauseFactor& factor : factors)
      if (factor.subset == s) return true;
    return false;
  };
  CHECK(contains_subset(flipped.clauses_with(1)));
  CHECK(contains_subset(flipped.clauses_with(-1)));
  CHECK(contains_subset(
      flipped.clauses_with(1).set_union(flipped.clauses_with(-1))));

  // A full variable in A(2): both literal sides and the whole set.
  ClauseSet a2 = full_clause_set(2);
  std::vector<ClauseFactor> a2_factors = enumerate_factors(a2, false);
  bool pos_side = false, neg_side = false;
  for (const ClauseFactor& factor : a2_factors) {
    if (factor.subset == a2.clauses_with(1)) pos_side = true;
    if (factor.subset == a2.clauses_with(-1)) neg_side = true;
  }
  CHECK(pos_side);
  CHECK(neg_side);
}

TEST_CASE("factor enumeration agrees with the subset brute force") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    ClauseSet f = random_uhit(seed, 4);
    if (f.c() > 10) continue;
    // Reference: test every nonempty subset directly.
    std::vector<ClauseSet> expected;
    int c = f.c();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << c); ++mask) {
      std::vector<Clause> clauses;
      for (int i = 0; i < c; ++i)
        if ((mask >> i) & 1) clauses.push_back(f[static_cast<std::size_t>(i)]);
      ClauseSet subset(clauses);
      std::optional<ClauseFactor> factor = is_clause_factor(f, subset);
      if (factor && !factor->trivial) expected.push_back(subset);
    }
    std::sort(expected.begin(), expected.end(), clause_set_less);
    std::vector<ClauseFactor> produced = enumerate_factors(f, true);
    std::vector<ClauseSet> produced_subsets;
    for (const ClauseFactor& factor : produced)
      produced_subsets.push_back(factor.subset);
    std::sort(produced_subsets.begin(), produced_subsets.end(),
              clause_set_less);
    CHECK(produced_subsets == expected);
    CHECK(has_nontrivial_factor(f) == !expected.empty());
    CHECK(is_clause_irreducible(f) == expected.empty());
  }
}

TEST_CASE("irreducibility of the named instances") {
  CHECK(is_clause_irreducible(dt3()));
  CHECK_FALSE(is_clause_irreducible(dt2()));
  CHECK(is_clause_irreducible(ClauseSet{{1}, {-1}}));
  CHECK(is_clause_irreducible(ClauseSet{Clause{}}));
  CHECK_FALSE(is_clause_irreducible(construct_km(2)));
  CHECK_THROWS_AS(is_clause_irreducible(ClauseSet{{1}, {2}}), Error);
}

TEST_CASE("irreducible sets with special structure are the unit pair") {
  // Among enumerated classes: irreducible plus singular variable, full
  // variable, fs-pair or unit clause forces the A_1 pattern.
  for (int delta = 1; delta <= 3; ++delta) {
    EnumerationTask task{delta == 1 ? 3 : 4, delta, false, true};
    for (const ClauseSet& f : enumerate_uhit(task)) {
      if (!is_clause_irreducible(f)) continue;
      bool special = !singularity_profile(f).nonsingular() ||
                     !find_fs_pairs(f).empty();
      for (const Clause& c : f)
        if (c.size() == 1) special = true;
      for (Var v : f.variables())
        if (f.variable_degree(v) == f.c()) special = true;
      if (special)
        CHECK(is_isomorphic(f, ClauseSet{{1}, {-1}}));
    }
  }
}

TEST_CASE("factorisation of a Dt2 factor") {
  std::optional<ClauseFactor> factor =
      is_clause_factor(dt2(), ClauseSet{{1, 2}, {-1, 2}});
  REQUIRE(factor.has_value());
  Factorisation split = factorise(dt2(), *factor);
  CHECK(split.cofactor == ClauseSet{{2}, {-1, -2}, {1, -2}});
  CHECK(split.pivot == Clause{2});
  CHECK(is_isomorphic(split.residual, ClauseSet{{1}, {-1}}));
  CHECK(pointed_or(split.cofactor, split.pivot, split.residual) == dt2());
  CHECK(is_uhit(split.cofactor));
  CHECK(is_uhit(split.residual));

  // Trivial singleton: cofactor is the whole set, residual {⊥}.
  std::optional<ClauseFactor> singleton =
      is_clause_factor(dt2(), ClauseSet{Clause{1, 2}});
  REQUIRE(singleton.has_value());
  Factorisation trivial_split = factorise(dt2(), *singleton);
  CHECK(trivial_split.cofactor == dt2());
  CHECK(trivial_split.residual == ClauseSet{Clause{}});

  ClauseFactor bogus;
  bogus.subset = ClauseSet{{1, 2}, {-1, -2}};
  bogus.intersection = Clause{};
  CHECK_THROWS_AS(factorise(dt2(), bogus), Error);
}

TEST_CASE("factorising K_2 recovers a Dt3 block") {
  ClauseSet k2 = construct_km(2);
  // The negative selector side holds the fresh Dt3 copy.
  ClauseSet side = k2.clauses_with(-7);
  std::optional<ClauseFactor> factor = is_clause_factor(k2, side);
  REQUIRE(factor.has_value());
  Factorisation split = factorise(k2, *factor);
  CHECK(split.pivot == Clause{-7});
  CHECK(is_isomorphic(split.residual, dt3()));
  CHECK(is_uhit(split.cofactor));
}

TEST_CASE("deficiency identity of factorisations") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    ClauseSet f = random_uhit(seed, 4);
    if (f.c() > 9) continue;
    for (const ClauseFactor& factor : enumerate_factors(f, false)) {
      Factorisation split = factorise(f, factor);
      int shared = static_cast<int>(split.shared_variables.size());
      CHECK(f.delta() == split.cofactor.delta() + split.residual.delta() - 1 +
                             shared);
      CHECK(pointed_or(split.cofactor, split.pivot, split.residual) == f);
      // Mutual deficiency bounds inside minimal unsatisfiability.
      CHECK(split.cofactor.delta() >= 1);
      CHECK(split.cofactor.delta() <= f.delta());
      CHECK(split.residual.delta() >= 1);
      CHECK(split.residual.delta() <= f.delta());
    }
  }
}

TEST_CASE("nontrivial factorisations exist exactly for reducible sets") {
  for (std::uint64_t seed = 30; seed <= 50; ++seed) {
    ClauseSet f = random_uhit(seed, 4);
    if (f.c() > 9) continue;
    bool reducible = has_nontrivial_factor(f);
    bool found = false;
    for (const ClauseFactor& factor : enumerate_factors(f, true)) {
      Factorisation split = factorise(f, factor);
      if (!(split.cofactor == ClauseSet{Clause{}}) &&
          !(split.residual == ClauseSet{Clause{}}))
        found = true;
    }
    CHECK(found == reducible);
  }
}

TEST_CASE("factorisations of nonsingular non-resolvable members bound nsv") {
  // Without an available (strict) fs-resolution, the factorisation parts
  // carry almost no singular variables: nsv(F0) <= shared + 1 and
  // nsv(G) <= shared; parts also lose deficiency strictly.
  std::vector<ClauseSet> pool = {construct_km(2), construct_km(3)};
  for (int delta : {2, 3}) {
    EnumerationTask task{4, delta, true, true};
    for (const ClauseSet& f : enumerate_uhit(task)) pool.push_back(f);
  }
  int factorisations = 0;
  for (const ClauseSet& f : pool) {
    if (!singularity_profile(f).nonsingular()) continue;
    if (is_clause_irreducible(f)) continue;
    bool strictly_resolvable = fs_resolvable(f);
    for (const ClauseFactor& factor : enumerate_factors(f, true)) {
      Factorisation split = factorise(f, factor);
      int shared = static_cast<int>(split.shared_variables.size());
      ++factorisations;
      CHECK(split.cofactor.delta() < f.delta());
      CHECK(split.residual.delta() < f.delta());
      if (!strictly_resolvable) {
        CHECK(singularity_profile(split.cofactor).nsv <= shared + 1);
        CHECK(singularity_profile(split.residual).nsv <= shared);
        CHECK(shared + 1 <= f.delta());
      }
    }
  }
  CHECK(factorisations > 0);
}

TEST_CASE("membership transfers through pointed disjunction both ways") {
  // UHIT parts with the factorisation side conditions assemble to a UHIT
  // whole; a satisfiable residual breaks membership.
  ClauseSet f0{{1}, {-1, 2}, {-1, -2}};
  REQUIRE(is_uhit(f0));
  ClauseSet g{{5}, {-5, 6}, {-5, -6}};
  ClauseSet assembled = pointed_or(f0, Clause{1}, g);
  CHECK(is_uhit(assembled));
  // Deficiency composes: delta(F0) + delta(G) - 1 + |shared variables|.
  CHECK(assembled.delta() == f0.delta() + g.delta() - 1 + 0);

  ClauseSet satisfiable_g{{5}, {-5, 6}};
  ClauseSet broken = pointed_or(f0, Clause{1}, satisfiable_g);
  CHECK_FALSE(is_uhit(broken));
}

TEST_CASE("clause equivalence detection") {
  CHECK(clause_equivalent(ClauseSet{{1, 2}, {1, -2}}) == Clause{1});
  // {1} disjoined with an unsatisfiable block is equivalent to {1}.
  ClauseSet g{{5}, {-5, 6}, {-5, -6}};
  REQUIRE(is_uhit(g));
  ClauseSet composed = combinatorial_or(ClauseSet{{1}}, g);
  CHECK(clause_equivalent(composed) == Clause{1});
  CHECK_FALSE(clause_equivalent(ClauseSet{{1}, {2}}).has_value());
  CHECK_FALSE(clause_equivalent(ClauseSet{}).has_value());
  // Oracle route agreement.
  std::mt19937_64 rng(47);
  for (int round = 0; round < 60; ++round) {
    ClauseSet f = testing::random_clause_set(rng, 3, 4);
    std::optional<Clause> equivalent = clause_equivalent(f);
    if (equivalent)
      CHECK(logically_equivalent(f, ClauseSet{*equivalent}));
    else if (!f.empty())
      CHECK_FALSE(logically_equivalent(f, ClauseSet{f.intersection_of_clauses()}));
  }
}

TEST_CASE("recursive decomposition reaches irreducible leaves") {
  std::vector<ClauseSet> leaves = irreducible_decomposition(construct_km(2));
  CHECK(leaves.size() >= 2);
  for (const ClauseSet& leaf : leaves) CHECK(is_clause_irreducible(leaf));
  CHECK(irreducible_decomposition(dt3()).size() == 1);
}
