#include <doctest.h>

#include <random>

#include "uhitlab/core.hpp"
#include "uhitlab/iso.hpp"
#include "uhitlab/search.hpp"
#include "uhitlab/singular.hpp"
#include "test_util.hpp"

using namespace uhitlab;

namespace {

ClauseSet flipped_dt3() {
  return ClauseSet{{2, 3}, {-1, -2, -3}, {-1, 2, -3}, {-2, 3}, {-3, 1}};
}

ClauseSet full_unit_extension(const ClauseSet& f) {
  return singular_hitting_extensions(f, f.c()).front().extended;
}

}  // namespace

TEST_CASE("singularity profiles") {
  CHECK(singularity_profile(dt3()).nonsingular());
  CHECK(singularity_profile(dt2()).nonsingular());

  SingularityProfile profile = singularity_profile(flipped_dt3());
  CHECK(profile.singular == std::vector<Var>{1});
  CHECK(profile.one_singular.empty());
  CHECK(profile.non_one_singular == std::vector<Var>{1});
  CHECK(profile.nsv == 1);
  CHECK(profile.nsv == profile.nosv + profile.nnosv);

  ClauseSet extended = full_unit_extension(dt3());
  Var x = extended.max_variable();
  CHECK(extended.literal_degree(x) == 1);
  CHECK(extended.literal_degree(-x) == 5);
  SingularityProfile extended_profile = singularity_profile(extended);
  CHECK(extended_profile.singular == std::vector<Var>{x});
}

TEST_CASE("singular DP-reduction") {
  ClauseSet reduced = sdp_reduce(flipped_dt3(), 1);
  CHECK(is_uhit(reduced));
  CHECK(reduced.c() == flipped_dt3().c() - 1);
  CHECK(is_isomorphic(reduced, dt2()));

  CHECK(sdp_reduce(full_unit_extension(dt3()), 4) == dt3());
  CHECK(sdp_reduce(ClauseSet{{1}, {-1, 2}, {-1, -2}}, 1) ==
        ClauseSet{{2}, {-2}});
  CHECK_THROWS_AS(sdp_reduce(dt3(), 1), Error);   // not singular
  CHECK_THROWS_AS(sdp_reduce(dt3(), 9), Error);   // unknown variable
}

TEST_CASE("normal form computation") {
  NormalFormResult at_fixpoint = snf(dt3());
  CHECK(at_fixpoint.normal_form == dt3());
  CHECK(at_fixpoint.singularity_index == 0);
  CHECK(at_fixpoint.reduction_order.empty());

  NormalFormResult from_flip = snf(flipped_dt3());
  CHECK(from_flip.singularity_index == 1);
  CHECK(is_isomorphic(from_flip.normal_form, dt2()));
  CHECK(from_flip.reduction_order == std::vector<Var>{1});

  for (int m = 1; m <= 4; ++m) {
    ClauseSet km = construct_km(m);
    CHECK(singularity_profile(km).nonsingular());
    CHECK(snf(km).normal_form == km);
  }

  CHECK_THROWS_AS(snf(ClauseSet{{1}, {2}}), Error);
}

TEST_CASE("normal form indices match the measure drops") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    ClauseSet f = random_uhit(seed, 5);
    NormalFormResult nf = snf(f);
    CHECK(nf.singularity_index == f.c() - nf.normal_form.c());
    CHECK(nf.singularity_index == f.n() - nf.normal_form.n());
    CHECK(singularity_profile(nf.normal_form).nonsingular());
    CHECK(is_uhit(nf.normal_form));
  }
}

TEST_CASE("confluence on a sample") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    ClauseSet f = random_uhit(seed, 5);
    if (singularity_profile(f).nonsingular()) f = full_unit_extension(f);
    NormalFormResult reference = snf(f);
    for (std::uint64_t round = 0; round < 3; ++round) {
      NormalFormResult other = snf_seeded(f, seed * 17 + round);
      CHECK(other.normal_form == reference.normal_form);
      CHECK(other.singularity_index == reference.singularity_index);
    }
  }
}

TEST_CASE("singular hitting extensions") {
  // Arity 1: exactly the non-strict fs-extensions, one per clause.
  std::vector<SingularExtension> unary = singular_hitting_extensions(dt3(), 1);
  CHECK(unary.size() == 5);
  for (const SingularExtension& e : unary) {
    CHECK(e.witness.c() == 1);
    CHECK(is_uhit(e.extended));
    CHECK(e.extended.c() == 6);
    ClauseSet via_fs =
        fs_extend(dt3(), e.witness[0], dt3().max_variable() + 1).result;
    CHECK(e.extended == via_fs);
  }

  // Arity c: the full singular unit-extension, adding a unit clause.
  std::vector<SingularExtension> full = singular_hitting_extensions(dt3(), 5);
  REQUIRE(full.size() == 1);
  Var x = full.front().extended.max_variable();
  CHECK(x == 4);
  CHECK(full.front().extended.contains(Clause{x}));
  for (const Clause& c : dt3())
    CHECK(full.front().extended.contains(c.with(-x)));

  // Dt3 has no factors strictly between, so no extensions either.
  for (int m = 2; m <= 4; ++m)
    CHECK(singular_hitting_extensions(dt3(), m).empty());

  CHECK_THROWS_AS(singular_hitting_extensions(dt3(), 0), Error);
  CHECK_THROWS_AS(singular_hitting_extensions(dt3(), 6), Error);
  CHECK_THROWS_AS(singular_hitting_extensions(ClauseSet{{1}, {2}}, 1), Error);
}

TEST_CASE("extensions of Dt2 exist at arity 2") {
  std::vector<SingularExtension> pairs = singular_hitting_extensions(dt2(), 2);
  CHECK(pairs.size() == 4);  // one per fs-pair
  for (const SingularExtension& e : pairs) {
    CHECK(is_uhit(e.extended));
    CHECK(e.extended.c() == 5);
    // Reducing the fresh variable undoes the extension.
    CHECK(sdp_reduce(e.extended, 3) == dt2());
  }
}

TEST_CASE("singular tuple selection") {
  // A non-1-singular variable is taken alone.
  CHECK(choose_singular_tuple(flipped_dt3()) == std::vector<Var>{1});
  CHECK(choose_singular_tuple(ClauseSet{{1}, {-1}}) == std::vector<Var>{1});

  // Extending flipped Dt3 at the main clause of its singular variable makes
  // that variable nonsingular of degree 2+2 and leaves a single 1-singular
  // variable whose companion clause carries the degree-2 literal 1.
  ClauseSet f = fs_extend(flipped_dt3(), Clause{-3, 1}, 4).result;
  REQUIRE(is_uhit(f));
  SingularityProfile profile = singularity_profile(f);
  REQUIRE(profile.singular == std::vector<Var>{4});
  REQUIRE(profile.one_singular == std::vector<Var>{4});
  std::vector<Var> tuple = choose_singular_tuple(f);
  CHECK(tuple == std::vector<Var>{4, 1});
  // Eliminating the tuple removes its variables from the singular set; the
  // second variable only turns singular after the first elimination.
  ClauseSet reduced = f;
  for (Var v : tuple) reduced = sdp_reduce(reduced, v);
  SingularityProfile after = singularity_profile(reduced);
  for (Var v : tuple)
    CHECK_FALSE(std::count(after.singular.begin(), after.singular.end(), v));

  CHECK_THROWS_AS(choose_singular_tuple(dt3()), Error);  // nonsingular
}

TEST_CASE("tuple elimination shrinks the singular set in general") {
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    ClauseSet f = random_uhit(seed, 5);
    if (singularity_profile(f).nonsingular()) continue;
    std::vector<Var> tuple = choose_singular_tuple(f);
    REQUIRE(!tuple.empty());
    ClauseSet reduced = f;
    for (Var v : tuple) reduced = sdp_reduce(reduced, v);
    SingularityProfile before = singularity_profile(f);
    SingularityProfile after = singularity_profile(reduced);
    // varsing(after) ⊆ varsing(before) \ tuple
    for (Var v : after.singular) {
      CHECK(std::count(before.singular.begin(), before.singular.end(), v));
      CHECK_FALSE(std::count(tuple.begin(), tuple.end(), v));
    }
  }
}

TEST_CASE("the fs-pair attached to a singular variable") {
  FsPair unit_pair = fs_pair_of_singular(ClauseSet{{1}, {-1}}, 1);
  CHECK(unit_pair.left == Clause{1});
  CHECK(unit_pair.right == Clause{-1});

  FsPair from_flip = fs_pair_of_singular(flipped_dt3(), 1);
  ClauseSet f = flipped_dt3();
  CHECK(from_flip.left ==
        f.clauses_with(1).intersection_of_clauses());
  CHECK(from_flip.right ==
        f.clauses_with(-1).intersection_of_clauses());
  CHECK(from_flip.left.clash_count(from_flip.right) == 1);
  CHECK(from_flip.left.symmetric_difference_size(from_flip.right) == 2);

  ClauseSet extended = full_unit_extension(dt3());
  FsPair ext_pair = fs_pair_of_singular(extended, 4);
  CHECK(ext_pair.left.symmetric_difference_size(ext_pair.right) == 2);

  CHECK_THROWS_AS(fs_pair_of_singular(dt3(), 1), Error);
}

TEST_CASE("double-2 side clauses and unit-extension fs-pair transfer") {
  // A 2-singular variable's side clauses form an fs-pair.
  ClauseSet f = flipped_dt3();
  std::vector<Clause> sides;
  for (const Clause& c : f)
    if (c.contains(-1)) sides.push_back(c);
  REQUIRE(sides.size() == 2);
  CHECK(sides[0].clash_count(sides[1]) == 1);
  CHECK(sides[0].symmetric_difference_size(sides[1]) == 2);

  // Full singular unit-extensions transfer fs-pairs both ways.
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    ClauseSet base = random_uhit(seed, 4);
    if (base == ClauseSet{Clause{}}) continue;
    ClauseSet extended = full_unit_extension(base);
    CHECK(find_fs_pairs(base).empty() == find_fs_pairs(extended).empty());
  }
}

TEST_CASE("non-fs-resolvable deficiency-2 members propagate to the Dt3 class") {
  // Across the enumerated deficiency-2 classes with n <= 4 (singular ones
  // included), the ones without an available fs-resolution are exactly the
  // full singular unit-extension towers over Dt3; unit-clause propagation
  // exposes the base.
  EnumerationTask task{4, 2, false, true};
  int stubborn = 0;
  for (const ClauseSet& f : enumerate_uhit(task)) {
    if (fs_resolvable(f)) continue;
    ++stubborn;
    CHECK(is_isomorphic(unit_propagate(f), dt3()));
  }
  CHECK(stubborn >= 2);  // Dt3 itself and at least its unit-extension

  // The reverse direction: a unit-extension tower is never fs-resolvable.
  ClauseSet tower = dt3();
  for (int i = 0; i < 3; ++i) {
    tower = full_unit_extension(tower);
    CHECK_FALSE(fs_resolvable(tower));
    CHECK(is_isomorphic(unit_propagate(tower), dt3()));
  }
}

TEST_CASE("degree-1 literals forbid degree-1 companions in a shared clause") {
  for (std::uint64_t seed = 200; seed < 230; ++seed) {
    ClauseSet f = random_uhit(seed, 5);
    for (const Clause& c : f)
      for (Lit x : c)
        if (f.literal_degree(x) == 1)
          for (Lit y : c)
            if (y != x) CHECK(f.literal_degree(y) >= 2);
  }
}
