#include "uhitlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <ostream>
#include <sstream>

#include "uhitlab/core.hpp"
#include "uhitlab/factor.hpp"
#include "uhitlab/iso.hpp"
#include "uhitlab/search.hpp"
#include "uhitlab/singular.hpp"
#include "uhitlab/transforms.hpp"

namespace uhitlab {

namespace {

// Shared instance pools plus the deficiency-3 bound monitor. Every
// clause-set any criterion constructs or enumerates goes through observe().
class VerifyContext {
 public:
  void observe(const ClauseSet& f) {
    ++observed_;
    if (!delta3_bound_ok(f)) {
      ++violations_;
      if (violation_example_.empty()) violation_example_ = f.to_string();
    }
  }

  std::function<void(const ClauseSet&)> observer() {
    return [this](const ClauseSet& f) { observe(f); };
  }

  long observed() const { return observed_; }
  long violations() const { return violations_; }
  const std::string& violation_example() const { return violation_example_; }

  const std::vector<ClauseSet>& classes_c_at_most_5() {
    if (!classes_c5_) {
      std::vector<ClauseSet> all;
      for (int delta = 1; delta <= 5; ++delta) {
        EnumerationTask task{5 - delta, delta, false, true};
        std::vector<ClauseSet> found = enumerate_uhit(task, observer());
        all.insert(all.end(), found.begin(), found.end());
      }
      classes_c5_ = std::move(all);
    }
    return *classes_c5_;
  }

  const std::vector<ClauseSet>& classes_n4() {
    if (!classes_n4_) {
      std::vector<ClauseSet> all;
      for (int delta = 1; delta <= 3; ++delta) {
        EnumerationTask task{delta == 1 ? 3 : 4, delta, false, true};
        std::vector<ClauseSet> found = enumerate_uhit(task, observer());
        all.insert(all.end(), found.begin(), found.end());
      }
      classes_n4_ = std::move(all);
    }
    return *classes_n4_;
  }

  const std::vector<ClauseSet>& random_singular_pool() {
    if (!random_singular_) {
      std::vector<ClauseSet> pool;
      for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        ClauseSet f = random_uhit(seed, 4 + static_cast<int>(seed % 4));
        observe(f);
        if (singularity_profile(f).nonsingular()) {
          f = singular_hitting_extensions(f, f.c()).front().extended;
          observe(f);
        }
        pool.push_back(std::move(f));
      }
      random_singular_ = std::move(pool);
    }
    return *random_singular_;
  }

 private:
  long observed_ = 0;
  long violations_ = 0;
  std::string violation_example_;
  std::optional<std::vector<ClauseSet>> classes_c5_;
  std::optional<std::vector<ClauseSet>> classes_n4_;
  std::optional<std::vector<ClauseSet>> random_singular_;
};

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& message) {
    if (!condition) {
      ok = false;
      if (!detail.str().empty()) detail << "; ";
      detail << message;
    }
  }

  void note(const std::string& message) {
    if (ok && detail.str().empty()) detail << message;
  }
};

// 1. Exact structure of Dt2 and Dt3.
Check criterion_examples(VerifyContext& ctx) {
  Check check;
  ClauseSet d2 = dt2();
  ClauseSet d3 = dt3();
  ctx.observe(d2);
  ctx.observe(d3);
  check.require(is_uhit(d2) && d2.delta() == 2, "Dt2 must be UHIT, delta 2");
  check.require(is_uhit(d3) && d3.delta() == 2, "Dt3 must be UHIT, delta 2");
  check.require(singularity_profile(d2).nonsingular(), "Dt2 nonsingular");
  check.require(singularity_profile(d3).nonsingular(), "Dt3 nonsingular");
  std::vector<ClauseFactor> d2_factors = enumerate_factors(d2, true);
  check.require(d2_factors.size() == 4,
                "Dt2 must have exactly 4 nontrivial factors, got " +
                    std::to_string(d2_factors.size()));
  for (const ClauseFactor& factor : d2_factors)
    check.require(factor.subset.c() == 2, "Dt2 factors are 2-element");
  check.require(is_clause_irreducible(d3), "Dt3 must be clause-irreducible");
  check.require(!is_clause_irreducible(d2), "Dt2 must be clause-reducible");
  check.note("Dt2: 4 nontrivial factors; Dt3 irreducible");
  return check;
}

// 2. The reference nfs-flip of Dt3 and its normal form.
Check criterion_flip_example(VerifyContext& ctx) {
  Check check;
  ClauseSet d3 = dt3();
  Clause full_clause{1, 2, 3};
  Clause short_clause{-1, 2};
  std::optional<NfsPair> pair;
  for (const NfsPair& p : find_nfs_pairs(d3))
    if ((p.with_side_literal == full_clause &&
         p.with_resolution_literal == short_clause))
      pair = p;
  check.require(pair.has_value(),
                "Dt3 must contain the nfs-pair {1,2,3}, {-1,2}");
  if (!pair) return check;
  ClauseSet flipped = nfs_flip(d3, *pair);
  ctx.observe(flipped);
  ClauseSet expected{{2, 3}, {-1, -2, -3}, {-1, 2, -3}, {-2, 3}, {-3, 1}};
  check.require(flipped == expected,
                "flip result differs from the reference clause-set: got " +
                    flipped.to_string());
  check.require(is_uhit(flipped), "the flip must stay UHIT");
  SingularityProfile profile = singularity_profile(flipped);
  check.require(profile.singular == std::vector<Var>{1} &&
                    flipped.variable_degree(1) == 3,
                "variable 1 must be 2-singular after the flip");
  NormalFormResult nf = snf(flipped);
  check.require(nf.singularity_index == 1, "singularity index must be 1");
  check.require(is_isomorphic(nf.normal_form, dt2()),
                "the normal form must be isomorphic to Dt2");
  check.note("flip matches the reference set; snf isomorphic to Dt2, index 1");
  return check;
}

// 3. The K_m family realizes deficiency m+1 with 4m-1 variables.
Check criterion_km(VerifyContext& ctx) {
  Check check;
  for (int m = 1; m <= 5; ++m) {
    ClauseSet km = construct_km(m);
    ctx.observe(km);
    check.require(is_uhit(km), "K_" + std::to_string(m) + " must be UHIT");
    check.require(singularity_profile(km).nonsingular(),
                  "K_" + std::to_string(m) + " must be nonsingular");
    check.require(km.delta() == m + 1,
                  "K_" + std::to_string(m) + " must have deficiency " +
                      std::to_string(m + 1));
    check.require(km.n() == 4 * m - 1,
                  "K_" + std::to_string(m) + " must have " +
                      std::to_string(4 * m - 1) + " variables");
  }
  check.require(construct_km(1) == dt3(), "K_1 is Dt3");
  check.note("m=1..5 verified; K_2 witnesses maxnhitdef(3) >= 7");
  return check;
}

// 4. Classification of nonsingular deficiency 2 up to n = 4.
Check criterion_delta2_classification(VerifyContext& ctx) {
  Check check;
  EnumerationTask task{4, 2, true, true};
  std::vector<ClauseSet> classes = enumerate_uhit(task, ctx.observer());
  check.require(classes.size() == 2,
                "expected exactly 2 classes, got " +
                    std::to_string(classes.size()));
  int with_n2 = 0, with_n3 = 0, with_n4 = 0;
  for (const ClauseSet& f : classes) {
    if (f.n() == 2) {
      ++with_n2;
      check.require(is_isomorphic(f, dt2()), "the n=2 class must be Dt2");
    } else if (f.n() == 3) {
      ++with_n3;
      check.require(is_isomorphic(f, dt3()), "the n=3 class must be Dt3");
    } else {
      ++with_n4;
    }
  }
  check.require(with_n2 == 1 && with_n3 == 1 && with_n4 == 0,
                "classes must be one at n=2, one at n=3, none at n=4");
  check.note("exactly Dt2 (n=2) and Dt3 (n=3); nothing at n=4");
  return check;
}

// 5. All UHIT with c <= 5: the non-fs-resolvable classes.
Check criterion_c5_classification(VerifyContext& ctx) {
  Check check;
  const std::vector<ClauseSet>& classes = ctx.classes_c_at_most_5();
  std::vector<const ClauseSet*> stubborn;
  for (const ClauseSet& f : classes)
    if (!fs_resolvable(f)) stubborn.push_back(&f);
  check.require(stubborn.size() == 2,
                "expected exactly 2 non-fs-resolvable classes, got " +
                    std::to_string(stubborn.size()));
  ClauseSet bottom{Clause{}};
  int found_bottom = 0, found_dt3 = 0;
  for (const ClauseSet* f : stubborn) {
    if (*f == bottom)
      ++found_bottom;
    else if (is_isomorphic(*f, dt3()))
      ++found_dt3;
  }
  check.require(found_bottom == 1 && found_dt3 == 1,
                "the stubborn classes must be {bottom} and Dt3");
  check.note(std::to_string(classes.size()) +
             " classes with c <= 5; non-fs-resolvable: {bottom} and Dt3");
  return check;
}

// 6. Confluence of singular DP-reduction.
Check criterion_confluence(VerifyContext& ctx) {
  Check check;
  const std::vector<ClauseSet>& pool = ctx.random_singular_pool();
  for (std::size_t i = 0; i < pool.size() && check.ok; ++i) {
    const ClauseSet& f = pool[i];
    NormalFormResult reference = snf(f);
    for (std::uint64_t order = 0; order < 5; ++order) {
      NormalFormResult shuffled = snf_seeded(f, i * 31 + order);
      check.require(shuffled.normal_form == reference.normal_form,
                    "normal forms differ for instance " + std::to_string(i));
      check.require(
          shuffled.singularity_index == reference.singularity_index,
          "singularity index differs for instance " + std::to_string(i));
    }
  }
  check.note("200 singular instances x 5 elimination orders agree");
  return check;
}

// 7. The singularity inequalities plus the variable-bound chain on
// reducible nonsingular instances at deficiency 2 and 3.
Check criterion_inequalities(VerifyContext& ctx) {
  Check check;
  std::vector<ClauseSet> pool = ctx.classes_n4();
  const std::vector<ClauseSet>& randoms = ctx.random_singular_pool();
  pool.insert(pool.end(), randoms.begin(), randoms.end());
  pool.push_back(dt2());
  pool.push_back(dt3());
  for (int m = 1; m <= 3; ++m) pool.push_back(construct_km(m));

  long fs_checked = 0;
  for (const ClauseSet& f : pool) {
    SingularityProfile profile = singularity_profile(f);
    NormalFormResult nf = snf(f);
    check.require(2 * profile.nsv >= nf.singularity_index,
                  "nsv >= singind/2 fails on " + f.to_string());
    check.require(nf.singularity_index <= 2 * profile.nosv + profile.nnosv,
                  "singind <= 2 nosv + nnosv fails on " + f.to_string());
    if (profile.nonsingular()) {
      for (const FsPair& p : find_fs_pairs(f)) {
        if (f.contains(p.resolvent)) continue;
        ClauseSet resolved = fs_resolve(f, p).result;
        ctx.observe(resolved);
        ++fs_checked;
        check.require(snf(resolved).singularity_index <= 3,
                      "post-fs-resolution singind > 3 on " + f.to_string());
      }
    }
    if (!check.ok) break;
  }

  // Variable-bound chain, with maxnhitdef(1) = 0 and maxnhitdef(2) = 3
  // substituted. Nonsingular reducible members at deficiency k: when
  // fs-resolvable (always strictly so without singular variables),
  // n <= maxnhitdef(k-1) + 3; otherwise every nontrivial factorisation
  // obeys n <= maxnhitdef(delta(F0)) + maxnhitdef(delta(G)) + shared + 1.
  auto max_n_hit_def = [](int k) { return k <= 1 ? 0 : 3; };
  long bound_checked = 0;
  std::vector<ClauseSet> chain_pool;
  for (int delta : {2, 3}) {
    EnumerationTask task{5, delta, true, true};
    std::vector<ClauseSet> classes = enumerate_uhit(task, ctx.observer());
    chain_pool.insert(chain_pool.end(), classes.begin(), classes.end());
  }
  chain_pool.push_back(construct_km(2));
  for (const ClauseSet& f : chain_pool) {
    if (is_clause_irreducible(f)) continue;
    int k = f.delta();
    ++bound_checked;
    if (fs_resolvable(f)) {
      check.require(f.n() <= max_n_hit_def(k - 1) + 3,
                    "fs-resolvable bound fails on " + f.to_string());
    } else {
      for (const ClauseFactor& factor : enumerate_factors(f, true)) {
        Factorisation split = factorise(f, factor);
        int d0 = split.cofactor.delta();
        int d1 = split.residual.delta();
        check.require(d0 >= 2 && d1 >= 2 && d0 < k && d1 < k,
                      "part deficiencies out of range on " + f.to_string());
        int shared = static_cast<int>(split.shared_variables.size());
        check.require(
            f.n() <= max_n_hit_def(d0) + max_n_hit_def(d1) + shared + 1,
            "factorisation bound fails on " + f.to_string());
        check.require(f.n() <= 4 * k - 5 - 3 * shared,
                      "closed-form bound fails on " + f.to_string());
      }
    }
    if (!check.ok) break;
  }

  check.note("inequalities hold on " + std::to_string(pool.size()) +
             " instances, " + std::to_string(fs_checked) +
             " fs-resolutions; variable bounds hold on " +
             std::to_string(bound_checked) + " reducible nonsingular members");
  return check;
}

// 8. Factor machinery cross-validation on everything enumerated with n <= 4.
Check criterion_factor_cross_validation(VerifyContext& ctx) {
  Check check;
  const std::vector<ClauseSet>& pool = ctx.classes_n4();
  long subsets_checked = 0;
  for (const ClauseSet& f : pool) {
    int c = f.c();
    // Every nonempty subset: the clash criterion against the brute-force
    // residue oracle.
    std::vector<std::vector<ClauseSet>> factors_by_size(
        static_cast<std::size_t>(c) + 1);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << c); ++mask) {
      std::vector<Clause> subset_clauses;
      for (int i = 0; i < c; ++i)
        if ((mask >> i) & 1)
          subset_clauses.push_back(f[static_cast<std::size_t>(i)]);
      ClauseSet subset(subset_clauses);
      Clause intersection = subset.intersection_of_clauses();
      bool clash_route = true;
      for (const Clause& d : f) {
        if (subset.contains(d)) continue;
        if (!intersection.clashes(d)) clash_route = false;
      }
      std::vector<Clause> residue_clauses;
      for (const Clause& d : subset)
        residue_clauses.push_back(d.without_all(intersection));
      bool oracle_route = !sat_oracle(ClauseSet(residue_clauses));
      ++subsets_checked;
      if (clash_route != oracle_route) {
        check.require(false, "clash and oracle routes disagree on " +
                                 subset.to_string() + " in " + f.to_string());
        break;
      }
      if (clash_route)
        factors_by_size[static_cast<std::size_t>(subset.c())].push_back(subset);
    }
    // Extension witnesses coincide with the factors of matching size.
    for (int m = 1; m <= c && check.ok; ++m) {
      std::vector<SingularExtension> extensions =
          singular_hitting_extensions(f, m);
      std::vector<ClauseSet> witnesses;
      for (const SingularExtension& e : extensions) {
        witnesses.push_back(e.witness);
        check.require(is_uhit(e.extended) && e.extended.c() == c + 1,
                      "extension must be UHIT with one extra clause");
        ctx.observe(e.extended);
      }
      std::vector<ClauseSet> expected = factors_by_size[static_cast<std::size_t>(m)];
      auto by_order = [](const ClauseSet& a, const ClauseSet& b) {
        return clause_set_less(a, b);
      };
      std::sort(witnesses.begin(), witnesses.end(), by_order);
      std::sort(expected.begin(), expected.end(), by_order);
      check.require(witnesses == expected,
                    "extension witnesses differ from size-" +
                        std::to_string(m) + " factors in " + f.to_string());
    }
    if (!check.ok) break;
  }
  check.note(std::to_string(subsets_checked) + " subsets cross-validated on " +
             std::to_string(pool.size()) + " instances");
  return check;
}

// 9. Every reachable clause-irreducible instance at deficiency 2 or 3 is
// flip-reducible.
Check criterion_nfs_emptiness(VerifyContext& ctx) {
  Check check;
  long searched = 0;
  auto probe = [&](const ClauseSet& f, const std::string& origin) {
    if (!check.ok) return;
    FlipPath path = nfs_search(f, SearchBounds{8, 1'000'000}, ctx.observer());
    ++searched;
    check.require(path.outcome == FlipOutcome::FoundReducible,
                  "flip search inconclusive on " + origin + " instance " +
                      f.to_string());
    for (const FlipStep& step : path.steps)
      check.require(is_uhit(step.result), "flip path left the class");
  };

  // Dt3's class is reducible within one flip.
  FlipPath d3_path = nfs_search(dt3(), SearchBounds{8, 1'000'000}, ctx.observer());
  check.require(d3_path.outcome == FlipOutcome::FoundReducible &&
                    d3_path.steps.size() == 1,
                "Dt3 must be flip-reducible in one step");

  long irreducible_enumerated = 0;
  for (int delta : {2, 3}) {
    EnumerationTask task{5, delta, false, true};
    std::vector<ClauseSet> classes = enumerate_uhit(task, ctx.observer());
    for (const ClauseSet& f : classes) {
      if (!is_clause_irreducible(f)) continue;
      ++irreducible_enumerated;
      probe(f, "enumerated");
      if (!check.ok) return check;
    }
  }

  long irreducible_random = 0;
  for (std::uint64_t seed = 1000; seed < 1500; ++seed) {
    ClauseSet raw = random_uhit(seed, 3 + static_cast<int>(seed % 5));
    ctx.observe(raw);
    ClauseSet core = snf(raw).normal_form;
    ctx.observe(core);
    if (core.delta() != 2 && core.delta() != 3) continue;
    if (!is_clause_irreducible(core)) continue;
    ++irreducible_random;
    probe(core, "random");
    if (!check.ok) return check;
  }
  check.note("flip-reducibility confirmed on " +
             std::to_string(irreducible_enumerated) + " enumerated + " +
             std::to_string(irreducible_random) +
             " random irreducible instances (" + std::to_string(searched) +
             " searches)");
  return check;
}

// 10. The deficiency-3 bound monitor stands in for the n = 8 search.
Check criterion_delta3_monitor(VerifyContext& ctx) {
  Check check;
  check.require(ctx.observed() > 0, "monitor saw no instances");
  check.require(ctx.violations() == 0,
                "bound n <= 7 violated by " + ctx.violation_example());
  check.note("n <= 7 held on every nonsingular delta-3 instance among " +
             std::to_string(ctx.observed()) +
             " observed; the n = 8 exhaustive search itself stays out of "
             "reach at desk scale");
  return check;
}

// 11. The dyadic criterion against the semantic oracle.
Check criterion_oracle_independence(VerifyContext& ctx) {
  Check check;
  const std::vector<ClauseSet>& classes = ctx.classes_c_at_most_5();
  for (const ClauseSet& f : classes) {
    bool via_dyadic = is_uhit(f);
    bool via_oracle = is_hitting(f) && !sat_oracle(f);
    check.require(via_dyadic == via_oracle && via_dyadic,
                  "criteria disagree on " + f.to_string());
  }
  check.note("dyadic and semantic routes agree on all " +
             std::to_string(classes.size()) + " enumerated instances");
  return check;
}

}  // namespace

std::vector<CriterionResult> run_verification(VerifySuite suite,
                                              std::ostream* progress) {
  VerifyContext ctx;
  struct Entry {
    int id;
    const char* name;
    std::function<Check(VerifyContext&)> run;
  };
  std::vector<Entry> criteria = {
      {1, "exact Dt2/Dt3 examples", criterion_examples},
      {2, "nfs-flip example and its normal form", criterion_flip_example},
      {3, "K_m family measures", criterion_km},
      {4, "deficiency-2 classification (n <= 4)",
       criterion_delta2_classification},
      {5, "c <= 5 classification", criterion_c5_classification},
      {6, "confluence of singular DP-reduction", criterion_confluence},
      {7, "singularity inequalities", criterion_inequalities},
      {8, "factor machinery cross-validation",
       criterion_factor_cross_validation},
      {9, "nfs-irreducibility emptiness at deficiency <= 3",
       criterion_nfs_emptiness},
      {10, "deficiency-3 variable-bound monitor", criterion_delta3_monitor},
      {11, "oracle independence", criterion_oracle_independence},
  };
  if (suite == VerifySuite::PaperCore)
    criteria.erase(criteria.begin() + 3, criteria.end());

  std::vector<CriterionResult> results;
  for (const Entry& entry : criteria) {
    auto start = std::chrono::steady_clock::now();
    Check check = entry.run(ctx);
    auto stop = std::chrono::steady_clock::now();
    CriterionResult result;
    result.id = entry.id;
    result.name = entry.name;
    result.passed = check.ok;
    result.detail = check.detail.str();
    result.seconds = std::chrono::duration<double>(stop - start).count();
    if (progress) {
      (*progress) << (result.passed ? "PASS" : "FAIL") << " criterion "
                  << result.id << ": " << result.name;
      if (!result.detail.empty()) (*progress) << " — " << result.detail;
      (*progress) << " [" << result.seconds << "s]" << std::endl;
    }
    results.push_back(std::move(result));
  }
  return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const CriterionResult& result : results)
    if (!result.passed) return false;
  return true;
}

}  // namespace uhitlab
