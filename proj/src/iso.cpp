#include "uhitlab/iso.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_map>

namespace uhitlab {

namespace {

bool clause_seq_less(const std::vector<Clause>& a,
                     const std::vector<Clause>& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (clause_less(a[i], b[i])) return true;
    if (clause_less(b[i], a[i])) return false;
  }
  return a.size() < b.size();
}

// Branch-and-bound search for the least image of a densely labeled
// clause-set. Image clauses are fixed position by position; at each
// position only source clauses achieving the least completion image are
// branched, over every assignment of their unmapped variables to the
// smallest free targets. The sorted image sequence grows monotonically, so
// fixing the least achievable clause at each position is exhaustive.
class MinImageSearch {
 public:
  MinImageSearch(const ClauseSet& f, bool stop_at_improvement)
      : n_(f.n()), stop_mode_(stop_at_improvement) {
    sources_ = f.clauses();
    img_of_.assign(static_cast<std::size_t>(n_) + 1, 0);
    used_source_.assign(sources_.size(), false);
    // Identity is an image; start from it so pruning bites immediately.
    best_ = sources_;
    best_map_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (Var v = 1; v <= n_; ++v) best_map_[static_cast<std::size_t>(v)] = v;
    free_targets_.assign(static_cast<std::size_t>(n_), 0);
    for (Var v = 1; v <= n_; ++v)
      free_targets_[static_cast<std::size_t>(v - 1)] = v;
  }

  void run() { search(0); }

  bool improved() const { return improved_; }
  const std::vector<Clause>& best() const { return best_; }
  const std::vector<Lit>& best_map() const { return best_map_; }

 private:
  Clause minimal_completion_image(const Clause& d) const {
    std::vector<Lit> lits;
    lits.reserve(d.size());
    std::size_t unmapped = 0;
    for (Lit l : d) {
      Lit img = img_of_[static_cast<std::size_t>(var_of(l))];
      if (img != 0)
        lits.push_back(l > 0 ? img : -img);
      else
        ++unmapped;
    }
    for (std::size_t i = 0; i < unmapped; ++i) lits.push_back(free_targets_[i]);
    return Clause(std::move(lits));
  }

  bool prefix_matches_best(std::size_t p) const {
    for (std::size_t i = 0; i < p; ++i) {
      if (clause_less(out_[i], best_[i])) return false;  // strictly below
      // out_[i] > best_[i] cannot happen: such branches are pruned.
    }
    return true;
  }

  void search(std::size_t p) {
    if (aborted_) return;
    if (p == sources_.size()) {
      if (clause_seq_less(out_, best_)) {
        best_ = out_;
        best_map_ = img_of_;
        improved_ = true;
        if (stop_mode_) aborted_ = true;
      }
      return;
    }
    bool tight = prefix_matches_best(p);

    Clause least;
    bool have_least = false;
    for (std::size_t i = 0; i < sources_.size(); ++i) {
      if (used_source_[i]) continue;
      Clause img = minimal_completion_image(sources_[i]);
      if (!have_least || clause_less(img, least)) {
        least = std::move(img);
        have_least = true;
      }
    }
    if (tight && clause_less(best_[p], least)) return;

    for (std::size_t i = 0; i < sources_.size() && !aborted_; ++i) {
      if (used_source_[i]) continue;
      if (!(minimal_completion_image(sources_[i]) == least)) continue;
      branch_assignments(p, i, least);
    }
  }

  // Branch over all ways to send the unmapped variables of source clause i
  // to the smallest free targets (signs are forced: the image literal must
  // come out positive).
  void branch_assignments(std::size_t p, std::size_t i, const Clause& image) {
    std::vector<Lit> unmapped;  // literals of the source clause, as they occur
    for (Lit l : sources_[i])
      if (img_of_[static_cast<std::size_t>(var_of(l))] == 0)
        unmapped.push_back(l);
    std::size_t u = unmapped.size();
    std::vector<Var> targets(free_targets_.begin(),
                             free_targets_.begin() + static_cast<long>(u));
    std::vector<std::size_t> perm(u);
    for (std::size_t k = 0; k < u; ++k) perm[k] = k;

    used_source_[i] = true;
    out_.push_back(image);
    do {
      for (std::size_t k = 0; k < u; ++k) {
        Lit l = unmapped[k];
        Var t = targets[perm[k]];
        img_of_[static_cast<std::size_t>(var_of(l))] = l > 0 ? t : -t;
      }
      free_targets_.erase(free_targets_.begin(),
                          free_targets_.begin() + static_cast<long>(u));
      search(p + 1);
      free_targets_.insert(free_targets_.begin(), targets.begin(),
                           targets.end());
      for (Lit l : unmapped) img_of_[static_cast<std::size_t>(var_of(l))] = 0;
      if (aborted_) break;
    } while (std::next_permutation(perm.begin(), perm.end()));
    out_.pop_back();
    used_source_[i] = false;
  }

  int n_;
  bool stop_mode_;
  bool aborted_ = false;
  bool improved_ = false;
  std::vector<Clause> sources_;
  std::vector<Lit> img_of_;     // indexed by source variable, 0 = unassigned
  std::vector<bool> used_source_;
  std::vector<Var> free_targets_;  // ascending
  std::vector<Clause> out_;
  std::vector<Clause> best_;
  std::vector<Lit> best_map_;
};

// Densely relabel variables to 1..n; returns the relabeled set and the
// original variable list (position i holds the source of dense var i+1).
std::pair<ClauseSet, std::vector<Var>> densify(const ClauseSet& f) {
  const std::vector<Var>& vars = f.variables();
  std::map<Var, Var> to_dense;
  for (std::size_t i = 0; i < vars.size(); ++i)
    to_dense[vars[i]] = static_cast<Var>(i + 1);
  std::vector<Clause> out;
  for (const Clause& c : f) {
    std::vector<Lit> lits;
    for (Lit l : c) {
      Var d = to_dense[var_of(l)];
      lits.push_back(l > 0 ? d : -d);
    }
    out.emplace_back(std::move(lits));
  }
  return {ClauseSet(std::move(out)), vars};
}

struct CacheEntry {
  ClauseSet canonical;
  std::vector<std::pair<Var, Lit>> mapping;
};

std::mutex cache_mutex;
std::unordered_map<std::string, CacheEntry> cache;
constexpr std::size_t kCacheCap = 1 << 17;

}  // namespace

IsoClass canonical_form(const ClauseSet& f) {
  std::string key = f.to_string();
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return {it->second.canonical, it->second.mapping};
  }

  auto [dense, source_vars] = densify(f);
  MinImageSearch search(dense, false);
  search.run();
  IsoClass result;
  result.canonical = ClauseSet(search.best());
  for (std::size_t i = 0; i < source_vars.size(); ++i)
    result.mapping.emplace_back(source_vars[i],
                                search.best_map()[i + 1]);

  std::lock_guard<std::mutex> lock(cache_mutex);
  if (cache.size() >= kCacheCap) cache.clear();
  cache.emplace(std::move(key), CacheEntry{result.canonical, result.mapping});
  return result;
}

bool is_canonical(const ClauseSet& f) {
  // Canonical forms use dense variables; anything else cannot be one.
  const std::vector<Var>& vars = f.variables();
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] != static_cast<Var>(i + 1)) return false;
  MinImageSearch search(f, true);
  search.run();
  return !search.improved();
}

bool is_isomorphic(const ClauseSet& f, const ClauseSet& g) {
  if (f.n() != g.n() || f.c() != g.c()) return false;
  // Cheap invariants before canonicalizing.
  auto size_profile = [](const ClauseSet& s) {
    std::vector<std::size_t> sizes;
    for (const Clause& c : s) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    return sizes;
  };
  if (size_profile(f) != size_profile(g)) return false;
  auto degree_profile = [](const ClauseSet& s) {
    std::vector<std::pair<int, int>> degrees;
    for (Var v : s.variables()) {
      int a = s.literal_degree(v), b = s.literal_degree(-v);
      degrees.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(degrees.begin(), degrees.end());
    return degrees;
  };
  if (degree_profile(f) != degree_profile(g)) return false;
  return canonical_form(f).canonical == canonical_form(g).canonical;
}

ClauseSet apply_literal_map(const ClauseSet& f,
                            const std::vector<std::pair<Var, Lit>>& mapping) {
  std::map<Var, Lit> images(mapping.begin(), mapping.end());
  std::vector<Clause> out;
  for (const Clause& c : f) {
    std::vector<Lit> lits;
    for (Lit l : c) {
      auto it = images.find(var_of(l));
      if (it == images.end())
        fail(ErrorCode::UnknownVariable,
             "literal map misses variable " + std::to_string(var_of(l)));
      lits.push_back(l > 0 ? it->second : -it->second);
    }
    out.emplace_back(std::move(lits));
  }
  return ClauseSet(std::move(out));
}

}  // namespace uhitlab
