#include "uhitlab/search.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include "uhitlab/catalog.hpp"
#include "uhitlab/core.hpp"
#include "uhitlab/dyadic.hpp"
#include "uhitlab/factor.hpp"
#include "uhitlab/iso.hpp"
#include "uhitlab/singular.hpp"

namespace uhitlab {

ClauseSet dt2() {
  return ClauseSet{{1, 2}, {-1, -2}, {-1, 2}, {-2, 1}};
}

ClauseSet dt3() {
  return ClauseSet{{1, 2, 3}, {-1, -2, -3}, {-1, 2}, {-2, 3}, {-3, 1}};
}

namespace {

ClauseSet shift_variables(const ClauseSet& f, Var offset) {
  std::vector<Clause> out;
  for (const Clause& c : f) {
    std::vector<Lit> lits;
    for (Lit x : c) lits.push_back(x > 0 ? x + offset : x - offset);
    out.emplace_back(std::move(lits));
  }
  return ClauseSet(std::move(out));
}

ClauseSet add_literal_everywhere(const ClauseSet& f, Lit x) {
  return combinatorial_or(ClauseSet{Clause{x}}, f);
}

}  // namespace

namespace {

// Falsification monitor: a nonsingular deficiency-3 member with more than 7
// variables would contradict the variable bound; constructions and
// enumerations refuse to emit one silently.
void monitor_delta3(const ClauseSet& f) {
  if (!delta3_bound_ok(f))
    fail(ErrorCode::PreconditionViolation,
         "nonsingular deficiency-3 instance with more than 7 variables: " +
             f.to_string());
}

}  // namespace

ClauseSet construct_km(int m) {
  if (m < 1) fail(ErrorCode::BadArity, "the family starts at m = 1");
  ClauseSet km = dt3();
  for (int step = 2; step <= m; ++step) {
    Var base = km.max_variable();
    ClauseSet fresh_block = shift_variables(dt3(), base);
    Var selector = base + 4;
    km = add_literal_everywhere(km, selector)
             .set_union(add_literal_everywhere(fresh_block, -selector));
  }
  monitor_delta3(km);
  return km;
}

namespace {

template <typename Rng>
const Clause& random_clause(const ClauseSet& f, Rng& rng) {
  std::uniform_int_distribution<int> pick(0, f.c() - 1);
  return f[static_cast<std::size_t>(pick(rng))];
}

}  // namespace

ClauseSet random_uhit(std::uint64_t seed, int target_n, const RandomMix& mix) {
  std::mt19937_64 rng(seed);
  ClauseSet current{Clause{}};  // {⊥}

  const int weights[6] = {mix.nonstrict_fs_extension, mix.strict_fs_extension,
                          mix.full_unit_extension, mix.mid_singular_extension,
                          mix.block_disjunction, mix.nfs_flip};
  int total_weight = 0;
  for (int w : weights) total_weight = total_weight + std::max(w, 0);
  if (total_weight == 0)
    fail(ErrorCode::PreconditionViolation, "all mix weights are zero");

  int stall_guard = 0;
  while (current.n() < target_n && stall_guard < 64 * (target_n + 4)) {
    ++stall_guard;
    std::uniform_int_distribution<int> roll(0, total_weight - 1);
    int pick = roll(rng);
    int op = 0;
    while (pick >= std::max(weights[op], 0)) {
      pick -= std::max(weights[op], 0);
      ++op;
    }
    switch (op) {
      case 0: {  // non-strict fs-extension on a random clause
        const Clause& c = random_clause(current, rng);
        current = fs_extend(current, c, current.max_variable() + 1).result;
        break;
      }
      case 1: {  // strict fs-extension where the guard allows one
        const Clause& c = random_clause(current, rng);
        std::vector<Var> eligible;
        for (Var v : current.variables())
          if (!c.has_variable(v) && !current.contains(c.with(v)) &&
              !current.contains(c.with(-v)))
            eligible.push_back(v);
        if (eligible.empty()) break;
        std::uniform_int_distribution<std::size_t> pv(0, eligible.size() - 1);
        current = fs_extend(current, c, eligible[pv(rng)]).result;
        break;
      }
      case 2: {  // full singular unit-extension, always applicable
        auto extensions = singular_hitting_extensions(current, current.c());
        current = extensions.front().extended;
        break;
      }
      case 3: {  // singular hitting extension at a random arity
        std::uniform_int_distribution<int> pm(1, current.c());
        auto extensions = singular_hitting_extensions(current, pm(rng));
        if (extensions.empty()) break;
        std::uniform_int_distribution<std::size_t> pe(0,
                                                      extensions.size() - 1);
        current = extensions[pe(rng)].extended;
        break;
      }
      case 4: {  // disjoin a fresh small UHIT block behind a random pivot
        ClauseSet block = (rng() & 1) ? dt2() : dt3();
        block = shift_variables(block, current.max_variable());
        current = pointed_or(current, random_clause(current, rng), block);
        break;
      }
      default: {  // one nfs-flip where the guard allows it
        auto pairs = find_nfs_pairs(current);
        std::shuffle(pairs.begin(), pairs.end(), rng);
        for (const NfsPair& p : pairs) {
          Clause a = p.common_part.with(p.resolution_literal)
                         .with(-p.side_literal);
          Clause b = p.common_part.with(p.side_literal);
          if (current.contains(a) || current.contains(b)) continue;
          current = nfs_flip(current, p);
          break;
        }
        break;
      }
    }
  }
  if (!is_uhit(current))
    fail(ErrorCode::PreconditionViolation,
         "random construction left the class, seed " + std::to_string(seed));
  monitor_delta3(current);
  return current;
}

namespace {

struct BfsNode {
  ClauseSet state;
  long parent;
  NfsPair via;
  int depth;
};

struct BfsState {
  ClauseSet start;
  std::vector<BfsNode> nodes;
  std::deque<long> queue;
};

// Shared BFS engine. Returns the path; sets frontier_left when bounds
// stopped the search with unexpanded states (the resumable situation).
FlipPath run_flip_bfs(BfsState& bfs, const SearchBounds& bounds,
                      const std::function<void(const ClauseSet&)>& observer,
                      bool* frontier_left) {
  FlipPath path;
  path.start = bfs.start;
  if (frontier_left) *frontier_left = false;

  std::map<std::string, long> visited;
  for (std::size_t i = 0; i < bfs.nodes.size(); ++i)
    visited.emplace(canonical_form(bfs.nodes[i].state).canonical.to_string(),
                    static_cast<long>(i));

  auto reconstruct = [&](long leaf) {
    std::vector<FlipStep> steps;
    for (long at = leaf; bfs.nodes[static_cast<std::size_t>(at)].parent >= 0;
         at = bfs.nodes[static_cast<std::size_t>(at)].parent)
      steps.push_back({bfs.nodes[static_cast<std::size_t>(at)].via,
                       bfs.nodes[static_cast<std::size_t>(at)].state});
    std::reverse(steps.begin(), steps.end());
    return steps;
  };

  int max_depth_seen = 0;
  for (const BfsNode& node : bfs.nodes)
    max_depth_seen = std::max(max_depth_seen, node.depth);

  while (!bfs.queue.empty()) {
    long index = bfs.queue.front();
    // The queue is depth-ordered; once the front reaches the depth bound
    // the whole remaining frontier is at the bound and stays resumable.
    if (bfs.nodes[static_cast<std::size_t>(index)].depth >= bounds.depth) {
      if (frontier_left) *frontier_left = true;
      break;
    }
    bfs.queue.pop_front();
    ClauseSet state = bfs.nodes[static_cast<std::size_t>(index)].state;
    int depth = bfs.nodes[static_cast<std::size_t>(index)].depth;

    for (const NfsPair& p : find_nfs_pairs(state)) {
      Clause a =
          p.common_part.with(p.resolution_literal).with(-p.side_literal);
      Clause b = p.common_part.with(p.side_literal);
      if (state.contains(a) || state.contains(b)) continue;
      ClauseSet next = nfs_flip(state, p);
      monitor_delta3(next);
      std::string key = canonical_form(next).canonical.to_string();
      if (visited.count(key)) continue;
      if (static_cast<long>(visited.size()) >= bounds.breadth) {
        // Put the interrupted node back so a resume re-expands it; its
        // finished children are deduplicated away by the visited set.
        bfs.queue.push_front(index);
        if (frontier_left) *frontier_left = true;
        path.terminal = bfs.start;
        path.outcome = FlipOutcome::Exhausted;
        path.depth_explored = max_depth_seen;
        return path;
      }
      if (observer) observer(next);
      bfs.nodes.push_back({next, index, p, depth + 1});
      long next_index = static_cast<long>(bfs.nodes.size()) - 1;
      visited.emplace(std::move(key), next_index);
      max_depth_seen = std::max(max_depth_seen, depth + 1);
      if (has_nontrivial_factor(next)) {
        path.steps = reconstruct(next_index);
        path.terminal = next;
        path.outcome = FlipOutcome::FoundReducible;
        path.depth_explored = depth + 1;
        return path;
      }
      bfs.queue.push_back(next_index);
    }
  }
  path.terminal = bfs.start;
  path.outcome = FlipOutcome::Exhausted;
  path.depth_explored = max_depth_seen;
  return path;
}

// Initial BFS state; empty optional when the start is already reducible.
std::optional<BfsState> prepare_flip_bfs(
    const ClauseSet& f, const std::function<void(const ClauseSet&)>& observer) {
  if (!is_uhit(f))
    fail(ErrorCode::NotUhit, "flip search is defined on UHIT inputs");
  if (observer) observer(f);
  if (has_nontrivial_factor(f)) return std::nullopt;
  BfsState bfs;
  bfs.start = f;
  bfs.nodes.push_back({f, -1, NfsPair{}, 0});
  bfs.queue.push_back(0);
  return bfs;
}

FlipPath immediately_reducible(const ClauseSet& f) {
  FlipPath path;
  path.start = f;
  path.terminal = f;
  path.outcome = FlipOutcome::FoundReducible;
  return path;
}

}  // namespace

FlipPath nfs_search(const ClauseSet& f, const SearchBounds& bounds,
                    const std::function<void(const ClauseSet&)>& observer) {
  std::optional<BfsState> bfs = prepare_flip_bfs(f, observer);
  if (!bfs) return immediately_reducible(f);
  return run_flip_bfs(*bfs, bounds, observer, nullptr);
}

namespace {

constexpr const char* kCheckpointMagic = "uhitflip-checkpoint";
constexpr int kCheckpointVersion = 1;

void write_checkpoint_file(const std::string& path, const BfsState& bfs) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::IoError, "cannot open " + path);
  out << kCheckpointMagic << ' ' << kCheckpointVersion << '\n';
  out << "start " << encode_clause_set(bfs.start) << '\n';
  for (const BfsNode& node : bfs.nodes) {
    out << "node state=" << encode_clause_set(node.state)
        << " parent=" << node.parent << " via=";
    if (node.parent < 0)
      out << '-';
    else
      out << encode_clause_set(ClauseSet{node.via.with_resolution_literal})
          << '|'
          << encode_clause_set(ClauseSet{node.via.with_side_literal});
    out << " depth=" << node.depth << '\n';
  }
  out << "queue";
  for (long index : bfs.queue) out << ' ' << index;
  out << '\n';
}

std::string take_field(std::istringstream& in, const std::string& key) {
  std::string word;
  if (!(in >> word) || word.rfind(key + "=", 0) != 0)
    fail(ErrorCode::ParseError, "checkpoint field " + key + " missing");
  return word.substr(key.size() + 1);
}

BfsState read_checkpoint_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoError, "cannot open " + path);
  std::string line;
  if (!std::getline(in, line))
    fail(ErrorCode::ParseError, "empty checkpoint file");
  std::istringstream header(line);
  std::string magic;
  int version = 0;
  header >> magic >> version;
  if (magic != kCheckpointMagic || version != kCheckpointVersion)
    fail(ErrorCode::ParseError, "unsupported checkpoint header '" + line + "'");

  BfsState bfs;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string tag;
    fields >> tag;
    if (tag == "start") {
      std::string encoded;
      fields >> encoded;
      bfs.start = decode_clause_set(encoded);
    } else if (tag == "node") {
      BfsNode node;
      node.state = decode_clause_set(take_field(fields, "state"));
      node.parent = std::stol(take_field(fields, "parent"));
      std::string via = take_field(fields, "via");
      if (node.parent >= 0) {
        std::size_t split = via.find('|');
        if (split == std::string::npos)
          fail(ErrorCode::ParseError, "malformed via pair");
        ClauseSet left = decode_clause_set(via.substr(0, split));
        ClauseSet right = decode_clause_set(via.substr(split + 1));
        if (left.c() != 1 || right.c() != 1)
          fail(ErrorCode::ParseError, "malformed via pair");
        std::optional<NfsPair> pair = decompose_nfs_pair(left[0], right[0]);
        if (!pair)
          fail(ErrorCode::ParseError, "via clauses do not form an nfs-pair");
        node.via = *pair;
      }
      node.depth = std::stoi(take_field(fields, "depth"));
      bfs.nodes.push_back(std::move(node));
    } else if (tag == "queue") {
      long index;
      while (fields >> index) {
        if (index < 0 || index >= static_cast<long>(bfs.nodes.size()))
          fail(ErrorCode::ParseError, "queue index out of range");
        bfs.queue.push_back(index);
      }
    } else {
      fail(ErrorCode::ParseError, "unexpected checkpoint line '" + line + "'");
    }
  }
  if (bfs.nodes.empty())
    fail(ErrorCode::ParseError, "checkpoint without nodes");
  return bfs;
}

}  // namespace

FlipPath nfs_search_with_checkpoint(
    const ClauseSet& f, const SearchBounds& bounds,
    const std::string& checkpoint_path,
    const std::function<void(const ClauseSet&)>& observer) {
  std::optional<BfsState> bfs = prepare_flip_bfs(f, observer);
  if (!bfs) return immediately_reducible(f);
  bool frontier_left = false;
  FlipPath path = run_flip_bfs(*bfs, bounds, observer, &frontier_left);
  if (frontier_left) write_checkpoint_file(checkpoint_path, *bfs);
  return path;
}

FlipPath nfs_resume(const std::string& checkpoint_path,
                    const SearchBounds& bounds,
                    const std::function<void(const ClauseSet&)>& observer) {
  BfsState bfs = read_checkpoint_file(checkpoint_path);
  bool frontier_left = false;
  FlipPath path = run_flip_bfs(bfs, bounds, observer, &frontier_left);
  if (frontier_left) write_checkpoint_file(checkpoint_path, bfs);
  return path;
}

std::variant<FsPair, NfsPair> flip_for_double_two(const ClauseSet& f, Var v) {
  if (!is_uhit(f))
    fail(ErrorCode::NotUhit, "defined on UHIT inputs");
  if (f.literal_degree(v) != 2 || f.literal_degree(-v) != 2)
    fail(ErrorCode::PreconditionViolation,
         "variable " + std::to_string(v) + " must have both degrees 2");
  std::vector<FsPair> fs = find_fs_pairs(f);
  if (!fs.empty()) return fs.front();

  // The lemma's witness pair lives among the four clauses touching v.
  ClauseSet touching = f.clauses_with(v).set_union(f.clauses_with(-v));
  for (const NfsPair& p : find_nfs_pairs(touching)) {
    Clause a = p.common_part.with(p.resolution_literal).with(-p.side_literal);
    Clause b = p.common_part.with(p.side_literal);
    if (f.contains(a) || f.contains(b)) continue;
    if (!find_fs_pairs(nfs_flip(f, p)).empty()) return p;
  }
  fail(ErrorCode::PreconditionViolation,
       "no flip among the occurrences of " + std::to_string(v) +
           " creates an fs-pair; this falsifies the double-2 property");
}

FlipPath flips_toward_fs(const ClauseSet& f, Lit x) {
  if (!is_uhit(f))
    fail(ErrorCode::NotUhit, "defined on UHIT inputs");
  if (!f.has_variable(var_of(x)))
    fail(ErrorCode::PreconditionViolation,
         "literal " + std::to_string(x) + " does not occur");
  if (apply_literal(f, x).delta() != 1)
    fail(ErrorCode::PreconditionViolation,
         "assigning the literal must give deficiency 1");

  FlipPath path;
  path.start = f;
  path.outcome = FlipOutcome::FoundFsPair;
  ClauseSet current = f;
  int guard = apply_literal(f, x).c() + 1;
  while (find_fs_pairs(current).empty()) {
    if (guard-- <= 0)
      fail(ErrorCode::PreconditionViolation,
           "flip series did not terminate within the promised bound");
    ClauseSet projection = apply_literal(current, x);
    std::vector<FsPair> pairs = find_fs_pairs(projection);
    if (pairs.empty())
      fail(ErrorCode::PreconditionViolation,
           "a deficiency-1 projection without fs-pair; this falsifies the "
           "reduction argument");
    const FsPair& pair = pairs.front();
    auto preimage = [&](const Clause& c) {
      if (current.contains(c)) return c;
      Clause lifted = c.with(-x);
      if (current.contains(lifted)) return lifted;
      fail(ErrorCode::PreconditionViolation, "projection preimage missing");
    };
    Clause left = preimage(pair.left);
    Clause right = preimage(pair.right);
    bool found = false;
    for (const NfsPair& p : find_nfs_pairs(current)) {
      if (!((p.with_resolution_literal == left &&
             p.with_side_literal == right) ||
            (p.with_resolution_literal == right &&
             p.with_side_literal == left)))
        continue;
      current = nfs_flip(current, p);
      path.steps.push_back({p, current});
      found = true;
      break;
    }
    if (!found)
      fail(ErrorCode::PreconditionViolation,
           "lifted projection pair is not an nfs-pair of the current set");
    assert(is_uhit(current));
  }
  path.terminal = current;
  path.depth_explored = static_cast<int>(path.steps.size());
  return path;
}

long enumeration_work_limit() {
  static const long limit = [] {
    if (const char* env = std::getenv("UHITLAB_WORK_LIMIT")) {
      long v = std::atol(env);
      if (v > 0) return v;
    }
    return 400'000'000L;
  }();
  return limit;
}

namespace {

// Exhaustive enumeration core for one exact variable count. Clauses are
// chosen in ascending canonical order; pruning by pairwise clashes
// (precomputed adjacency bitsets), by the exact remaining dyadic budget and
// by two necessary conditions on canonical representatives: the first
// clause of a canonical form is {1..k} all-positive, and new variables
// enter as a contiguous all-positive block.
class UhitEnumerator {
 public:
  UhitEnumerator(int n, int c, bool nonsingular_only, bool up_to_iso,
                 long* budget, const std::function<void(const ClauseSet&)>& sink)
      : n_(n),
        c_(c),
        nonsingular_only_(nonsingular_only),
        up_to_iso_(up_to_iso),
        budget_(budget),
        sink_(sink) {
    build_universe();
  }

  void run() {
    if (n_ == 0) {
      // Over no variables only {⊥} qualifies, with c = 1.
      ClauseSet bottom{Clause{}};
      if (c_ == 1) emit(bottom);
      return;
    }
    chosen_.reserve(static_cast<std::size_t>(c_));
    std::vector<std::uint64_t> all(words(), ~std::uint64_t{0});
    trim_tail(all);
    walk(0, all, DyadicSum::zero(), 0);
  }

  std::uint64_t all_variables_mask() const {
    return n_ >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  const std::vector<ClauseSet>& found() const { return found_; }

 private:
  std::size_t words() const { return (universe_.size() + 63) / 64; }

  void trim_tail(std::vector<std::uint64_t>& mask) const {
    std::size_t bits = universe_.size() % 64;
    if (bits != 0 && !mask.empty()) mask.back() &= (std::uint64_t{1} << bits) - 1;
  }

  void build_universe() {
    // All nonempty clauses over subsets of 1..n, canonical order.
    std::vector<Clause> clauses;
    for (std::uint64_t sel = 1; sel < (std::uint64_t{1} << n_); ++sel) {
      std::uint64_t signs_count =
          std::uint64_t{1} << std::popcount(sel);
      for (std::uint64_t signs = 0; signs < signs_count; ++signs) {
        std::vector<Lit> lits;
        int bit = 0;
        for (Var v = 1; v <= n_; ++v) {
          if (!((sel >> (v - 1)) & 1)) continue;
          lits.push_back(((signs >> bit) & 1) ? -v : v);
          ++bit;
        }
        clauses.emplace_back(std::move(lits));
      }
    }
    std::sort(clauses.begin(), clauses.end(), clause_less);
    universe_ = std::move(clauses);

    adjacency_.assign(universe_.size(),
                      std::vector<std::uint64_t>(words(), 0));
    for (std::size_t i = 0; i < universe_.size(); ++i)
      for (std::size_t j = i + 1; j < universe_.size(); ++j)
        if (universe_[i].clashes(universe_[j])) {
          adjacency_[i][j / 64] |= std::uint64_t{1} << (j % 64);
          adjacency_[j][i / 64] |= std::uint64_t{1} << (i % 64);
        }

    var_mask_.reserve(universe_.size());
    new_block_ok_.assign(universe_.size(),
                         std::vector<char>(static_cast<std::size_t>(n_) + 1, 0));
    for (std::size_t i = 0; i < universe_.size(); ++i) {
      std::uint64_t mask = 0;
      for (Lit l : universe_[i]) mask |= std::uint64_t{1} << (var_of(l) - 1);
      var_mask_.push_back(mask);
      for (int m = 0; m <= n_; ++m)
        new_block_ok_[i][static_cast<std::size_t>(m)] =
            canonical_block_ok(universe_[i], m) ? 1 : 0;
    }
  }

  // Necessary condition on canonical representatives: relative to a prefix
  // using variables 1..m exactly, the clause may only introduce the
  // contiguous variables m+1, m+2, ... and must contain them positively.
  static bool canonical_block_ok(const Clause& clause, int m) {
    Var next_new = static_cast<Var>(m) + 1;
    for (Lit l : clause) {
      if (var_of(l) <= m) continue;
      if (var_of(l) != next_new || l < 0) return false;
      ++next_new;
    }
    return true;
  }

  void emit(const ClauseSet& f) {
    monitor_delta3(f);
    if (nonsingular_only_) {
      for (Var v : f.variables())
        if (std::min(f.literal_degree(v), f.literal_degree(-v)) == 1) return;
    }
    if (up_to_iso_ && !is_canonical(f)) return;
    found_.push_back(f);
    if (sink_) sink_(f);
  }

  void walk(std::size_t next, const std::vector<std::uint64_t>& compatible,
            DyadicSum sum, std::uint64_t used_mask) {
    if (*budget_ <= 0)
      fail(ErrorCode::BoundExceeded, "enumeration work limit exhausted");
    --*budget_;

    int chosen_count = static_cast<int>(chosen_.size());
    if (chosen_count == c_) {
      if (!sum.is_one()) return;
      if (used_mask != all_variables_mask()) return;
      std::vector<Clause> clauses;
      for (std::size_t i : chosen_) clauses.push_back(universe_[i]);
      emit(ClauseSet(std::move(clauses)));
      return;
    }
    int slots = c_ - chosen_count;
    for (std::size_t i = next; i < universe_.size(); ++i) {
      if (static_cast<int>(universe_.size() - i) < slots) break;
      if (!((compatible[i / 64] >> (i % 64)) & 1)) continue;
      unsigned size = static_cast<unsigned>(universe_[i].size());
      // Remaining clauses are no shorter than this one, so the largest
      // reachable sum from here is slots * 2^-size.
      DyadicSum optimistic = sum;
      optimistic += DyadicSum(static_cast<std::uint64_t>(slots), size);
      if (optimistic < DyadicSum::one()) break;
      if (up_to_iso_) {
        // In canonical-prefix mode the used variables are exactly 1..m.
        std::size_t m = static_cast<std::size_t>(std::popcount(used_mask));
        if (!new_block_ok_[i][m]) continue;
      }
      std::vector<std::uint64_t> next_compatible(words());
      for (std::size_t w = 0; w < words(); ++w)
        next_compatible[w] = compatible[w] & adjacency_[i][w];
      DyadicSum next_sum = sum;
      next_sum += DyadicSum(1, size);
      chosen_.push_back(i);
      walk(i + 1, next_compatible, next_sum, used_mask | var_mask_[i]);
      chosen_.pop_back();
    }
  }

  int n_, c_;
  bool nonsingular_only_, up_to_iso_;
  long* budget_;
  const std::function<void(const ClauseSet&)>& sink_;
  std::vector<Clause> universe_;
  std::vector<std::vector<std::uint64_t>> adjacency_;
  std::vector<std::uint64_t> var_mask_;
  std::vector<std::vector<char>> new_block_ok_;
  std::vector<std::size_t> chosen_;
  std::vector<ClauseSet> found_;
};

}  // namespace

std::vector<ClauseSet> enumerate_uhit(
    const EnumerationTask& task,
    const std::function<void(const ClauseSet&)>& sink) {
  if (task.delta < 1)
    fail(ErrorCode::BadArity, "UHIT deficiency is at least 1");
  if (task.n_max < 0) fail(ErrorCode::BadArity, "negative variable bound");
  long budget = enumeration_work_limit();
  std::vector<ClauseSet> out;
  for (int n = 0; n <= task.n_max; ++n) {
    UhitEnumerator enumerator(n, n + task.delta, task.nonsingular_only,
                              task.up_to_iso, &budget, sink);
    enumerator.run();
    out.insert(out.end(), enumerator.found().begin(),
               enumerator.found().end());
  }
  return out;
}

bool delta3_bound_ok(const ClauseSet& f) {
  if (!is_uhit(f) || f.delta() != 3) return true;
  for (Var v : f.variables())
    if (std::min(f.literal_degree(v), f.literal_degree(-v)) == 1) return true;
  return f.n() <= 7;
}

}  // namespace uhitlab
