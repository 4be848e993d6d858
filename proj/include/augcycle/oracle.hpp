#pragma once

// Brute-force ground truth. Everything here answers by exhaustion: enumerate
// all completions, walk all cycles, step through all chains. None of the
// structural decision logic is reused, so agreement between the two is a real
// check rather than a tautology.

#include <map>
#include <optional>
#include <set>

#include "augcycle/core.hpp"
#include "augcycle/cycles.hpp"
#include "augcycle/quadcycle.hpp"
#include "augcycle/rng.hpp"

namespace augcycle {

// All 2^p completions of a base, indexed by a p-bit counter over the intra
// pairs (side-one pairs in lexicographic order, then side-two): bit zero means
// the arc runs low index to high.
class CompletionEnumerator {
 public:
  explicit CompletionEnumerator(BipartiteTournament d) : d_(std::move(d)) {
    for (Side s : {Side::one, Side::two})
      for (int i = 0; i < d_.side_size(s); ++i)
        for (int j = i + 1; j < d_.side_size(s); ++j) pairs_.push_back({s, i, j});
    if (pairs_.size() > 24)
      throw std::invalid_argument("CompletionEnumerator: more than 24 intra pairs");
  }

  const BipartiteTournament& base() const { return d_; }
  int pair_count() const { return static_cast<int>(pairs_.size()); }
  std::uint64_t size() const { return std::uint64_t{1} << pairs_.size(); }

  Completion at(std::uint64_t index) const {
    BoolMatrix in1(d_.n1(), d_.n1()), in2(d_.n2(), d_.n2());
    for (std::size_t t = 0; t < pairs_.size(); ++t) {
      const auto& [side, i, j] = pairs_[t];
      const bool rev = (index >> t) & 1;
      BoolMatrix& m = side == Side::one ? in1 : in2;
      m.set(rev ? j : i, rev ? i : j, true);
    }
    return {d_, std::move(in1), std::move(in2)};
  }

 private:
  struct IntraPair {
    Side side;
    int i;
    int j;
  };
  BipartiteTournament d_;
  std::vector<IntraPair> pairs_;
};

namespace detail {

// Counts augmented k-dicycles of t by signature.
inline std::map<Signature, long> augmented_counts(const Completion& t, int k) {
  std::map<Signature, long> out;
  const int n1 = t.base().n1();
  for_each_dicycle(t, k, [&](const std::vector<int>& cyc) {
    bool augmented = false;
    int ones = 0;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const bool a = cyc[i] < n1, b = cyc[(i + 1) % cyc.size()] < n1;
      if (a == b) augmented = true;
      if (a) ++ones;
    }
    if (!augmented) return;
    const int twos = k - ones;
    ++out[Signature{std::max(ones, twos), std::min(ones, twos)}];
  });
  return out;
}

}  // namespace detail

struct CensusEntry {
  std::uint64_t completion_index = 0;
  // Keyed by (cycle length, signature); zero counts are omitted.
  std::map<std::pair<int, Signature>, long> counts;

  long count(int k, const Signature& s) const {
    const auto it = counts.find({k, s});
    return it == counts.end() ? 0 : it->second;
  }

  long total(int k, const SignatureSet& want) const {
    long sum = 0;
    for (const Signature& s : want) sum += count(k, s);
    return sum;
  }
};

// Augmented-dicycle counts for every completion of d, for each length in ks.
inline std::vector<CensusEntry> census(const BipartiteTournament& d, const std::set<int>& ks) {
  const CompletionEnumerator en(d);
  std::vector<CensusEntry> out;
  out.reserve(static_cast<std::size_t>(en.size()));
  for (std::uint64_t idx = 0; idx < en.size(); ++idx) {
    const Completion t = en.at(idx);
    CensusEntry e;
    e.completion_index = idx;
    for (int k : ks)
      for (const auto& [sig, c] : detail::augmented_counts(t, k)) e.counts[{k, sig}] = c;
    out.push_back(std::move(e));
  }
  return out;
}

// True iff some completion of d has exactly t augmented k-dicycles with
// signature in want (dicycles with signatures outside want are not counted).
inline bool brute_decide(const BipartiteTournament& d, long t, int k, const SignatureSet& want) {
  for (const Signature& s : want)
    if (s.length() != k) throw std::invalid_argument("brute_decide: signature does not split k");
  const CompletionEnumerator en(d);
  for (std::uint64_t idx = 0; idx < en.size(); ++idx) {
    long total = 0;
    for (const auto& [sig, c] : detail::augmented_counts(en.at(idx), k))
      if (want.contains(sig)) total += c;
    if (total == t) return true;
  }
  return false;
}

// Literal chain search: a pair is reported iff some specifies-walk from it, of
// length at most twice the pair count, reaches the reverse of a pair that the
// same walk passed at least two steps earlier. Works step by step with per-node
// memoized frontiers; shares only the specifies predicates with the structural
// implementation, not its reachability tables.
inline std::set<OrderedPair> brute_inconsistent(const BipartiteTournament& d, SpecMode mode) {
  std::vector<OrderedPair> nodes;
  for (Side s : {Side::one, Side::two})
    for (int i = 0; i < d.side_size(s); ++i)
      for (int j = 0; j < d.side_size(s); ++j)
        if (i != j) nodes.push_back({{s, i}, {s, j}});
  const int n = static_cast<int>(nodes.size());
  if (n > 200) throw std::invalid_argument("brute_inconsistent: more than 200 pairs");
  const int bound = 2 * n;

  std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
  std::vector<int> rev(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if (p != q && specifies(d, mode, nodes[p], nodes[q])) out[p].push_back(q);
      if (nodes[q].first == nodes[p].second && nodes[q].second == nodes[p].first) rev[p] = q;
    }
  }

  // closes[q]: some walk of length in [2, bound] runs from q to rev[q].
  // touched[q]: every node some walk of length in [1, bound] reaches from q.
  std::vector<char> closes(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<bool>> touched(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) {
    std::vector<bool> frontier(static_cast<std::size_t>(n), false);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int m : out[q]) frontier[m] = seen[m] = true;
    for (int step = 2; step <= bound; ++step) {
      std::vector<bool> next(static_cast<std::size_t>(n), false);
      bool any = false;
      for (int v = 0; v < n; ++v)
        if (frontier[v])
          for (int w : out[v]) next[w] = any = true;
      if (next[rev[q]]) closes[q] = 1;
      for (int v = 0; v < n; ++v)
        if (next[v]) seen[v] = true;
      frontier = std::move(next);
      if (!any) break;
    }
    touched[q] = std::move(seen);
  }

  std::set<OrderedPair> result;
  for (int p = 0; p < n; ++p) {
    bool bad = closes[p];
    for (int q = 0; q < n && !bad; ++q) bad = touched[p][q] && closes[q];
    if (bad) result.insert(nodes[p]);
  }
  return result;
}

// Number of dicycles of every length, each counted once up to rotation.
template <Digraph G>
long brute_dicycle_count(const G& g) {
  const int n = g.vertex_count();
  if (n > 8) throw std::invalid_argument("brute_dicycle_count: order above 8");
  long total = 0;
  for (int k = 3; k <= n; ++k) for_each_dicycle(g, k, [&](const std::vector<int>&) { ++total; });
  return total;
}

// Uniform random orientation of every cross pair.
inline BipartiteTournament random_bipartite(int n1, int n2, Lcg64& rng) {
  BoolMatrix cross(n1, n2);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) cross.set(i, j, rng.coin());
  return {n1, n2, std::move(cross)};
}

}  // namespace augcycle
