#pragma once

// Completions with exactly one augmented 3-dicycle, or with none.
//
// The decisions ride on the integer-set form: order the vertices as a set X and
// read off the parity pattern. A triple of consecutive positions that is either
// all one parity or alternating marks a spot where reversing the outer pair
// yields a completion whose only dicycle is that triple. The two families built
// by special_set are exactly the acyclic digraphs with no such triple.

#include <limits>
#include <optional>
#include <utility>

#include "augcycle/acyclic.hpp"
#include "augcycle/core.hpp"
#include "augcycle/cycles.hpp"

namespace augcycle {

// Parity sequence, flipped if necessary so the first entry reads odd. Flipping
// all parities of a set (shifting every element by one) leaves its digraph
// unchanged, so patterns are only meaningful in this normalized form.
class ParityPattern {
 public:
  // bits[i] true means "odd".
  explicit ParityPattern(std::vector<bool> bits) : odd_(std::move(bits)) {
    if (odd_.empty()) throw std::invalid_argument("ParityPattern: empty");
    if (!odd_.front()) odd_.flip();
  }

  static ParityPattern of(const IntegerSet& x) {
    std::vector<bool> bits;
    bits.reserve(x.values().size());
    for (int v : x.values()) bits.push_back(v & 1);
    return ParityPattern(std::move(bits));
  }

  int size() const { return static_cast<int>(odd_.size()); }
  bool odd_at(int pos) const { return odd_[pos]; }  // 0-based
  const std::vector<bool>& bits() const { return odd_; }

  friend bool operator==(const ParityPattern&, const ParityPattern&) = default;

 private:
  std::vector<bool> odd_;
};

// 1-based positions l, l <= n-2, classifying the triple at (l, l+1, l+2).
struct TripleIndices {
  std::vector<int> alternating;  // a,b,a with b != a
  std::vector<int> uniform;      // a,a,a
};

inline TripleIndices pattern_triples(const ParityPattern& p) {
  TripleIndices out;
  for (int l = 1; l + 2 <= p.size(); ++l) {
    const bool a = p.odd_at(l - 1), b = p.odd_at(l), c = p.odd_at(l + 1);
    if (a == b && b == c)
      out.uniform.push_back(l);
    else if (a == c)
      out.alternating.push_back(l);
  }
  return out;
}

// Tournament on vertices 0..n-1 (vertex i playing the integer i+1): all arcs run
// low to high except the single pair (r, r+2), 1-based, which is reversed.
// These are, up to isomorphism, exactly the tournaments with one dicycle.
inline Tournament single_dicycle_tournament(int n, int r) {
  if (n < 3) throw std::invalid_argument("single_dicycle_tournament: order below 3");
  if (r < 1 || r > n - 2) throw std::invalid_argument("single_dicycle_tournament: pivot out of range");
  BoolMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) m.set(i, j, true);
  m.set(r - 1, r + 1, false);
  m.set(r + 1, r - 1, true);
  return Tournament(std::move(m));
}

// True iff t has exactly one dicycle of any length. One 3-dicycle plus no
// 4-dicycle suffices: a longer dicycle would sit in a strong component of order
// at least 4, which always carries a 4-dicycle.
inline bool has_unique_dicycle(const Tournament& t) {
  const int n = t.vertex_count();
  if (n < 3) throw std::invalid_argument("has_unique_dicycle: order below 3");
  int triangles = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const bool fwd = t.arc(i, j) && t.arc(j, k) && t.arc(k, i);
        const bool bwd = t.arc(i, k) && t.arc(k, j) && t.arc(j, i);
        if ((fwd || bwd) && ++triangles > 1) return false;
      }
  if (triangles != 1) return false;
  bool quad = false;
  for_each_dicycle(t, 4, [&](const std::vector<int>&) { quad = true; });
  return !quad;
}

// Some same-side pair whose outdegrees differ by exactly one, scanning side one
// then side two in index order.
inline std::optional<std::pair<VertexId, VertexId>> outdegree_gap_pair(
    const BipartiteTournament& d) {
  for (Side s : {Side::one, Side::two}) {
    const int ns = d.side_size(s), no = d.side_size(other(s));
    std::vector<int> deg(static_cast<std::size_t>(ns), 0);
    for (int i = 0; i < ns; ++i)
      for (int w = 0; w < no; ++w)
        if (d.arc({s, i}, {other(s), w})) ++deg[i];
    for (int i = 0; i < ns; ++i)
      for (int j = 0; j < ns; ++j)
        if (i != j && deg[i] == deg[j] + 1)
          return std::make_pair(VertexId{s, i}, VertexId{s, j});
  }
  return std::nullopt;
}

namespace detail {

inline std::vector<int> special_family_values(int family, int n) {
  // Generating blocks of six: {1,3,4,6} for family 1, {1,2,4,5} for family 2.
  static constexpr int off1[4] = {1, 3, 4, 6};
  static constexpr int off2[4] = {1, 2, 4, 5};
  std::vector<int> xs;
  xs.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) xs.push_back(6 * (k / 4) + (family == 1 ? off1 : off2)[k % 4]);
  return xs;
}

}  // namespace detail

// The n smallest members of the two obstruction families. Family 1 at n = 2 is
// {1,3}, a single-parity set with no bipartite digraph behind it, hence the error.
inline IntegerSet special_set(int family, int n) {
  if (family != 1 && family != 2) throw std::invalid_argument("special_set: family must be 1 or 2");
  if (n < 2) throw std::invalid_argument("special_set: n below 2");
  IntegerSet xs{detail::special_family_values(family, n)};
  if (!xs.has_both_parities())
    throw std::invalid_argument("special_set: set has a single parity at this n");
  return xs;
}

// Which obstruction family d is isomorphic to, if either. Degenerate family
// members whose set is single-parity (family 1 at n = 2) never match, since a
// real input always occupies both sides.
inline std::optional<int> obstruction_family(const BipartiteTournament& d) {
  const auto rep = dx_decompose(d);
  if (!rep) return std::nullopt;
  const ParityPattern p = ParityPattern::of(rep->set);
  const TripleIndices t = pattern_triples(p);
  if (!t.alternating.empty() || !t.uniform.empty()) return std::nullopt;
  for (int family : {1, 2}) {
    std::vector<bool> bits;
    for (int v : detail::special_family_values(family, p.size())) bits.push_back(v & 1);
    if (p == ParityPattern(std::move(bits))) return family;
  }
  return std::nullopt;
}

namespace detail {

// Intra arcs follow the decomposition order on each side, with the (l, l+2)
// position pair (1-based) reversed when given. With a reversal this realizes a
// tournament whose only dicycle is the triple at l; without one it is the fully
// transitive completion along the order.
inline Completion position_order_completion(const BipartiteTournament& d,
                                            const std::vector<VertexId>& order,
                                            std::optional<int> reversed_l) {
  BoolMatrix in1(d.n1(), d.n1()), in2(d.n2(), d.n2());
  const int n = static_cast<int>(order.size());
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      if (order[p].side != order[q].side) continue;
      VertexId from = order[p], to = order[q];
      if (reversed_l && p == *reversed_l - 1 && q == *reversed_l + 1) std::swap(from, to);
      (from.side == Side::one ? in1 : in2).set(from.index, to.index, true);
    }
  return {d, std::move(in1), std::move(in2)};
}

}  // namespace detail

// Completion of d with exactly one augmented (2,1)-dicycle, if one exists:
// d must be acyclic and its parity pattern must contain an alternating triple.
// The smallest such position is reversed.
inline std::optional<Completion> one_augmented_21(const BipartiteTournament& d) {
  const auto rep = dx_decompose(d);
  if (!rep) return std::nullopt;
  const TripleIndices t = pattern_triples(ParityPattern::of(rep->set));
  if (t.alternating.empty()) return std::nullopt;
  return detail::position_order_completion(d, rep->order, t.alternating.front());
}

// Completion of d with exactly one augmented 3-dicycle of any signature, if one
// exists: d must be acyclic and outside both obstruction families. The smallest
// qualifying triple is reversed; an alternating triple yields a (2,1)-dicycle,
// a uniform one a (3,0)-dicycle.
inline std::optional<Completion> one_augmented_3(const BipartiteTournament& d) {
  const auto rep = dx_decompose(d);
  if (!rep) return std::nullopt;
  const TripleIndices t = pattern_triples(ParityPattern::of(rep->set));
  if (t.alternating.empty() && t.uniform.empty()) return std::nullopt;
  int l = std::numeric_limits<int>::max();
  if (!t.alternating.empty()) l = t.alternating.front();
  if (!t.uniform.empty()) l = std::min(l, t.uniform.front());
  return detail::position_order_completion(d, rep->order, l);
}

// Completion whose side tournaments are transitive along the given index orders.
inline Completion transitive_completion(const BipartiteTournament& d, std::vector<int> order1,
                                        std::vector<int> order2) {
  std::vector<VertexId> order;
  for (auto [side, perm] : {std::pair{Side::one, &order1}, std::pair{Side::two, &order2}}) {
    const int ns = d.side_size(side);
    if (static_cast<int>(perm->size()) != ns)
      throw std::invalid_argument("transitive_completion: order length mismatch");
    std::vector<bool> seen(static_cast<std::size_t>(ns), false);
    for (int i : *perm) {
      if (i < 0 || i >= ns || seen[i])
        throw std::invalid_argument("transitive_completion: not a permutation");
      seen[i] = true;
      order.push_back({side, i});
    }
  }
  return detail::position_order_completion(d, order, std::nullopt);
}

}  // namespace augcycle
