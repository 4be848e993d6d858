#pragma once

// Completions with no augmented 4-dicycles of prescribed signatures.
//
// The machinery works on ordered same-side pairs. A pair (u,v) stands for the
// candidate added arc u -> v; one pair "specifies" another when adding the first
// arc forces the second pair's reversed arc into a bad 4-dicycle. Walks in that
// relation that run into the reverse of an earlier pair mark orientations that
// can never be safe (inconsistent); a completion exists with no bad 4-dicycles
// iff no unordered pair is inconsistent both ways, and the repair loop turns any
// completion into a witness by reversing everything a bad pair forces.

#include <optional>
#include <set>
#include <utility>

#include "augcycle/core.hpp"
#include "augcycle/cycles.hpp"

namespace augcycle {

// Candidate added arc: two distinct vertices of one partite set, in order.
struct OrderedPair {
  VertexId first;
  VertexId second;

  OrderedPair(VertexId f, VertexId s) : first(f), second(s) {
    if (f.side != s.side) throw std::invalid_argument("OrderedPair: vertices on opposite sides");
    if (f.index == s.index) throw std::invalid_argument("OrderedPair: vertices equal");
  }

  OrderedPair reversed() const { return {second, first}; }

  friend auto operator<=>(const OrderedPair&, const OrderedPair&) = default;
};

// Which augmented 4-dicycle signatures are forbidden.
enum class SpecMode {
  d_only,  // (2,2) only
  c_only,  // (3,1) only
  both,    // (3,1) and (2,2)
};

inline SignatureSet mode_signatures(SpecMode mode) {
  switch (mode) {
    case SpecMode::d_only: return {Signature{2, 2}};
    case SpecMode::c_only: return {Signature{3, 1}};
    case SpecMode::both: return {Signature{3, 1}, Signature{2, 2}};
  }
  throw std::invalid_argument("mode_signatures: bad mode");
}

// p and q on opposite sides, q.first beats p.first, p.second beats q.second:
// adding both p's arc and q's reversed arc closes a (2,2)-dicycle.
inline bool d_specifies(const BipartiteTournament& d, const OrderedPair& p,
                        const OrderedPair& q) {
  if (p.first.side == q.first.side) return false;
  return d.arc(q.first, p.first) && d.arc(p.second, q.second);
}

// p and q on the same side, sharing an endpoint, the other endpoints joined by
// a directed 2-path: adding p's arc and q's reversed arc closes a (3,1)-dicycle.
inline bool c_specifies(const BipartiteTournament& d, const OrderedPair& p,
                        const OrderedPair& q) {
  if (p.first.side != q.first.side) return false;
  auto two_path = [&](VertexId a, VertexId b) {
    for (int w = 0; w < d.side_size(other(a.side)); ++w) {
      const VertexId m{other(a.side), w};
      if (d.arc(a, m) && d.arc(m, b)) return true;
    }
    return false;
  };
  return (p.second == q.second && two_path(q.first, p.first)) ||
         (p.first == q.first && two_path(p.second, q.second));
}

inline bool specifies(const BipartiteTournament& d, SpecMode mode, const OrderedPair& p,
                      const OrderedPair& q) {
  switch (mode) {
    case SpecMode::d_only: return d_specifies(d, p, q);
    case SpecMode::c_only: return c_specifies(d, p, q);
    case SpecMode::both: return d_specifies(d, p, q) || c_specifies(d, p, q);
  }
  return false;
}

// The specifies relation over all ordered same-side pairs of d, with directed
// reachability precomputed. Node order: side-one pairs lexicographically, then
// side-two pairs.
class PairDigraph {
 public:
  PairDigraph(const BipartiteTournament& d, SpecMode mode) : n1_(d.n1()), n2_(d.n2()) {
    const int n = node_count();
    out_.resize(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        if (p != q && specifies(d, mode, node(p), node(q))) out_[p].push_back(q);

    reach_.assign(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
      auto& row = reach_[s];
      stack.assign(out_[s].begin(), out_[s].end());
      for (int v : stack) row[v] = true;
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : out_[v])
          if (!row[w]) {
            row[w] = true;
            stack.push_back(w);
          }
      }
    }
  }

  int node_count() const { return n1_ * (n1_ - 1) + n2_ * (n2_ - 1); }

  OrderedPair node(int idx) const {
    int ns = n1_;
    Side side = Side::one;
    if (idx >= n1_ * (n1_ - 1)) {
      idx -= n1_ * (n1_ - 1);
      ns = n2_;
      side = Side::two;
    }
    const int i = idx / (ns - 1);
    int j = idx % (ns - 1);
    if (j >= i) ++j;
    return {{side, i}, {side, j}};
  }

  int index_of(const OrderedPair& p) const {
    const int ns = p.first.side == Side::one ? n1_ : n2_;
    const int base = p.first.side == Side::one ? 0 : n1_ * (n1_ - 1);
    const int j = p.second.index - (p.second.index > p.first.index ? 1 : 0);
    return base + p.first.index * (ns - 1) + j;
  }

  int reverse_of(int idx) const { return index_of(node(idx).reversed()); }

  const std::vector<int>& out(int idx) const { return out_[idx]; }

  bool edge(int p, int q) const {
    for (int w : out_[p])
      if (w == q) return true;
    return false;
  }

  // Directed reachability in one or more edges.
  bool reachable(int from, int to) const { return reach_[from][to]; }

 private:
  int n1_;
  int n2_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<bool>> reach_;
};

inline PairDigraph specifies_digraph(const BipartiteTournament& d, SpecMode mode) {
  return {d, mode};
}

namespace detail {

// flags[idx] true iff the pair can start a specifies-walk that reaches the
// reverse of some pair on the walk at least two steps after that pair occurs.
inline std::vector<bool> inconsistent_flags(const PairDigraph& pd) {
  const int n = pd.node_count();
  std::vector<bool> closes(static_cast<std::size_t>(n), false);
  for (int q = 0; q < n; ++q) {
    const int rev = pd.reverse_of(q);
    for (int m : pd.out(q))
      if (pd.reachable(m, rev)) {
        closes[q] = true;
        break;
      }
  }
  std::vector<bool> flags(static_cast<std::size_t>(n), false);
  for (int p = 0; p < n; ++p) {
    if (closes[p]) {
      flags[p] = true;
      continue;
    }
    for (int q = 0; q < n && !flags[p]; ++q) flags[p] = closes[q] && pd.reachable(p, q);
  }
  return flags;
}

}  // namespace detail

inline std::set<OrderedPair> inconsistent_set(const BipartiteTournament& d, SpecMode mode) {
  const PairDigraph pd(d, mode);
  const std::vector<bool> flags = detail::inconsistent_flags(pd);
  std::set<OrderedPair> out;
  for (int i = 0; i < pd.node_count(); ++i)
    if (flags[i]) out.insert(pd.node(i));
  return out;
}

struct Arc {
  VertexId from;
  VertexId to;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Unordered pair of added arcs witnessing a forced bad 4-dicycle, smaller arc first.
using ArcPair = std::pair<Arc, Arc>;

namespace detail {

inline ArcPair make_arc_pair(Arc a, Arc b) {
  if (b < a) std::swap(a, b);
  return {a, b};
}

inline std::set<ArcPair> violations(const Completion& t, const PairDigraph& pd) {
  std::set<ArcPair> out;
  for (int p = 0; p < pd.node_count(); ++p) {
    const OrderedPair pp = pd.node(p);
    if (!t.arc(pp.first, pp.second)) continue;
    for (int q : pd.out(p)) {
      const OrderedPair qq = pd.node(q);
      if (t.arc(qq.second, qq.first))
        out.insert(make_arc_pair({pp.first, pp.second}, {qq.second, qq.first}));
    }
  }
  return out;
}

}  // namespace detail

// All unordered sets {xy, vu} of added arcs of t such that (x,y) specifies (u,v).
// Each such set closes an augmented 4-dicycle of the mode's signature through
// the base arcs that created the edge.
inline std::set<ArcPair> violating_pairs(const Completion& t, SpecMode mode) {
  return detail::violations(t, PairDigraph(t.base(), mode));
}

// Per-pass violation counts; strictly decreasing across a repair run.
struct RepairTrace {
  std::vector<std::size_t> violations_per_pass;
};

// Reverses, for the lexicographically smallest violation, every added arc whose
// pair is specifies-reachable from a consistent pivot orientation, until the
// completion is violation-free. Requires the no-doubly-inconsistent-pair
// condition; the strict-decrease guard trips otherwise.
inline Completion repair(const BipartiteTournament& d, SpecMode mode, Completion t,
                         RepairTrace* trace = nullptr) {
  const PairDigraph pd(d, mode);
  const std::vector<bool> incons = detail::inconsistent_flags(pd);

  std::set<ArcPair> bad = detail::violations(t, pd);
  if (trace) trace->violations_per_pass.push_back(bad.size());
  while (!bad.empty()) {
    const auto [a1, a2] = *bad.begin();
    // Reading the violation as {xy, vu} with (x,y) specifying (u,v); by the
    // reversal symmetry (A1) this holds for either assignment of a1, a2.
    const OrderedPair uv{a2.to, a2.from};
    const OrderedPair yx{a1.to, a1.from};
    const OrderedPair pivot = incons[pd.index_of(uv)] ? yx : uv;

    // Arcs of t realizing the reverse of a pair reachable from the pivot in
    // zero or more specifies-steps. The pivot's own reversed arc is one.
    const int pivot_idx = pd.index_of(pivot);
    std::vector<Arc> to_reverse;
    for (int i = 0; i < pd.node_count(); ++i) {
      if (i != pivot_idx && !pd.reachable(pivot_idx, i)) continue;
      const OrderedPair pair = pd.node(i);
      if (t.arc(pair.second, pair.first)) to_reverse.push_back({pair.second, pair.first});
    }

    BoolMatrix in1 = t.intra(Side::one), in2 = t.intra(Side::two);
    for (const Arc& a : to_reverse) {
      BoolMatrix& m = a.from.side == Side::one ? in1 : in2;
      m.set(a.from.index, a.to.index, false);
      m.set(a.to.index, a.from.index, true);
    }
    t = Completion(d, std::move(in1), std::move(in2));

    std::set<ArcPair> next = detail::violations(t, pd);
    if (next.size() >= bad.size())
      throw std::logic_error("repair: violation count failed to decrease; precondition violated");
    bad = std::move(next);
    if (trace) trace->violations_per_pass.push_back(bad.size());
  }
  return t;
}

// Completion of d with zero augmented 4-dicycles of the mode's signatures, if
// one exists. Decision: no unordered same-side pair may be inconsistent in both
// orientations. The starting completion orients every intra pair away from its
// inconsistent orientation where there is one, and by index otherwise.
inline std::optional<Completion> no_augmented_4(const BipartiteTournament& d, SpecMode mode,
                                                RepairTrace* trace = nullptr) {
  const PairDigraph pd(d, mode);
  const std::vector<bool> incons = detail::inconsistent_flags(pd);

  BoolMatrix in1(d.n1(), d.n1()), in2(d.n2(), d.n2());
  for (Side s : {Side::one, Side::two}) {
    const int ns = d.side_size(s);
    BoolMatrix& m = s == Side::one ? in1 : in2;
    for (int i = 0; i < ns; ++i)
      for (int j = i + 1; j < ns; ++j) {
        const bool fwd_bad = incons[pd.index_of({{s, i}, {s, j}})];
        const bool bwd_bad = incons[pd.index_of({{s, j}, {s, i}})];
        if (fwd_bad && bwd_bad) return std::nullopt;
        if (fwd_bad)
          m.set(j, i, true);
        else
          m.set(i, j, true);
      }
  }
  return repair(d, mode, Completion(d, std::move(in1), std::move(in2)), trace);
}

enum class K22Class { y1, y2, y3, y4 };

// Isomorphism class of a 2+2 bipartite tournament: y1 is the 4-dicycle; the
// rest are told apart by their per-side outdegree multisets.
inline K22Class classify_k22(const BipartiteTournament& d) {
  if (d.n1() != 2 || d.n2() != 2)
    throw std::invalid_argument("classify_k22: needs exactly 2+2 vertices");
  const auto degs = [&](Side s) {
    std::pair<int, int> out{0, 0};
    for (int w = 0; w < 2; ++w) {
      if (d.arc({s, 0}, {other(s), w})) ++out.first;
      if (d.arc({s, 1}, {other(s), w})) ++out.second;
    }
    if (out.first < out.second) std::swap(out.first, out.second);
    return out;
  };
  const auto d1 = degs(Side::one), d2 = degs(Side::two);
  const auto lo = std::min(d1, d2), hi = std::max(d1, d2);
  if (hi == std::pair{1, 1} && lo == std::pair{1, 1}) return K22Class::y1;
  if (hi == std::pair{2, 2} && lo == std::pair{0, 0}) return K22Class::y2;
  if (hi == std::pair{2, 1} && lo == std::pair{1, 0}) return K22Class::y3;
  if (hi == std::pair{2, 0} && lo == std::pair{1, 1}) return K22Class::y4;
  throw std::logic_error("classify_k22: unmatched outdegree profile");
}

// True iff some same-side pair {a,b} has two or more common middles in each
// direction: two 2-paths a -> w -> b and two 2-paths b -> w' -> a, all middles
// distinct. Every completion of such a digraph carries an augmented
// (2,2)-dicycle, and this pattern is the only obstruction.
inline bool contains_double_fan(const BipartiteTournament& d) {
  for (Side s : {Side::one, Side::two}) {
    const int ns = d.side_size(s), no = d.side_size(other(s));
    for (int a = 0; a < ns; ++a)
      for (int b = a + 1; b < ns; ++b) {
        int ab = 0, ba = 0;
        for (int w = 0; w < no; ++w) {
          const VertexId va{s, a}, vb{s, b}, vw{other(s), w};
          if (d.arc(va, vw) && d.arc(vw, vb)) ++ab;
          if (d.arc(vb, vw) && d.arc(vw, va)) ++ba;
        }
        if (ab >= 2 && ba >= 2) return true;
      }
  }
  return false;
}

}  // namespace augcycle
