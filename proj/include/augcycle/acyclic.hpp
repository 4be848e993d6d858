#pragma once

// Acyclic bipartite tournaments and their integer-set form.
//
// A set X of positive integers induces a bipartite tournament: odd elements on
// side one, even elements on side two, and every opposite-parity pair oriented
// from the smaller to the larger element. These digraphs are exactly the acyclic
// bipartite tournaments, and the decomposition below recovers a witness set.

#include <array>
#include <optional>

#include "augcycle/core.hpp"
#include "augcycle/cycles.hpp"

namespace augcycle {

// Strictly increasing positive integers.
class IntegerSet {
 public:
  explicit IntegerSet(std::vector<int> values) : xs_(std::move(values)) {
    if (xs_.empty()) throw std::invalid_argument("IntegerSet: empty");
    for (std::size_t i = 0; i < xs_.size(); ++i) {
      if (xs_[i] < 1) throw std::invalid_argument("IntegerSet: values must be positive");
      if (i > 0 && xs_[i] <= xs_[i - 1])
        throw std::invalid_argument("IntegerSet: values must be strictly increasing");
    }
  }

  int size() const { return static_cast<int>(xs_.size()); }
  const std::vector<int>& values() const { return xs_; }

  bool has_both_parities() const {
    for (int x : xs_)
      if ((x ^ xs_.front()) & 1) return true;
    return false;
  }

  friend bool operator==(const IntegerSet&, const IntegerSet&) = default;

 private:
  std::vector<int> xs_;
};

// Digraph induced by x. Side-one vertex i is the i-th odd element in increasing
// order, side-two vertex j the j-th even element.
inline BipartiteTournament build_dx(const IntegerSet& x) {
  if (!x.has_both_parities())
    throw std::invalid_argument("build_dx: set has a single parity, one side would be empty");
  std::vector<int> odd, even;
  for (int v : x.values()) (v & 1 ? odd : even).push_back(v);
  BoolMatrix cross(static_cast<int>(odd.size()), static_cast<int>(even.size()));
  for (std::size_t i = 0; i < odd.size(); ++i)
    for (std::size_t j = 0; j < even.size(); ++j) cross.set(static_cast<int>(i), static_cast<int>(j), odd[i] < even[j]);
  return {static_cast<int>(odd.size()), static_cast<int>(even.size()), std::move(cross)};
}

// First 4-dicycle in scan order, if any. Cycles in a bipartite tournament have
// even length and alternate sides, so length 4 is the shortest possible.
inline std::optional<Dicycle> find_4_dicycle(const BipartiteTournament& d) {
  for (int i1 = 0; i1 < d.n1(); ++i1)
    for (int i2 = i1 + 1; i2 < d.n1(); ++i2)
      for (int j1 = 0; j1 < d.n2(); ++j1)
        for (int j2 = 0; j2 < d.n2(); ++j2) {
          if (j1 == j2) continue;
          if (d.cross_arc(i1, j1) && !d.cross_arc(i2, j1) && d.cross_arc(i2, j2) &&
              !d.cross_arc(i1, j2))
            return Dicycle({{Side::one, i1}, {Side::two, j1}, {Side::one, i2}, {Side::two, j2}});
        }
  return std::nullopt;
}

// A directed 3-path a -> b -> c -> d whose chord a -> d is missing, if any.
// Absence of such a path characterizes the acyclic case.
inline std::optional<std::array<VertexId, 4>> bitransitivity_violation(
    const BipartiteTournament& d) {
  for (Side s : {Side::one, Side::two}) {
    const int ns = d.side_size(s), no = d.side_size(other(s));
    for (int a = 0; a < ns; ++a)
      for (int b = 0; b < no; ++b)
        for (int c = 0; c < ns; ++c)
          for (int e = 0; e < no; ++e) {
            if (a == c || b == e) continue;
            const VertexId va{s, a}, vb{other(s), b}, vc{s, c}, vd{other(s), e};
            if (d.arc(va, vb) && d.arc(vb, vc) && d.arc(vc, vd) && !d.arc(va, vd))
              return std::array<VertexId, 4>{va, vb, vc, vd};
          }
  }
  return std::nullopt;
}

inline bool is_acyclic(const BipartiteTournament& d) { return !find_4_dicycle(d).has_value(); }

// Witness that d is the digraph of set. order[p] is the vertex playing the role
// of set.values()[p]; mapping order[p] to the p-th element is an isomorphism.
struct DxRepresentation {
  IntegerSet set;
  std::vector<VertexId> order;
};

// Peels off, at each step, a vertex that beats every remaining vertex of the
// opposite side; ties prefer the side extracted last, then the lowest index.
// The integer assigned is the smallest one above the previous value whose
// parity matches the vertex's side (side one is odd). Returns nothing when the
// greedy jams or the peeled order fails to reproduce d, both of which happen
// exactly when d is cyclic.
inline std::optional<DxRepresentation> dx_decompose(const BipartiteTournament& d) {
  std::vector<bool> gone1(static_cast<std::size_t>(d.n1()), false);
  std::vector<bool> gone2(static_cast<std::size_t>(d.n2()), false);
  int left1 = d.n1(), left2 = d.n2();

  auto dominates = [&](VertexId v) {
    const auto& gone_other = v.side == Side::one ? gone2 : gone1;
    for (int w = 0; w < d.side_size(other(v.side)); ++w)
      if (!gone_other[w] && !d.arc(v, {other(v.side), w})) return false;
    return true;
  };
  auto pick_on = [&](Side s) -> std::optional<VertexId> {
    auto& gone = s == Side::one ? gone1 : gone2;
    for (int i = 0; i < d.side_size(s); ++i)
      if (!gone[i] && dominates({s, i})) return VertexId{s, i};
    return std::nullopt;
  };

  std::vector<VertexId> order;
  std::vector<int> values;
  Side preferred = Side::one;
  int prev = 0;
  while (left1 + left2 > 0) {
    std::optional<VertexId> v = pick_on(preferred);
    if (!v) v = pick_on(other(preferred));
    if (!v) return std::nullopt;
    const int want_odd = v->side == Side::one ? 1 : 0;
    prev += ((prev & 1) == want_odd) ? 2 : 1;
    values.push_back(prev);
    order.push_back(*v);
    (v->side == Side::one ? gone1 : gone2)[v->index] = true;
    (v->side == Side::one ? left1 : left2) -= 1;
    preferred = v->side;
  }

  // The peeled order claims arc(order[p], order[q]) for every cross pair p < q;
  // recheck against d itself.
  const int n = static_cast<int>(order.size());
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      if (order[p].side != order[q].side && !d.arc(order[p], order[q])) return std::nullopt;

  return DxRepresentation{IntegerSet(std::move(values)), std::move(order)};
}

inline std::optional<IntegerSet> dx_representation(const BipartiteTournament& d) {
  auto rep = dx_decompose(d);
  if (!rep) return std::nullopt;
  return std::move(rep->set);
}

}  // namespace augcycle
