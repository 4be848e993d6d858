#pragma once

// Dicycle enumeration and partite signatures.

#include <set>
#include <utility>

#include "augcycle/core.hpp"

namespace augcycle {

// The fixed-length enumerator is meant for short cycles; everything in the
// library needs lengths 3 and 4 only, and nothing here should be handed a
// request that explodes combinatorially by accident.
inline constexpr int max_enumerated_length = 6;

// Visits every k-dicycle of g exactly once, as the global-id sequence starting
// at the cycle's smallest vertex. No length cap; callers enforce their own.
template <Digraph G, typename Visit>
void for_each_dicycle(const G& g, int k, Visit&& visit) {
  const int n = g.vertex_count();
  std::vector<int> path;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  path.reserve(static_cast<std::size_t>(k));

  auto extend = [&](auto&& self, int start) -> void {
    const int cur = path.back();
    if (static_cast<int>(path.size()) == k) {
      if (g.arc(cur, start)) visit(static_cast<const std::vector<int>&>(path));
      return;
    }
    // start stays the smallest vertex of the cycle, so each cycle is seen once.
    for (int v = start + 1; v < n; ++v) {
      if (used[v] || !g.arc(cur, v)) continue;
      used[v] = true;
      path.push_back(v);
      self(self, start);
      path.pop_back();
      used[v] = false;
    }
  };

  // A cycle whose smallest vertex is start needs k vertices in [start, n).
  for (int start = 0; start <= n - k; ++start) {
    used[start] = true;
    path.push_back(start);
    extend(extend, start);
    path.pop_back();
    used[start] = false;
  }
}

namespace detail {

template <typename Host>
std::vector<Dicycle> dicycles_of(const Host& host, int k) {
  if (k < 3 || k > host.vertex_count())
    throw std::invalid_argument("dicycles_of_length: k out of range");
  if (k > max_enumerated_length)
    throw std::invalid_argument("dicycles_of_length: k exceeds the enumerator cap");
  std::vector<Dicycle> out;
  for_each_dicycle(host, k, [&](const std::vector<int>& cyc) {
    std::vector<VertexId> ids;
    ids.reserve(cyc.size());
    for (int g : cyc) ids.push_back(host.vertex_at(g));
    out.emplace_back(std::move(ids));
  });
  return out;
}

}  // namespace detail

inline std::vector<Dicycle> dicycles_of_length(const BipartiteTournament& d, int k) {
  return detail::dicycles_of(d, k);
}

inline std::vector<Dicycle> dicycles_of_length(const Completion& t, int k) {
  return detail::dicycles_of(t, k);
}

// Signature of a dicycle with respect to the bipartition of d.
inline Signature signature_of(const Dicycle& c, const BipartiteTournament& d) {
  int ones = 0;
  for (const VertexId& v : c.vertices()) {
    if (!d.contains(v)) throw std::invalid_argument("signature_of: vertex outside the digraph");
    if (v.side == Side::one) ++ones;
  }
  const int twos = c.length() - ones;
  return {std::max(ones, twos), std::min(ones, twos)};
}

using SignatureSet = std::set<Signature>;

// k-dicycles of t that use at least one added arc and whose signature lies in want.
// Every signature in want must split k.
inline std::vector<Dicycle> augmented_dicycles(const Completion& t, int k,
                                               const SignatureSet& want) {
  for (const Signature& s : want)
    if (s.length() != k)
      throw std::invalid_argument("augmented_dicycles: signature does not split k");
  std::vector<Dicycle> out;
  for (const Dicycle& c : dicycles_of_length(t, k)) {
    const auto& v = c.vertices();
    bool augmented = false;
    for (std::size_t i = 0; i < v.size() && !augmented; ++i)
      augmented = v[i].side == v[(i + 1) % v.size()].side;
    if (augmented && want.contains(signature_of(c, t.base()))) out.push_back(c);
  }
  return out;
}

}  // namespace augcycle
