#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "augcycle/augcycle.hpp"

namespace augcycle::test {

// Cross matrix from a row-major bit mask, bit (i*n2 + j) set meaning side-one
// vertex i beats side-two vertex j. Enumerating masks enumerates every
// bipartite tournament of that shape.
inline BipartiteTournament from_mask(int n1, int n2, unsigned mask) {
  BoolMatrix m(n1, n2);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j)
      if (mask & (1u << (i * n2 + j))) m.set(i, j, true);
  return {n1, n2, std::move(m)};
}

template <typename Fn>
void for_each_bipartite(int n1, int n2, Fn&& fn) {
  for (unsigned mask = 0; mask < (1u << (n1 * n2)); ++mask) fn(from_mask(n1, n2, mask));
}

inline std::string fixture_text(const std::string& name) {
  std::ifstream in(std::string(AUGCYCLE_FIXTURE_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// The double fan: both vertices of side one see two common successors and two
// common predecessors on side two. Rebuilt arc by arc so library tests do not
// lean on the parser.
inline BipartiteTournament double_fan() {
  BoolMatrix m(2, 4);
  m.set(0, 0, true);  // u1 -> v1
  m.set(0, 1, true);  // u1 -> v2
  m.set(1, 2, true);  // u2 -> v3
  m.set(1, 3, true);  // u2 -> v4
  return {2, 4, std::move(m)};
}

// Its reference completion with seven length-3 dicycles and known longer ones.
inline Completion double_fan_completion() {
  BoolMatrix in1(2, 2), in2(4, 4);
  in1.set(0, 1, true);  // u1 -> u2
  in2.set(0, 1, true);  // v1 -> v2
  in2.set(0, 2, true);  // v1 -> v3
  in2.set(3, 0, true);  // v4 -> v1
  in2.set(1, 2, true);  // v2 -> v3
  in2.set(1, 3, true);  // v2 -> v4
  in2.set(3, 2, true);  // v4 -> v3
  return {double_fan(), std::move(in1), std::move(in2)};
}

// Three-plus-three instance whose pair (a,b) = ((one,0),(one,1)) is
// c-inconsistent through the chain (a,b) -> (c,b) -> (c,a) -> (b,a), with
// middles w1, w2, w3 in turn.
inline BipartiteTournament c_chain_instance() {
  BoolMatrix m(3, 3);
  m.set(0, 2, true);  // a -> w3
  m.set(1, 1, true);  // b -> w2
  m.set(1, 2, true);  // b -> w3
  m.set(2, 0, true);  // c -> w1
  m.set(2, 1, true);  // c -> w2
  return {3, 3, std::move(m)};
}

// The Y3 orientation of K(2,2) with parts {u1,v1} and {u2,v2}: arcs u2->u1,
// u1->v2, v1->u2, v1->v2.
inline BipartiteTournament y3_base() {
  BoolMatrix m(2, 2);
  m.set(0, 1, true);  // u1 -> v2
  m.set(1, 0, true);  // v1 -> u2
  m.set(1, 1, true);  // v1 -> v2
  return {2, 2, std::move(m)};
}

inline VertexId s1(int i) { return {Side::one, i}; }
inline VertexId s2(int i) { return {Side::two, i}; }

}  // namespace augcycle::test
