#pragma once

// Core value types: bipartite tournaments, their completions, plain tournaments,
// and the dicycle/signature vocabulary shared by every other header.
//
// All types are immutable after construction and validate their invariants in the
// constructor. Vertices of a bipartite instance are addressed either by (side, index)
// or by a global index [0, n1+n2) with side-one vertices first; both orders agree
// with VertexId's comparison, so "smallest vertex" means the same thing everywhere.

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace augcycle {

enum class Side : std::uint8_t { one = 0, two = 1 };

inline Side other(Side s) { return s == Side::one ? Side::two : Side::one; }

struct VertexId {
  Side side{Side::one};
  int index{0};

  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

inline std::string to_string(VertexId v) {
  return (v.side == Side::one ? "1." : "2.") + std::to_string(v.index);
}

// Dense row-major bit matrix; the whole library runs at desk scale (a few dozen
// vertices per side), so vector<bool> packing is plenty.
class BoolMatrix {
 public:
  BoolMatrix() = default;
  BoolMatrix(int rows, int cols, bool fill = false)
      : rows_(rows), cols_(cols), bits_(static_cast<std::size_t>(rows) * cols, fill) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("BoolMatrix: negative dimension");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool at(int r, int c) const { return bits_[static_cast<std::size_t>(r) * cols_ + c]; }
  void set(int r, int c, bool v) { bits_[static_cast<std::size_t>(r) * cols_ + c] = v; }

  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<bool> bits_;
};

// Anything with a global vertex range and an arc test. BipartiteTournament,
// Completion and Tournament all model this; the cycle enumerators are written
// against the concept, not any single type.
template <typename G>
concept Digraph = requires(const G& g, int u, int v) {
  { g.vertex_count() } -> std::convertible_to<int>;
  { g.arc(u, v) } -> std::convertible_to<bool>;
};

// Orientation of every V1 x V2 pair; no intra-side arcs exist yet.
class BipartiteTournament {
 public:
  BipartiteTournament(int n1, int n2, BoolMatrix cross)
      : n1_(n1), n2_(n2), cross_(std::move(cross)) {
    if (n1 < 1 || n2 < 1) throw std::invalid_argument("BipartiteTournament: empty partite set");
    if (cross_.rows() != n1 || cross_.cols() != n2)
      throw std::invalid_argument("BipartiteTournament: cross matrix dimension mismatch");
  }

  int side_size(Side s) const { return s == Side::one ? n1_ : n2_; }
  int n1() const { return n1_; }
  int n2() const { return n2_; }
  int vertex_count() const { return n1_ + n2_; }

  // true iff V1[i] -> V2[j]; false means the arc runs V2[j] -> V1[i].
  bool cross_arc(int i, int j) const { return cross_.at(i, j); }

  bool arc(VertexId a, VertexId b) const {
    if (a.side == b.side) return false;
    return a.side == Side::one ? cross_arc(a.index, b.index) : !cross_arc(b.index, a.index);
  }

  bool arc(int u, int v) const { return arc(vertex_at(u), vertex_at(v)); }

  VertexId vertex_at(int global) const {
    return global < n1_ ? VertexId{Side::one, global} : VertexId{Side::two, global - n1_};
  }

  int global_of(VertexId v) const { return v.side == Side::one ? v.index : n1_ + v.index; }

  bool contains(VertexId v) const {
    return v.index >= 0 && v.index < side_size(v.side);
  }

  friend bool operator==(const BipartiteTournament&, const BipartiteTournament&) = default;

 private:
  int n1_;
  int n2_;
  BoolMatrix cross_;
};

namespace detail {

// Checks that m is the adjacency matrix of a tournament on m.rows() vertices:
// irreflexive, exactly one orientation per unordered pair.
inline void require_tournament(const BoolMatrix& m, const char* what) {
  if (m.rows() != m.cols()) throw std::invalid_argument(std::string(what) + ": not square");
  for (int i = 0; i < m.rows(); ++i) {
    if (m.at(i, i)) throw std::invalid_argument(std::string(what) + ": self-arc");
    for (int j = i + 1; j < m.rows(); ++j)
      if (m.at(i, j) == m.at(j, i))
        throw std::invalid_argument(std::string(what) + ": pair " + std::to_string(i) + "," +
                                    std::to_string(j) + " not oriented exactly once");
  }
}

}  // namespace detail

// Tournament on n vertices 0..n-1.
class Tournament {
 public:
  explicit Tournament(BoolMatrix arcs) : arcs_(std::move(arcs)) {
    detail::require_tournament(arcs_, "Tournament");
    if (arcs_.rows() < 1) throw std::invalid_argument("Tournament: empty");
  }

  int vertex_count() const { return arcs_.rows(); }
  bool arc(int u, int v) const { return arcs_.at(u, v); }

  friend bool operator==(const Tournament&, const Tournament&) = default;

 private:
  BoolMatrix arcs_;
};

// A bipartite tournament plus a tournament on each side: the result is a
// tournament on all n1+n2 vertices. Arcs inside a side are the "added" arcs.
class Completion {
 public:
  Completion(BipartiteTournament base, BoolMatrix intra1, BoolMatrix intra2)
      : base_(std::move(base)), intra1_(std::move(intra1)), intra2_(std::move(intra2)) {
    if (intra1_.rows() != base_.n1() || intra2_.rows() != base_.n2())
      throw std::invalid_argument("Completion: intra matrix size mismatch");
    detail::require_tournament(intra1_, "Completion side one");
    detail::require_tournament(intra2_, "Completion side two");
  }

  const BipartiteTournament& base() const { return base_; }

  int vertex_count() const { return base_.vertex_count(); }
  VertexId vertex_at(int global) const { return base_.vertex_at(global); }
  int global_of(VertexId v) const { return base_.global_of(v); }

  bool arc(VertexId a, VertexId b) const {
    if (a.side != b.side) return base_.arc(a, b);
    if (a.index == b.index) return false;
    const BoolMatrix& m = a.side == Side::one ? intra1_ : intra2_;
    return m.at(a.index, b.index);
  }

  bool arc(int u, int v) const { return arc(vertex_at(u), vertex_at(v)); }

  // true iff a -> b and the arc is intra-side, i.e. not an arc of the base.
  bool added_arc(VertexId a, VertexId b) const { return a.side == b.side && arc(a, b); }

  const BoolMatrix& intra(Side s) const { return s == Side::one ? intra1_ : intra2_; }

  // The side's tournament as a standalone object (dicycles of it are exactly the
  // completion's dicycles lying fully inside that side).
  Tournament side_tournament(Side s) const { return Tournament(intra(s)); }

  friend bool operator==(const Completion&, const Completion&) = default;

 private:
  BipartiteTournament base_;
  BoolMatrix intra1_;
  BoolMatrix intra2_;
};

// Partite signature of a k-dicycle: major + minor = k, major >= minor, where the
// two numbers are the vertex counts on the two sides (major on whichever side
// holds more).
struct Signature {
  int major{0};
  int minor{0};

  Signature(int maj, int min) : major(maj), minor(min) {
    if (min < 0 || maj < min) throw std::invalid_argument("Signature: needs major >= minor >= 0");
  }

  int length() const { return major + minor; }

  friend auto operator<=>(const Signature&, const Signature&) = default;
};

// Directed cycle through distinct vertices, stored in traversal order and
// canonicalized to start at its smallest vertex, so value equality is equality
// up to rotation.
class Dicycle {
 public:
  explicit Dicycle(std::vector<VertexId> vertices) : v_(std::move(vertices)) {
    if (v_.size() < 3) throw std::invalid_argument("Dicycle: fewer than three vertices");
    for (std::size_t i = 0; i < v_.size(); ++i)
      for (std::size_t j = i + 1; j < v_.size(); ++j)
        if (v_[i] == v_[j]) throw std::invalid_argument("Dicycle: repeated vertex");
    auto smallest = std::min_element(v_.begin(), v_.end());
    std::rotate(v_.begin(), smallest, v_.end());
  }

  const std::vector<VertexId>& vertices() const { return v_; }
  int length() const { return static_cast<int>(v_.size()); }

  friend auto operator<=>(const Dicycle&, const Dicycle&) = default;

 private:
  std::vector<VertexId> v_;
};

inline std::string to_string(const Dicycle& c) {
  std::string s;
  for (const VertexId& v : c.vertices()) {
    if (!s.empty()) s += ' ';
    s += to_string(v);
  }
  return s;
}

}  // namespace augcycle
