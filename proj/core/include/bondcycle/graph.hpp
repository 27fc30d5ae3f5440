#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bondcycle {

/// Canonical undirected edge: first < second.
using Edge = std::pair<int, int>;

/// Sorted, duplicate-free list of canonical edges.
using EdgeSet = std::vector<Edge>;

/// Thrown when an exact search is asked to run beyond its size guard.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a verified theorem is contradicted by a computation;
/// always indicates an internal bug, never new mathematics.
class TheoremContradiction : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline Edge make_edge(int u, int v) {
  return u < v ? Edge{u, v} : Edge{v, u};
}

/// Subset of vertices 0..61 as a bitmask. Immutable value type; all
/// mutating-looking operations return a new set.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static VertexSet of(std::initializer_list<int> vertices) {
    VertexSet s;
    for (int v : vertices) s = s.with(v);
    return s;
  }

  /// {0, 1, ..., n-1}
  static constexpr VertexSet first(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  static constexpr VertexSet single(int v) {
    return VertexSet(std::uint64_t{1} << v);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  int count() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1; }

  constexpr VertexSet with(int v) const {
    return VertexSet(bits_ | (std::uint64_t{1} << v));
  }
  constexpr VertexSet without(int v) const {
    return VertexSet(bits_ & ~(std::uint64_t{1} << v));
  }

  /// Index of the lowest member; undefined on the empty set.
  int lowest() const { return std::countr_zero(bits_); }

  constexpr bool is_subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1)
      out.push_back(std::countr_zero(b));
    return out;
  }

  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & b.bits_);
  }
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ | b.bits_);
  }
  friend constexpr VertexSet operator^(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ ^ b.bits_);
  }
  /// Set difference a \ b.
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & ~b.bits_);
  }

  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Immutable simple undirected graph on vertices 0..n-1, n <= 62.
/// Construction canonicalizes: (v,u) becomes (u,v), duplicates collapse,
/// self-loops and out-of-range endpoints are rejected.
class Graph {
 public:
  static constexpr int kMaxVertices = 62;

  Graph(int n, const std::vector<Edge>& edge_list);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// Sorted canonical edge list.
  const EdgeSet& edges() const { return edges_; }

  std::uint64_t adjacency_bits(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  VertexSet neighbors(int v) const { return VertexSet(adj_[static_cast<std::size_t>(v)]); }
  int degree(int v) const { return std::popcount(adj_[static_cast<std::size_t>(v)]); }

  bool has_edge(int u, int v) const {
    return u >= 0 && u < n_ && v >= 0 && v < n_ && ((adj_[static_cast<std::size_t>(u)] >> v) & 1);
  }

  /// The full vertex set {0..n-1}.
  VertexSet vertices() const { return VertexSet::first(n_); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  EdgeSet edges_;
  std::vector<std::uint64_t> adj_;
};

/// Vertices reachable from `start` walking only inside `allowed`.
/// `start` must be a member of `allowed`.
VertexSet reachable_within(const Graph& g, VertexSet allowed, int start);

bool is_connected(const Graph& g);

/// True iff the subgraph induced by `s` is connected. A single vertex
/// counts as connected. Throws on an empty or out-of-range set.
bool is_connected_induced(const Graph& g, VertexSet s);

/// Exhaustive k-connectivity test for k in {1,2,3}: at least k+1 vertices
/// and connected after removing any fewer than k vertices.
bool vertex_connectivity_at_least(const Graph& g, int k);

int min_degree(const Graph& g);

/// All edges with exactly one endpoint in `x`. Throws when `x` is empty
/// or the whole vertex set.
EdgeSet cut_edges(const Graph& g, VertexSet x);

/// |cut_edges(g, x)| without materializing the edges.
int cut_size(const Graph& g, VertexSet x);

VertexSet complement(const Graph& g, VertexSet x);

}  // namespace bondcycle
