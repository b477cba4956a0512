#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace statuslab {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Strictly increasing subset of {0, ..., universe_size - 1}.
class VertexSet {
 public:
  VertexSet() = default;

  /// Sorts `members` and validates range and uniqueness.
  VertexSet(std::vector<Vertex> members, std::size_t universe_size);

  std::span<const Vertex> members() const { return members_; }
  std::size_t universe_size() const { return universe_size_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;
  bool is_subset_of(const VertexSet& other) const;

  bool operator==(const VertexSet&) const = default;

 private:
  std::vector<Vertex> members_;
  std::size_t universe_size_ = 0;
};

/// Immutable, validated tree on vertices 0..n-1 with sorted adjacency lists.
class Tree {
 public:
  /// The one-vertex tree.
  Tree();

  /// Validates edge count first, then self-loops/duplicates, then
  /// connectivity; each failure is reported as NotATree with its own message.
  static Tree from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t edge_count() const { return order() - 1; }
  std::span<const Vertex> neighbors(Vertex u) const { return adjacency_.at(u); }
  std::size_t degree(Vertex u) const { return adjacency_.at(u).size(); }
  std::size_t max_degree() const;

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Tree&) const = default;

 private:
  explicit Tree(std::vector<std::vector<Vertex>> adjacency);

  std::vector<std::vector<Vertex>> adjacency_;
};

/// Row-major n x n table of path lengths.
class DistanceTable {
 public:
  explicit DistanceTable(std::size_t n) : n_(n), cells_(n * n, 0) {}

  std::size_t order() const { return n_; }
  std::uint32_t at(Vertex u, Vertex v) const { return cells_[u * n_ + v]; }
  std::uint32_t& at(Vertex u, Vertex v) { return cells_[u * n_ + v]; }
  std::uint32_t max_entry() const;

 private:
  std::size_t n_;
  std::vector<std::uint32_t> cells_;
};

struct StructureFlags {
  bool is_path = false;
  bool is_star = false;
  bool is_double_star = false;
  bool is_caterpillar = false;
  bool is_starlike = false;
  std::size_t diameter = 0;
  std::size_t max_degree = 0;
};

struct VertexPartition {
  VertexSet leaves;
  VertexSet internal;
};

// Edge-list text: first line n, then one "u v" line per edge. Lines starting
// with '#' and blank lines are ignored.
Tree parse_edge_list(std::string_view text);
std::string to_edge_list(const Tree& t);

Tree from_prufer(std::span<const Vertex> seq, std::size_t n);
std::vector<Vertex> to_prufer(const Tree& t);

std::vector<std::uint32_t> bfs_distances(const Tree& t, Vertex source);
DistanceTable all_pairs_distances(const Tree& t);

VertexPartition vertex_partition(const Tree& t);

/// Vertices of one longest path, endpoint to endpoint (double BFS).
std::vector<Vertex> diametric_path(const Tree& t);
std::size_t diameter(const Tree& t);

StructureFlags classify(const Tree& t);

/// T_{u;p}: hangs a new path of p vertices at u. New vertices are numbered
/// n, n+1, ..., n+p-1 starting from the one adjacent to u.
Tree attach_path(const Tree& t, Vertex u, std::size_t p);

/// Lengths of the hanging paths at u, ascending. Empty when degree(u) < 3.
std::vector<std::size_t> hanging_path_lengths(const Tree& t, Vertex u);

/// Subtree induced by the internal vertices, relabeled in increasing order.
/// Requires n >= 3.
Tree delete_leaves(const Tree& t);

}  // namespace statuslab
