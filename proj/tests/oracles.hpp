#pragma once

// Slow or alternative implementations used only to cross-check the library.

#include <algorithm>
#include <cstdint>
#include <queue>
#include <unordered_set>
#include <vector>

#include "statuslab/status.hpp"
#include "statuslab/tree.hpp"

namespace oracle {

using statuslab::Status;
using statuslab::Tree;
using statuslab::Vertex;

inline std::vector<int> bfs(const Tree& t, Vertex source) {
  std::vector<int> dist(t.order(), -1);
  std::queue<Vertex> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const Vertex u = q.front();
    q.pop();
    for (Vertex w : t.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

// O(n^2) status: one BFS per vertex.
inline std::vector<Status> status(const Tree& t, const std::vector<bool>& in_a) {
  std::vector<Status> out(t.order(), 0);
  for (Vertex u = 0; u < t.order(); ++u) {
    const auto dist = bfs(t, u);
    for (Vertex v = 0; v < t.order(); ++v) {
      if (in_a[v]) out[u] += dist[v];
    }
  }
  return out;
}

inline std::vector<bool> members(const Tree& t, statuslab::Selector sel) {
  std::vector<bool> in_a(t.order());
  for (Vertex v = 0; v < t.order(); ++v) {
    const bool leaf = t.degree(v) == 1;
    in_a[v] = sel == statuslab::Selector::kAll || (sel == statuslab::Selector::kLeaves) == leaf;
  }
  return in_a;
}

inline std::size_t eccentricity(const Tree& t, Vertex u) {
  const auto d = bfs(t, u);
  return static_cast<std::size_t>(*std::max_element(d.begin(), d.end()));
}

inline std::size_t diameter(const Tree& t) {
  std::size_t best = 0;
  for (Vertex u = 0; u < t.order(); ++u) best = std::max(best, eccentricity(t, u));
  return best;
}

// Every vertex is on, or adjacent to, some fixed longest path.
inline bool caterpillar(const Tree& t) {
  const std::size_t n = t.order();
  if (n <= 2) return true;
  Vertex x = 0;
  for (Vertex u = 0; u < n; ++u) {
    if (eccentricity(t, u) > eccentricity(t, x)) x = u;
  }
  const auto dx = bfs(t, x);
  const auto y = static_cast<Vertex>(std::max_element(dx.begin(), dx.end()) - dx.begin());
  const auto dy = bfs(t, y);
  const int diam = dx[y];
  for (Vertex v = 0; v < n; ++v) {
    const int off = (dx[v] + dy[v] - diam) / 2;
    if (off > 1) return false;
  }
  return true;
}

inline bool starlike(const Tree& t) {
  std::size_t big = 0;
  for (Vertex v = 0; v < t.order(); ++v) big += t.degree(v) > 2 ? 1 : 0;
  return big <= 1;
}

// Independent Prufer decoder with a min-heap of current leaves.
inline std::vector<statuslab::Edge> prufer_edges(const std::vector<Vertex>& seq, std::size_t n) {
  std::vector<std::size_t> degree(n, 1);
  for (Vertex x : seq) ++degree[x];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<statuslab::Edge> edges;
  for (Vertex x : seq) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, x);
    if (--degree[x] == 1) leaves.push(x);
  }
  const Vertex a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return edges;
}

// Isomorphism-class key for trees of order <= 16 from adjacency arrays:
// centers by leaf peeling, rooted AHU codes packed as bit strings
// (1 = descend, 0 = return) with children sorted by left-aligned value.
class CompactCanon {
 public:
  explicit CompactCanon(std::size_t n) : n_(n), adj_(n), deg_(n), code_(n), len_(n) {}

  std::uint64_t key(const std::vector<statuslab::Edge>& edges) {
    for (auto& a : adj_) a.clear();
    for (auto [u, v] : edges) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    if (n_ == 1) return 2;
    // Peel leaves until one or two vertices remain.
    std::vector<Vertex> layer;
    for (Vertex v = 0; v < n_; ++v) {
      deg_[v] = static_cast<int>(adj_[v].size());
      if (deg_[v] == 1) layer.push_back(v);
    }
    std::size_t remaining = n_;
    while (remaining > 2) {
      remaining -= layer.size();
      std::vector<Vertex> next;
      for (Vertex v : layer) {
        for (Vertex w : adj_[v]) {
          if (--deg_[w] == 1) next.push_back(w);
        }
      }
      layer.swap(next);
    }
    if (remaining == 1) {
      encode(layer[0], layer[0]);
      return code_[layer[0]];
    }
    const Vertex a = layer[0];
    const Vertex b = layer[1];
    encode(a, b);
    encode(b, a);
    auto lo = code_[a];
    auto hi = code_[b];
    if (aligned(a) > aligned(b)) std::swap(lo, hi);
    return (std::uint64_t{1} << 63) | (lo << 32) | hi;
  }

 private:
  std::uint64_t aligned(Vertex v) const { return code_[v] << (64 - len_[v]); }

  void encode(Vertex u, Vertex parent) {
    std::vector<Vertex> kids;
    for (Vertex w : adj_[u]) {
      if (w == parent) continue;
      encode(w, u);
      kids.push_back(w);
    }
    std::sort(kids.begin(), kids.end(),
              [&](Vertex x, Vertex y) { return aligned(x) > aligned(y); });
    std::uint64_t c = 1;
    int len = 1;
    for (Vertex k : kids) {
      c = (c << len_[k]) | code_[k];
      len += len_[k];
    }
    code_[u] = c << 1;
    len_[u] = len + 1;
  }

  std::size_t n_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<int> deg_;
  std::vector<std::uint64_t> code_;
  std::vector<int> len_;
};

inline std::uint64_t class_key(const Tree& t) {
  CompactCanon canon(t.order());
  return canon.key(t.edges());
}

// Number of isomorphism classes of order n, by decoding every Prufer
// sequence (n^(n-2) of them).
inline std::size_t prufer_class_count(std::size_t n) {
  if (n <= 2) return 1;
  std::unordered_set<std::uint64_t> classes;
  CompactCanon canon(n);
  std::vector<Vertex> seq(n - 2, 0);
  while (true) {
    classes.insert(canon.key(prufer_edges(seq, n)));
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) break;
  }
  return classes.size();
}

}  // namespace oracle
