#include "statuslab/tree.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <queue>
#include <sstream>

#include "statuslab/error.hpp"

namespace statuslab {

VertexSet::VertexSet(std::vector<Vertex> members, std::size_t universe_size)
    : members_(std::move(members)), universe_size_(universe_size) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw Error(ErrorCode::kMalformedInput, "vertex set contains duplicates");
  }
  if (!members_.empty() && members_.back() >= universe_size_) {
    throw Error(ErrorCode::kVertexOutOfRange, "vertex set member outside universe");
  }
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

Tree::Tree() : adjacency_(1) {}

Tree::Tree(std::vector<std::vector<Vertex>> adjacency) : adjacency_(std::move(adjacency)) {}

Tree Tree::from_edges(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) throw Error(ErrorCode::kTooSmall, "a tree needs at least one vertex");
  if (edges.size() != n - 1) {
    throw Error(ErrorCode::kNotATree, "expected " + std::to_string(n - 1) + " edges, got " +
                                          std::to_string(edges.size()));
  }
  std::vector<std::vector<Vertex>> adjacency(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "edge {" + std::to_string(u) + "," + std::to_string(v) + "} outside 0.." +
                      std::to_string(n - 1));
    }
    if (u == v) throw Error(ErrorCode::kNotATree, "self-loop at " + std::to_string(u));
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  for (auto& row : adjacency) {
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end()) {
      throw Error(ErrorCode::kNotATree, "duplicate edge");
    }
  }

  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : adjacency[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) {
    throw Error(ErrorCode::kNotATree, "graph is disconnected (" + std::to_string(reached) +
                                          " of " + std::to_string(n) +
                                          " vertices reachable), so it contains a cycle");
  }
  return Tree(std::move(adjacency));
}

std::size_t Tree::max_degree() const {
  std::size_t best = 0;
  for (const auto& row : adjacency_) best = std::max(best, row.size());
  return best;
}

std::vector<Edge> Tree::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::uint32_t DistanceTable::max_entry() const {
  return cells_.empty() ? 0 : *std::max_element(cells_.begin(), cells_.end());
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    const auto start = line.find_first_not_of(" \t", pos);
    if (start == std::string_view::npos) break;
    auto end = line.find_first_of(" \t", start);
    if (end == std::string_view::npos) end = line.size();
    tokens.push_back(line.substr(start, end - start));
    pos = end;
  }
  return tokens;
}

std::size_t parse_count(std::string_view token, std::size_t line_no) {
  std::size_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::kMalformedInput, "line " + std::to_string(line_no) +
                                                ": bad integer '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Tree parse_edge_list(std::string_view text) {
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const auto line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    const auto tokens = split_tokens(line);
    if (!n) {
      if (tokens.size() != 1) {
        throw Error(ErrorCode::kMalformedInput, "first line must hold the vertex count");
      }
      n = parse_count(tokens[0], line_no);
      if (*n == 0) throw Error(ErrorCode::kMalformedInput, "vertex count must be positive");
      continue;
    }
    if (tokens.size() != 2) {
      throw Error(ErrorCode::kMalformedInput,
                  "line " + std::to_string(line_no) + ": expected \"u v\"");
    }
    const auto u = parse_count(tokens[0], line_no);
    const auto v = parse_count(tokens[1], line_no);
    if (u >= *n || v >= *n) {
      throw Error(ErrorCode::kMalformedInput,
                  "line " + std::to_string(line_no) + ": vertex id out of range");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!n) throw Error(ErrorCode::kMalformedInput, "empty input");
  return Tree::from_edges(*n, edges);
}

std::string to_edge_list(const Tree& t) {
  std::ostringstream out;
  out << t.order() << '\n';
  for (const auto& [u, v] : t.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Tree from_prufer(std::span<const Vertex> seq, std::size_t n) {
  if (n < 2 || seq.size() != n - 2) {
    throw Error(ErrorCode::kBadLength, "Prufer sequence for n=" + std::to_string(n) +
                                           " needs n-2 entries and n >= 2");
  }
  std::vector<std::size_t> degree(n, 1);
  for (Vertex x : seq) {
    if (x >= n) throw Error(ErrorCode::kLabelOutOfRange, "label " + std::to_string(x));
    ++degree[x];
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  std::size_t leaf = ptr;
  for (Vertex x : seq) {
    edges.emplace_back(static_cast<Vertex>(leaf), x);
    if (--degree[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(static_cast<Vertex>(leaf), static_cast<Vertex>(n - 1));
  return Tree::from_edges(n, edges);
}

std::vector<Vertex> to_prufer(const Tree& t) {
  const std::size_t n = t.order();
  if (n < 2) throw Error(ErrorCode::kTooSmall, "Prufer code needs n >= 2");
  std::vector<Vertex> parent(n, 0);
  std::vector<Vertex> stack{static_cast<Vertex>(n - 1)};
  std::vector<char> seen(n, 0);
  seen[n - 1] = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : t.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = u;
        stack.push_back(w);
      }
    }
  }
  std::vector<std::size_t> degree(n);
  for (Vertex u = 0; u < n; ++u) degree[u] = t.degree(u);

  std::vector<Vertex> seq;
  seq.reserve(n - 2);
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  std::size_t leaf = ptr;
  for (std::size_t i = 0; i + 2 < n; ++i) {
    const Vertex next = parent[leaf];
    seq.push_back(next);
    if (--degree[next] == 1 && next < ptr) {
      leaf = next;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  return seq;
}

std::vector<std::uint32_t> bfs_distances(const Tree& t, Vertex source) {
  constexpr auto kUnseen = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> dist(t.order(), kUnseen);
  std::queue<Vertex> frontier;
  dist.at(source) = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const Vertex u = frontier.front();
    frontier.pop();
    for (Vertex w : t.neighbors(u)) {
      if (dist[w] == kUnseen) {
        dist[w] = dist[u] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

DistanceTable all_pairs_distances(const Tree& t) {
  DistanceTable table(t.order());
  for (Vertex u = 0; u < t.order(); ++u) {
    const auto row = bfs_distances(t, u);
    for (Vertex v = 0; v < t.order(); ++v) table.at(u, v) = row[v];
  }
  return table;
}

VertexPartition vertex_partition(const Tree& t) {
  if (t.order() < 2) throw Error(ErrorCode::kTooSmall, "leaves are undefined for n=1");
  std::vector<Vertex> leaves;
  std::vector<Vertex> internal;
  for (Vertex u = 0; u < t.order(); ++u) {
    (t.degree(u) == 1 ? leaves : internal).push_back(u);
  }
  return {VertexSet(std::move(leaves), t.order()), VertexSet(std::move(internal), t.order())};
}

std::vector<Vertex> diametric_path(const Tree& t) {
  auto farthest = [](const std::vector<std::uint32_t>& dist) {
    return static_cast<Vertex>(std::max_element(dist.begin(), dist.end()) - dist.begin());
  };
  const Vertex a = farthest(bfs_distances(t, 0));
  const auto from_a = bfs_distances(t, a);
  Vertex cur = farthest(from_a);
  std::vector<Vertex> path{cur};
  while (cur != a) {
    for (Vertex w : t.neighbors(cur)) {
      if (from_a[w] + 1 == from_a[cur]) {
        cur = w;
        break;
      }
    }
    path.push_back(cur);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::size_t diameter(const Tree& t) { return diametric_path(t).size() - 1; }

StructureFlags classify(const Tree& t) {
  const std::size_t n = t.order();
  if (n < 2) throw Error(ErrorCode::kTooSmall, "classify needs n >= 2");
  StructureFlags flags;
  flags.diameter = diameter(t);
  flags.max_degree = t.max_degree();
  flags.is_path = flags.max_degree <= 2;
  flags.is_star = n == 2 || flags.max_degree == n - 1;
  flags.is_double_star = flags.diameter == 3;

  std::size_t branching = 0;
  for (Vertex u = 0; u < n; ++u) {
    if (t.degree(u) > 2) ++branching;
  }
  flags.is_starlike = branching <= 1;

  // The internal vertices induce a subtree; it is a path iff no internal
  // vertex has three or more internal neighbours.
  flags.is_caterpillar = true;
  for (Vertex u = 0; u < n && flags.is_caterpillar; ++u) {
    if (t.degree(u) == 1) continue;
    std::size_t internal_neighbors = 0;
    for (Vertex w : t.neighbors(u)) {
      if (t.degree(w) > 1) ++internal_neighbors;
    }
    if (internal_neighbors > 2) flags.is_caterpillar = false;
  }
  return flags;
}

Tree attach_path(const Tree& t, Vertex u, std::size_t p) {
  if (u >= t.order()) throw Error(ErrorCode::kVertexOutOfRange, "attach vertex " + std::to_string(u));
  if (p == 0) throw Error(ErrorCode::kNonPositiveLength, "path length must be >= 1");
  auto edges = t.edges();
  Vertex prev = u;
  for (std::size_t i = 0; i < p; ++i) {
    const auto next = static_cast<Vertex>(t.order() + i);
    edges.emplace_back(prev, next);
    prev = next;
  }
  return Tree::from_edges(t.order() + p, edges);
}

std::vector<std::size_t> hanging_path_lengths(const Tree& t, Vertex u) {
  if (u >= t.order()) throw Error(ErrorCode::kVertexOutOfRange, "vertex " + std::to_string(u));
  std::vector<std::size_t> lengths;
  if (t.degree(u) < 3) return lengths;
  for (Vertex first : t.neighbors(u)) {
    Vertex prev = u;
    Vertex cur = first;
    std::size_t length = 1;
    while (t.degree(cur) == 2) {
      const auto nbrs = t.neighbors(cur);
      const Vertex next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
      prev = cur;
      cur = next;
      ++length;
    }
    if (t.degree(cur) == 1) lengths.push_back(length);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

Tree delete_leaves(const Tree& t) {
  if (t.order() < 3) throw Error(ErrorCode::kTooSmall, "deleting all leaves needs n >= 3");
  constexpr auto kDropped = static_cast<Vertex>(-1);
  std::vector<Vertex> relabel(t.order(), kDropped);
  Vertex next = 0;
  for (Vertex u = 0; u < t.order(); ++u) {
    if (t.degree(u) > 1) relabel[u] = next++;
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : t.edges()) {
    if (relabel[u] != kDropped && relabel[v] != kDropped) edges.emplace_back(relabel[u], relabel[v]);
  }
  return Tree::from_edges(next, edges);
}

}  // namespace statuslab
