#include "statuslab/enumeration.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <random>
#include <string_view>

#include "parallel.hpp"
#include "statuslab/error.hpp"

namespace statuslab {

namespace {

std::string encode_rooted(const Tree& t, Vertex root) {
  const std::size_t n = t.order();
  std::vector<Vertex> order{root};
  std::vector<Vertex> parent(n, root);
  order.reserve(n);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Vertex u = order[head];
    for (Vertex w : t.neighbors(u)) {
      if (w != parent[u]) {
        parent[w] = u;
        order.push_back(w);
      }
    }
  }
  std::vector<std::string> code(n);
  std::vector<std::vector<Vertex>> children(n);
  for (std::size_t i = 1; i < order.size(); ++i) children[parent[order[i]]].push_back(order[i]);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex u = *it;
    std::vector<std::string> parts;
    parts.reserve(children[u].size());
    for (Vertex c : children[u]) parts.push_back(std::move(code[c]));
    std::sort(parts.begin(), parts.end());
    std::string& out = code[u];
    out.push_back('(');
    for (const auto& part : parts) out += part;
    out.push_back(')');
  }
  return std::move(code[root]);
}

}  // namespace

CanonicalForm canonical_form(const Tree& t) {
  const auto path = diametric_path(t);
  const std::size_t length = path.size() - 1;
  auto best = encode_rooted(t, path[length / 2]);
  if (length % 2 == 1) {
    auto other = encode_rooted(t, path[length / 2 + 1]);
    if (other < best) best = std::move(other);
  }
  return CanonicalForm(std::move(best));
}

bool TreeFilter::accepts(const Tree& t) const {
  if (max_degree && t.max_degree() != *max_degree) return false;
  if (diameter && statuslab::diameter(t) != *diameter) return false;
  return true;
}

std::size_t enumeration_ceiling() {
  if (const char* raw = std::getenv("STATUSLAB_CEILING")) {
    const std::string_view text(raw);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc() && ptr == text.data() + text.size() && value > 0) return value;
  }
  return kDefaultCeiling;
}

namespace {

using Layout = std::vector<std::size_t>;

// Successor of a canonical rooted level sequence (Beyer-Hedetniemi). With a
// position hint the search for the rightmost non-unit level is skipped.
bool next_rooted_tree(Layout& seq, std::optional<std::size_t> hint = std::nullopt) {
  std::size_t p = 0;
  if (hint) {
    p = *hint;
  } else {
    p = seq.size() - 1;
    while (seq[p] == 1) --p;
  }
  if (p == 0) return false;
  std::size_t q = p - 1;
  while (seq[q] != seq[p] - 1) --q;
  for (std::size_t i = p; i < seq.size(); ++i) seq[i] = seq[i - p + q];
  return true;
}

// Left subtree of the root (levels shifted up by one) and the remainder.
std::pair<Layout, Layout> split_tree(const Layout& seq) {
  std::size_t m = seq.size();
  bool one_found = false;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] != 1) continue;
    if (one_found) {
      m = i;
      break;
    }
    one_found = true;
  }
  Layout left;
  for (std::size_t i = 1; i < m; ++i) left.push_back(seq[i] - 1);
  Layout rest{0};
  rest.insert(rest.end(), seq.begin() + static_cast<std::ptrdiff_t>(m), seq.end());
  return {std::move(left), std::move(rest)};
}

// Moves seq to the first sequence at or after it that is the canonical
// centered representative of a free tree.
void next_free_tree(Layout& seq) {
  const auto [left, rest] = split_tree(seq);
  const auto left_height = *std::max_element(left.begin(), left.end());
  const auto rest_height = *std::max_element(rest.begin(), rest.end());
  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (left.size() > rest.size()) {
      valid = false;
    } else if (left.size() == rest.size() && left > rest) {
      valid = false;
    }
  }
  if (valid) return;

  const std::size_t p = left.size();
  const bool deep = seq[p] > 2;
  next_rooted_tree(seq, p);
  if (deep) {
    const auto new_left = split_tree(seq).first;
    const auto height = *std::max_element(new_left.begin(), new_left.end());
    const std::size_t tail = height + 1;
    for (std::size_t k = 0; k < tail; ++k) seq[seq.size() - tail + k] = k + 1;
  }
}

Tree layout_to_tree(const Layout& seq) {
  std::vector<Edge> edges;
  edges.reserve(seq.size() - 1);
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!stack.empty()) {
      while (seq[stack.back()] >= seq[i]) stack.pop_back();
      edges.emplace_back(static_cast<Vertex>(stack.back()), static_cast<Vertex>(i));
    }
    stack.push_back(i);
  }
  return Tree::from_edges(seq.size(), edges);
}

}  // namespace

TreeStream::TreeStream(std::size_t n, TreeFilter filter, std::optional<std::size_t> ceiling)
    : n_(n), filter_(filter) {
  if (n == 0) throw Error(ErrorCode::kTooSmall, "tree order must be >= 1");
  const std::size_t limit = ceiling.value_or(enumeration_ceiling());
  if (n > limit) {
    throw Error(ErrorCode::kCeilingExceeded, "order " + std::to_string(n) +
                                                 " exceeds enumeration ceiling " +
                                                 std::to_string(limit));
  }
}

bool TreeStream::advance() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    if (n_ == 1) return true;
    // Path rooted at its center.
    for (std::size_t i = 0; i <= n_ / 2; ++i) layout_.push_back(i);
    for (std::size_t i = 1; i < (n_ + 1) / 2; ++i) layout_.push_back(i);
  } else if (n_ == 1 || !next_rooted_tree(layout_)) {
    done_ = true;
    return false;
  }
  next_free_tree(layout_);
  return true;
}

std::optional<Tree> TreeStream::next() {
  while (advance()) {
    Tree t = n_ == 1 ? Tree() : layout_to_tree(layout_);
    if (filter_.accepts(t)) return t;
  }
  return std::nullopt;
}

std::vector<Tree> enumerate_trees(std::size_t n, const TreeFilter& filter,
                                  std::optional<std::size_t> ceiling) {
  TreeStream stream(n, filter, ceiling);
  std::vector<Tree> out;
  while (auto t = stream.next()) out.push_back(std::move(*t));
  return out;
}

std::vector<CanonicalForm> canonical_stream(std::size_t n, const TreeFilter& filter,
                                            std::size_t workers) {
  const auto trees = enumerate_trees(n, filter);
  std::vector<CanonicalForm> forms(trees.size());
  detail::for_each_batch(trees.size(), 256, workers,
                         [&](std::size_t, std::size_t begin, std::size_t end) {
                           for (std::size_t i = begin; i < end; ++i) {
                             forms[i] = canonical_form(trees[i]);
                           }
                         });
  return forms;
}

Tree random_tree(std::size_t n, std::uint64_t seed) {
  if (n < 2) throw Error(ErrorCode::kTooSmall, "random_tree needs n >= 2");
  std::mt19937_64 gen(seed);
  const std::uint64_t bound = n;
  const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod n
  std::vector<Vertex> seq(n - 2);
  for (auto& x : seq) {
    std::uint64_t draw = gen();
    while (draw < threshold) draw = gen();
    x = static_cast<Vertex>(draw % bound);
  }
  return from_prufer(seq, n);
}

}  // namespace statuslab
