#include "statuslab/status.hpp"

#include <algorithm>
#include <string>

#include "statuslab/error.hpp"

namespace statuslab {

std::string_view to_string(Selector sel) {
  switch (sel) {
    case Selector::kLeaves: return "leaves";
    case Selector::kInternal: return "internal";
    case Selector::kAll: return "all";
  }
  return "?";
}

Selector parse_selector(std::string_view name) {
  if (name == "leaves" || name == "L") return Selector::kLeaves;
  if (name == "internal" || name == "I") return Selector::kInternal;
  if (name == "all" || name == "V") return Selector::kAll;
  throw Error(ErrorCode::kMalformedInput, "unknown selector '" + std::string(name) + "'");
}

std::string_view to_string(CentroidMethod method) {
  switch (method) {
    case CentroidMethod::kBrute: return "brute";
    case CentroidMethod::kBranchWeight: return "branch_weight";
    case CentroidMethod::kHalfCondition: return "half_condition";
  }
  return "?";
}

VertexSet target_set(const Tree& t, Selector sel) {
  if (sel == Selector::kAll) {
    std::vector<Vertex> all(t.order());
    for (Vertex u = 0; u < t.order(); ++u) all[u] = u;
    return VertexSet(std::move(all), t.order());
  }
  auto partition = vertex_partition(t);
  if (sel == Selector::kLeaves) return std::move(partition.leaves);
  if (partition.internal.empty()) {
    throw Error(ErrorCode::kEmptyTargetSet, "tree of order " + std::to_string(t.order()) +
                                                " has no internal vertices");
  }
  return std::move(partition.internal);
}

namespace {

// Rooted view of the tree at vertex 0: BFS order and parent links. The
// rerooting passes walk `order` forwards (top-down) or backwards (bottom-up).
struct RootedView {
  std::vector<Vertex> order;
  std::vector<Vertex> parent;
};

RootedView root_at_zero(const Tree& t) {
  RootedView view;
  view.order.reserve(t.order());
  view.parent.assign(t.order(), 0);
  std::vector<char> seen(t.order(), 0);
  view.order.push_back(0);
  seen[0] = 1;
  for (std::size_t head = 0; head < view.order.size(); ++head) {
    const Vertex u = view.order[head];
    for (Vertex w : t.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        view.parent[w] = u;
        view.order.push_back(w);
      }
    }
  }
  return view;
}

// Number of members in each rooted subtree.
std::vector<std::size_t> subtree_counts(const RootedView& view, const VertexSet& members) {
  std::vector<std::size_t> count(view.order.size(), 0);
  for (Vertex v : members.members()) count[v] = 1;
  for (auto it = view.order.rbegin(); it != view.order.rend(); ++it) {
    if (*it != 0) count[view.parent[*it]] += count[*it];
  }
  return count;
}

}  // namespace

std::vector<Status> status_values(const Tree& t, const VertexSet& members) {
  if (members.empty()) throw Error(ErrorCode::kEmptyTargetSet, "A must be non-empty");
  if (members.universe_size() != t.order()) {
    throw Error(ErrorCode::kVertexOutOfRange, "member set built for a different tree");
  }
  const auto view = root_at_zero(t);
  const auto count = subtree_counts(view, members);
  const auto total = static_cast<Status>(members.size());

  // Pass 1: distance sum from each vertex to the members below it.
  std::vector<Status> below(t.order(), 0);
  for (auto it = view.order.rbegin(); it != view.order.rend(); ++it) {
    const Vertex u = *it;
    if (u != 0) below[view.parent[u]] += below[u] + static_cast<Status>(count[u]);
  }

  // Pass 2: moving the root from parent p to child c brings the count[c]
  // members below c one step closer and every other member one step farther.
  std::vector<Status> values(t.order(), 0);
  values[0] = below[0];
  for (std::size_t i = 1; i < view.order.size(); ++i) {
    const Vertex c = view.order[i];
    const auto inside = static_cast<Status>(count[c]);
    values[c] = values[view.parent[c]] + (total - inside) - inside;
  }
  return values;
}

StatusVector status_vector(const Tree& t, Selector sel) {
  return {sel, status_values(t, target_set(t, sel))};
}

std::vector<std::size_t> branch_weights(const Tree& t, Selector sel) {
  const auto members = target_set(t, sel);
  const auto view = root_at_zero(t);
  const auto count = subtree_counts(view, members);
  std::vector<std::size_t> weight(t.order(), 0);
  for (Vertex u = 0; u < t.order(); ++u) {
    if (u != 0) weight[u] = members.size() - count[u];
  }
  for (Vertex u = 1; u < t.order(); ++u) {
    auto& w = weight[view.parent[u]];
    w = std::max(w, count[u]);
  }
  return weight;
}

std::size_t branch_weight(const Tree& t, Vertex u, Selector sel) {
  if (u >= t.order()) throw Error(ErrorCode::kVertexOutOfRange, "vertex " + std::to_string(u));
  return branch_weights(t, sel)[u];
}

namespace {

template <typename Pred>
VertexSet select_vertices(std::size_t n, Pred pred) {
  std::vector<Vertex> chosen;
  for (Vertex u = 0; u < n; ++u) {
    if (pred(u)) chosen.push_back(u);
  }
  return VertexSet(std::move(chosen), n);
}

}  // namespace

CentroidReport extremes(const Tree& t, Selector sel) {
  const auto status = status_vector(t, sel);
  CentroidReport report;
  report.selector = sel;
  const auto [lo, hi] = std::minmax_element(status.values.begin(), status.values.end());
  report.min_value = *lo;
  report.max_value = *hi;
  report.min_set = select_vertices(t.order(), [&](Vertex u) { return status.values[u] == *lo; });
  report.max_set = select_vertices(t.order(), [&](Vertex u) { return status.values[u] == *hi; });
  report.branch_weights = branch_weights(t, sel);
  return report;
}

VertexSet a_centroid(const Tree& t, Selector sel, CentroidMethod method) {
  switch (method) {
    case CentroidMethod::kBrute:
      return extremes(t, sel).min_set;
    case CentroidMethod::kBranchWeight: {
      const auto bw = branch_weights(t, sel);
      const auto best = *std::min_element(bw.begin(), bw.end());
      return select_vertices(t.order(), [&](Vertex u) { return bw[u] == best; });
    }
    case CentroidMethod::kHalfCondition: {
      if (t.order() < 3 || sel == Selector::kAll) {
        throw Error(ErrorCode::kMethodPreconditionViolated,
                    "half condition needs n >= 3 and A = L(T) or I(T)");
      }
      const auto size = target_set(t, sel).size();
      const auto bw = branch_weights(t, sel);
      return select_vertices(t.order(), [&](Vertex u) { return 2 * bw[u] <= size; });
    }
  }
  throw Error(ErrorCode::kMethodPreconditionViolated, "unknown centroid method");
}

VertexSet peripherian(const Tree& t, Selector sel) { return extremes(t, sel).max_set; }

}  // namespace statuslab
