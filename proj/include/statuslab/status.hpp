#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "statuslab/tree.hpp"

namespace statuslab {

using Status = std::int64_t;

/// Which vertex subset A the A-status sums over.
enum class Selector { kLeaves, kInternal, kAll };

std::string_view to_string(Selector sel);
Selector parse_selector(std::string_view name);

/// A for the given selector. Throws EmptyTargetSet when A would be empty
/// (INTERNAL on a tree with fewer than three vertices) and TooSmall for
/// LEAVES on the single-vertex tree.
VertexSet target_set(const Tree& t, Selector sel);

struct StatusVector {
  Selector target_set = Selector::kAll;
  std::vector<Status> values;
};

/// values[u] = sum over v in A of d(u, v), by two-pass rerooting in O(n).
StatusVector status_vector(const Tree& t, Selector sel);

/// Same rerooting pass for an explicit non-empty member set.
std::vector<Status> status_values(const Tree& t, const VertexSet& members);

struct CentroidReport {
  Selector selector = Selector::kAll;
  Status min_value = 0;
  Status max_value = 0;
  VertexSet min_set;
  VertexSet max_set;
  std::vector<std::size_t> branch_weights;
};

/// Minimum and maximum A-status with their full witness sets. For LEAVES
/// these are ls/LS, for INTERNAL is/IS.
CentroidReport extremes(const Tree& t, Selector sel);

/// Largest number of A-members inside one component of T - u.
std::size_t branch_weight(const Tree& t, Vertex u, Selector sel);
std::vector<std::size_t> branch_weights(const Tree& t, Selector sel);

enum class CentroidMethod { kBrute, kBranchWeight, kHalfCondition };

std::string_view to_string(CentroidMethod method);

/// HALF_CONDITION returns {u : 2 bw(u) <= |A|} and is only defined for
/// n >= 3 with A = L(T) or I(T); other inputs raise MethodPreconditionViolated.
VertexSet a_centroid(const Tree& t, Selector sel, CentroidMethod method);

/// Vertices of maximum A-status.
VertexSet peripherian(const Tree& t, Selector sel);

}  // namespace statuslab
