#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "statuslab/tree.hpp"

namespace statuslab {

enum class FamilyKind { kPath, kStar, kDoubleBroom, kBroom, kSpider, kDiamEvenExtremal };

std::string_view to_string(FamilyKind kind);

/// "kind:params", e.g. "double_broom:10,3,3" or "spider:1,2,3".
struct FamilySpec {
  FamilyKind kind = FamilyKind::kPath;
  std::vector<std::size_t> params;

  static FamilySpec parse(std::string_view text);
  std::string to_string() const;
};

Tree make_path(std::size_t n);
Tree make_star(std::size_t n);

/// T_{n;a,b}: centers of S_{a+1} and S_{b+1} joined by a path of length
/// n-a-b-1. Vertex 0 is the first center, vertex 1 the second, then the
/// inner path vertices, then the a leaves and the b leaves. Accepts any
/// a, b >= 1 with a + b <= n - 2; see double_broom_in_standard_range.
Tree make_double_broom(std::size_t n, std::size_t a, std::size_t b);

/// True when 2 <= a, b <= (n-2)/2, the range the family is defined on.
bool double_broom_in_standard_range(std::size_t n, std::size_t a, std::size_t b);

/// P_{n,a}: a star S_{a+1} whose center is a terminal vertex of P_{n-a}.
/// Vertex 0 is the star center, 1..n-a-1 continue the path, then the leaves.
Tree make_broom(std::size_t n, std::size_t a);

/// One center (vertex 0) with a pendant path per entry of `legs`. Fewer than
/// three legs is rejected unless allow_degenerate is set (the result is
/// then a path).
Tree make_spider(const std::vector<std::size_t>& legs, bool allow_degenerate = false);

/// Every tree of order n and diameter d (n - d even) attaining the maximum
/// minimum leaf status: T_{n;(n-d)/2,(n-d+2)/2} and, for d >= 4, each tree
/// obtained from T_{n-1,(n-d)/2} by adding a leaf at a degree-two vertex.
/// Deduplicated by canonical form and sorted by it.
std::vector<Tree> diam_even_extremal_family(std::size_t n, std::size_t d);

/// All trees named by a spec (one tree for every kind except
/// kDiamEvenExtremal).
std::vector<Tree> build_family(const FamilySpec& spec);

}  // namespace statuslab
