#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "statuslab/tree.hpp"

namespace statuslab {

/// Label-invariant encoding of an isomorphism class: the AHU parenthesis
/// string of the tree rooted at its center (the smaller of the two rootings
/// when the center is an edge).
class CanonicalForm {
 public:
  CanonicalForm() = default;
  explicit CanonicalForm(std::string encoding) : encoding_(std::move(encoding)) {}

  const std::string& encoding() const { return encoding_; }

  auto operator<=>(const CanonicalForm&) const = default;
  bool operator==(const CanonicalForm&) const = default;

 private:
  std::string encoding_;
};

CanonicalForm canonical_form(const Tree& t);

struct TreeFilter {
  std::optional<std::size_t> diameter;
  std::optional<std::size_t> max_degree;

  bool accepts(const Tree& t) const;
};

inline constexpr std::size_t kDefaultCeiling = 18;

/// kDefaultCeiling unless STATUSLAB_CEILING holds a positive integer.
std::size_t enumeration_ceiling();

/// One tree per isomorphism class of order n, in a fixed order, generated
/// from canonical level sequences (Wright-Richmond-Odlyzko-McKay successor).
class TreeStream {
 public:
  /// Throws CeilingExceeded when n exceeds the ceiling (enumeration_ceiling()
  /// when none is given) and TooSmall for n = 0.
  explicit TreeStream(std::size_t n, TreeFilter filter = {},
                      std::optional<std::size_t> ceiling = std::nullopt);

  std::optional<Tree> next();

 private:
  bool advance();

  std::size_t n_;
  TreeFilter filter_;
  std::vector<std::size_t> layout_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Tree> enumerate_trees(std::size_t n, const TreeFilter& filter = {},
                                  std::optional<std::size_t> ceiling = std::nullopt);

/// Canonical forms of the stream in stream order, computed in fixed-size
/// batches by `workers` threads (0 = hardware concurrency).
std::vector<CanonicalForm> canonical_stream(std::size_t n, const TreeFilter& filter = {},
                                            std::size_t workers = 0);

/// Uniform labeled tree: a Prufer sequence whose entries are drawn from
/// std::mt19937_64 seeded with `seed`, reduced to 0..n-1 by rejection so the
/// result does not depend on the standard library's distributions.
Tree random_tree(std::size_t n, std::uint64_t seed);

}  // namespace statuslab
