#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "statuslab/enumeration.hpp"
#include "statuslab/status.hpp"
#include "statuslab/tree.hpp"

namespace statuslab {

enum class ParamSchema { kOrder, kOrderDiameter, kOrderMaxDegree };
enum class Direction { kLower, kUpper };

/// ls, LS, is, IS.
enum class Invariant { kMinLeafStatus, kMaxLeafStatus, kMinInternalStatus, kMaxInternalStatus };

std::string_view to_string(ParamSchema schema);
std::string_view to_string(Direction direction);
std::string_view to_string(Invariant invariant);

Status invariant_value(const Tree& t, Invariant invariant);

struct ClaimParams {
  std::size_t n = 0;
  std::optional<std::size_t> diameter;
  std::optional<std::size_t> max_degree;

  std::string to_string() const;
  bool operator==(const ClaimParams&) const = default;
};

using TreeTest = std::function<bool(const Tree&)>;

// A bound restricted to the trees in `scope`: inside the scope the invariant
// is on the right side of `bound`, with equality exactly on `characterization`.
struct Tier {
  Status bound = 0;
  TreeTest scope;
  TreeTest characterization;
};

struct Claim {
  std::string id;
  std::string statement;
  ParamSchema schema = ParamSchema::kOrder;
  Direction direction = Direction::kLower;
  Invariant invariant = Invariant::kMinLeafStatus;

  /// The theorem's hypotheses.
  std::function<bool(const ClaimParams&)> in_domain;
  /// Weaker condition under which bound() is still computable (exploratory mode).
  std::function<bool(const ClaimParams&)> defined;
  std::function<Status(const ClaimParams&)> bound;
  /// Builds the equality predicate for one parameter point (family members
  /// are constructed once and compared by canonical form).
  std::function<TreeTest(const ClaimParams&)> characterization;

  /// Non-empty for the layered small-value claims; tiers()[0] mirrors
  /// bound/characterization over the whole universe.
  std::function<std::vector<Tier>(const ClaimParams&)> tiers;
};

/// The bound claims, in a fixed order with unique ids.
const std::vector<Claim>& registry();
const Claim& find_claim(std::string_view id);

struct TierReport {
  Status bound = 0;
  std::size_t scope_size = 0;
  std::vector<CanonicalForm> violations;
  std::vector<CanonicalForm> extremal;
  bool characterization_agreement = true;
};

struct ClaimReport {
  std::string claim;
  ClaimParams params;
  std::size_t universe = 0;
  Status bound = 0;
  std::vector<CanonicalForm> violations;
  std::vector<CanonicalForm> extremal;
  std::vector<CanonicalForm> characterized;
  bool characterization_agreement = true;
  bool exploratory = false;
  double seconds = 0.0;
  std::vector<TierReport> tiers;

  bool certified() const { return violations.empty() && characterization_agreement; }
};

struct VerifyOptions {
  std::size_t workers = 0;  // 0 = hardware concurrency
  std::size_t batch_size = 64;
  bool exploratory = false;
  std::optional<std::size_t> ceiling;
};

/// Scans every tree of the claim's universe (all trees of order n, filtered
/// by diameter or maximum degree per the claim's schema). Throws OutOfDomain
/// when the params miss the hypotheses (unless exploratory and still
/// defined) and CeilingExceeded when n is above the enumeration ceiling.
ClaimReport verify(const Claim& claim, const ClaimParams& params, const VerifyOptions& options = {});
ClaimReport verify(std::string_view claim_id, const ClaimParams& params,
                   const VerifyOptions& options = {});

/// Valid d (or max degree) values for order n under the claim's hypotheses.
std::vector<std::size_t> secondary_domain(const Claim& claim, std::size_t n);

// Structural lemmas.

enum class LemmaId {
  kCentroidBranchWeight,
  kCentroidHalf,
  kLeafPeripherian,
  kInternalPeripherian,
  kLeafDeletedIdentity,
  kHangingShift,
};

std::string_view to_string(LemmaId id);
LemmaId parse_lemma(std::string_view name);

/// The five lemmas that are single-tree statements, swept over universes.
std::span<const LemmaId> structural_lemmas();

bool lemma_hypotheses_hold(LemmaId id, const Tree& t);

/// True iff the lemma's assertion holds on t. Throws HypothesisViolated
/// when t is outside the lemma's hypotheses. kHangingShift sweeps every
/// vertex u and every p >= q >= 1 with p + q <= max_shift_total.
bool check_structural_lemma(LemmaId id, const Tree& t, std::size_t max_shift_total = 6);
bool check_structural_lemma(std::string_view id, const Tree& t);

/// Hanging-path shift at one point: compares IS(T_{u;p+1,q-1}) with
/// IS(T_{u;p,q}); equality is predicted exactly when q >= 2 and T is a star
/// centered at u, strict increase otherwise.
bool check_hanging_shift(const Tree& t, Vertex u, std::size_t p, std::size_t q);

struct ShiftOutcome {
  Status before = 0;  // IS(T_{u;p,q})
  Status after = 0;   // IS(T_{u;p+1,q-1})
  bool equality_predicted = false;
};
ShiftOutcome hanging_shift_outcome(const Tree& t, Vertex u, std::size_t p, std::size_t q);

}  // namespace statuslab
