#include "statuslab/claims.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "parallel.hpp"
#include "statuslab/error.hpp"
#include "statuslab/families.hpp"

namespace statuslab {

std::string_view to_string(ParamSchema schema) {
  switch (schema) {
    case ParamSchema::kOrder: return "n";
    case ParamSchema::kOrderDiameter: return "n,d";
    case ParamSchema::kOrderMaxDegree: return "n,max_degree";
  }
  return "?";
}

std::string_view to_string(Direction direction) {
  return direction == Direction::kLower ? "lower" : "upper";
}

std::string_view to_string(Invariant invariant) {
  switch (invariant) {
    case Invariant::kMinLeafStatus: return "ls";
    case Invariant::kMaxLeafStatus: return "LS";
    case Invariant::kMinInternalStatus: return "is";
    case Invariant::kMaxInternalStatus: return "IS";
  }
  return "?";
}

Status invariant_value(const Tree& t, Invariant invariant) {
  switch (invariant) {
    case Invariant::kMinLeafStatus: return extremes(t, Selector::kLeaves).min_value;
    case Invariant::kMaxLeafStatus: return extremes(t, Selector::kLeaves).max_value;
    case Invariant::kMinInternalStatus: return extremes(t, Selector::kInternal).min_value;
    case Invariant::kMaxInternalStatus: return extremes(t, Selector::kInternal).max_value;
  }
  return 0;
}

std::string ClaimParams::to_string() const {
  std::string out = "n=" + std::to_string(n);
  if (diameter) out += " d=" + std::to_string(*diameter);
  if (max_degree) out += " max_degree=" + std::to_string(*max_degree);
  return out;
}

namespace {

using Int = Status;

Int floor_div(Int a, Int b) { return a / b; }
Int ceil_div(Int a, Int b) { return (a + b - 1) / b; }

Int n_of(const ClaimParams& p) { return static_cast<Int>(p.n); }
Int d_of(const ClaimParams& p) { return static_cast<Int>(p.diameter.value_or(0)); }
Int delta_of(const ClaimParams& p) { return static_cast<Int>(p.max_degree.value_or(0)); }

// Membership in a fixed list of isomorphism classes. Family members that
// cannot be built for the given parameters (possible only in exploratory
// mode) are simply absent.
TreeTest one_of(const std::function<std::vector<Tree>()>& build) {
  std::set<CanonicalForm> forms;
  try {
    for (const auto& t : build()) forms.insert(canonical_form(t));
  } catch (const Error&) {
  }
  return [forms = std::move(forms)](const Tree& t) { return forms.contains(canonical_form(t)); };
}

TreeTest always(bool value) {
  return [value](const Tree&) { return value; };
}

bool is_starlike(const Tree& t) { return t.order() < 2 || classify(t).is_starlike; }
bool is_path(const Tree& t) { return t.max_degree() <= 2; }
bool is_star(const Tree& t) { return t.order() <= 2 || t.max_degree() == t.order() - 1; }
bool is_caterpillar(const Tree& t) { return t.order() < 2 || classify(t).is_caterpillar; }

bool is_double_star(const Tree& t) { return t.order() >= 4 && diameter(t) == 3; }

bool is_caterpillar_of_diameter_four(const Tree& t) {
  if (t.order() < 5) return false;
  const auto flags = classify(t);
  return flags.is_caterpillar && flags.diameter == 4;
}

// Minimum-LS shape for given diameter: some diametric path x..y such that
// every off-path vertex has degree <= 2, exactly `hanging` paths hang from
// the path, and the endpoint leaf statuses are balanced against LS.
bool balanced_hanging_shape(const Tree& t, std::size_t hanging) {
  const std::size_t n = t.order();
  const auto dist = all_pairs_distances(t);
  const std::size_t diam = dist.max_entry();
  const auto leaf_status = status_vector(t, Selector::kLeaves).values;
  const Status ls_max = *std::max_element(leaf_status.begin(), leaf_status.end());
  const bool even = (diam * hanging) % 2 == 0;

  for (Vertex x = 0; x < n; ++x) {
    if (t.degree(x) != 1) continue;
    for (Vertex y = x + 1; y < n; ++y) {
      if (t.degree(y) != 1 || dist.at(x, y) != diam) continue;
      std::vector<char> on_path(n, 0);
      for (Vertex v = 0; v < n; ++v) on_path[v] = dist.at(x, v) + dist.at(v, y) == diam;

      bool off_path_thin = true;
      std::size_t branches = 0;
      for (Vertex v = 0; v < n; ++v) {
        if (!on_path[v]) {
          off_path_thin = off_path_thin && t.degree(v) <= 2;
          continue;
        }
        for (Vertex w : t.neighbors(v)) branches += on_path[w] ? 0 : 1;
      }
      if (!off_path_thin || branches != hanging) continue;

      const Status sx = leaf_status[x];
      const Status sy = leaf_status[y];
      const bool balanced = even ? (ls_max == sx && ls_max == sy)
                                 : (ls_max == std::max(sx, sy) && (sx > sy ? sx - sy : sy - sx) == 1);
      if (balanced) return true;
    }
  }
  return false;
}

// t in the minimum-LS-by-diameter bound.
Int hanging_count(Int n, Int d) {
  const Int slack = 2 * (n - 1 - d);
  return d % 2 == 0 ? ceil_div(slack, d) : ceil_div(slack, d - 1);
}

bool starlike_with_short_legs(const Tree& t, std::size_t max_degree) {
  if (!is_starlike(t) || t.max_degree() != max_degree) return false;
  if (max_degree <= 2) return true;
  Vertex center = 0;
  while (t.degree(center) != max_degree) ++center;
  const auto legs = hanging_path_lengths(t, center);
  const auto unit = static_cast<std::size_t>(std::count(legs.begin(), legs.end(), 1));
  return unit + 2 >= max_degree;
}

bool order_at_least(const ClaimParams& p, std::size_t n) { return p.n >= n; }

bool diameter_between(const ClaimParams& p, std::size_t lo) {
  return p.diameter && *p.diameter >= lo && *p.diameter + 1 <= p.n;
}

bool max_degree_between(const ClaimParams& p, std::size_t lo) {
  return p.max_degree && *p.max_degree >= lo && *p.max_degree + 1 <= p.n;
}

Claim order_claim(std::string id, std::string statement, Direction direction, Invariant invariant,
                  std::size_t min_order, std::size_t defined_order,
                  std::function<Status(const ClaimParams&)> bound,
                  std::function<TreeTest(const ClaimParams&)> characterization) {
  Claim c;
  c.id = std::move(id);
  c.statement = std::move(statement);
  c.schema = ParamSchema::kOrder;
  c.direction = direction;
  c.invariant = invariant;
  c.in_domain = [min_order](const ClaimParams& p) {
    return order_at_least(p, min_order) && !p.diameter && !p.max_degree;
  };
  c.defined = [defined_order](const ClaimParams& p) {
    return order_at_least(p, defined_order) && !p.diameter && !p.max_degree;
  };
  c.bound = std::move(bound);
  c.characterization = std::move(characterization);
  return c;
}

Claim diameter_claim(std::string id, std::string statement, Direction direction,
                     Invariant invariant, std::size_t min_diameter, std::size_t defined_diameter,
                     std::function<Status(const ClaimParams&)> bound,
                     std::function<TreeTest(const ClaimParams&)> characterization) {
  Claim c;
  c.id = std::move(id);
  c.statement = std::move(statement);
  c.schema = ParamSchema::kOrderDiameter;
  c.direction = direction;
  c.invariant = invariant;
  c.in_domain = [min_diameter](const ClaimParams& p) {
    return diameter_between(p, min_diameter) && !p.max_degree;
  };
  c.defined = [defined_diameter](const ClaimParams& p) {
    return diameter_between(p, defined_diameter) && !p.max_degree;
  };
  c.bound = std::move(bound);
  c.characterization = std::move(characterization);
  return c;
}

std::vector<Claim> build_registry() {
  std::vector<Claim> claims;
  const auto min = Direction::kLower;
  const auto max = Direction::kUpper;

  claims.push_back(order_claim(
      "ls_min_global", "ls(T) >= n-1, equality iff T is starlike", min,
      Invariant::kMinLeafStatus, 2, 2, [](const ClaimParams& p) { return n_of(p) - 1; },
      [](const ClaimParams&) -> TreeTest { return is_starlike; }));

  claims.push_back(order_claim(
      "ls_max_global",
      "ls(T) <= floor((n+1)^2/8) for n >= 6, equality iff T is T_{n,ceil(n/4)} "
      "(n even or n = 3 mod 4) or T_{n,(n-1)/4}, T_{n,(n+3)/4} (n = 1 mod 4)",
      max, Invariant::kMinLeafStatus, 6, 2,
      [](const ClaimParams& p) { return floor_div((n_of(p) + 1) * (n_of(p) + 1), 8); },
      [](const ClaimParams& p) -> TreeTest {
        const std::size_t n = p.n;
        return one_of([n] {
          if (n % 4 == 1) {
            return std::vector<Tree>{make_double_broom(n, (n - 1) / 4, (n - 1) / 4),
                                     make_double_broom(n, (n + 3) / 4, (n + 3) / 4)};
          }
          const std::size_t a = (n + 3) / 4;
          return std::vector<Tree>{make_double_broom(n, a, a)};
        });
      }));

  claims.push_back(diameter_claim(
      "ls_max_diameter",
      "ls(T) <= (n-d+1)d/2 if n-d odd, (n-d)d/2+1 if n-d even (3 <= d <= n-1); equality iff "
      "T_{n,(n-d+1)/2} (odd) or T_{n;(n-d)/2,(n-d+2)/2} or, for d >= 4, T_{n-1,(n-d)/2} plus a "
      "leaf at a degree-two vertex (even)",
      max, Invariant::kMinLeafStatus, 3, 3,
      [](const ClaimParams& p) {
        const Int n = n_of(p);
        const Int d = d_of(p);
        return (n - d) % 2 == 1 ? (n - d + 1) * d / 2 : (n - d) * d / 2 + 1;
      },
      [](const ClaimParams& p) -> TreeTest {
        const std::size_t n = p.n;
        const std::size_t d = *p.diameter;
        return one_of([n, d] {
          if ((n - d) % 2 == 1) {
            const std::size_t a = (n - d + 1) / 2;
            return std::vector<Tree>{make_double_broom(n, a, a)};
          }
          return diam_even_extremal_family(n, d);
        });
      }));

  claims.push_back(order_claim(
      "LS_min_global", "LS(T) >= n-1, equality iff T is the path", min,
      Invariant::kMaxLeafStatus, 2, 2, [](const ClaimParams& p) { return n_of(p) - 1; },
      [](const ClaimParams&) -> TreeTest { return is_path; }));

  claims.push_back(order_claim(
      "LS_max_global",
      "LS(T) <= floor(n^2/4) for n >= 4, equality iff T is P_{n,n/2} (n even) or "
      "P_{n,(n-1)/2}, P_{n,(n+1)/2} (n odd)",
      max, Invariant::kMaxLeafStatus, 4, 3,
      [](const ClaimParams& p) { return floor_div(n_of(p) * n_of(p), 4); },
      [](const ClaimParams& p) -> TreeTest {
        const std::size_t n = p.n;
        return one_of([n] {
          if (n % 2 == 0) return std::vector<Tree>{make_broom(n, n / 2)};
          return std::vector<Tree>{make_broom(n, (n - 1) / 2), make_broom(n, (n + 1) / 2)};
        });
      }));

  claims.push_back(diameter_claim(
      "LS_min_diameter",
      "LS(T) >= n-1+ceil(dt/2) with t = ceil(2(n-1-d)/d) (d even) or ceil(2(n-1-d)/(d-1)) "
      "(d odd); equality iff some diametric path x..y carries exactly t hanging paths, every "
      "off-path vertex has degree <= 2, and LS = s(x) = s(y) (dt even) or LS = max(s(x), s(y)) "
      "with |s(x) - s(y)| = 1 (dt odd)",
      min, Invariant::kMaxLeafStatus, 2, 2,
      [](const ClaimParams& p) {
        const Int n = n_of(p);
        const Int d = d_of(p);
        return n - 1 + ceil_div(d * hanging_count(n, d), 2);
      },
      [](const ClaimParams& p) -> TreeTest {
        const auto hanging = static_cast<std::size_t>(hanging_count(n_of(p), d_of(p)));
        return [hanging](const Tree& t) { return balanced_hanging_shape(t, hanging); };
      }));

  claims.push_back(diameter_claim(
      "LS_max_diameter", "LS(T) <= d(n-d) (2 <= d <= n-1), equality iff T is P_{n,n-d}", max,
      Invariant::kMaxLeafStatus, 2, 2,
      [](const ClaimParams& p) { return d_of(p) * (n_of(p) - d_of(p)); },
      [](const ClaimParams& p) -> TreeTest {
        const std::size_t n = p.n;
        const std::size_t d = *p.diameter;
        return one_of([n, d] { return std::vector<Tree>{make_broom(n, n - d)}; });
      }));

  {
    auto c = order_claim(
        "is_small_cases",
        "is(T) >= 0 with equality iff star; otherwise >= 1 with equality iff double star; "
        "otherwise >= 2 with equality iff caterpillar of diameter 4",
        min, Invariant::kMinInternalStatus, 3, 3, [](const ClaimParams&) -> Status { return 0; },
        [](const ClaimParams&) -> TreeTest { return is_star; });
    c.tiers = [](const ClaimParams&) {
      const TreeTest not_star = [](const Tree& t) { return !is_star(t); };
      const TreeTest neither = [](const Tree& t) { return !is_star(t) && !is_double_star(t); };
      return std::vector<Tier>{{0, always(true), is_star},
                               {1, not_star, is_double_star},
                               {2, neither, is_caterpillar_of_diameter_four}};
    };
    claims.push_back(std::move(c));
  }

  claims.push_back(diameter_claim(
      "is_min_diameter", "is(T) >= floor((d-1)^2/4), equality iff T is a caterpillar", min,
      Invariant::kMinInternalStatus, 2, 2,
      [](const ClaimParams& p) { return floor_div((d_of(p) - 1) * (d_of(p) - 1), 4); },
      [](const ClaimParams&) -> TreeTest { return is_caterpillar; }));

  claims.push_back(order_claim(
      "is_max_global", "is(T) <= floor((n-2)^2/4), equality iff T is the path", max,
      Invariant::kMinInternalStatus, 3, 3,
      [](const ClaimParams& p) { return floor_div((n_of(p) - 2) * (n_of(p) - 2), 4); },
      [](const ClaimParams&) -> TreeTest { return is_path; }));

  {
    auto c = order_claim(
        "IS_small_cases",
        "IS(T) >= 1 with equality iff star; otherwise >= 3 with equality iff double star; "
        "otherwise >= 6 with equality iff caterpillar of diameter 4",
        min, Invariant::kMaxInternalStatus, 3, 3, [](const ClaimParams&) -> Status { return 1; },
        [](const ClaimParams&) -> TreeTest { return is_star; });
    c.tiers = [](const ClaimParams&) {
      const TreeTest not_star = [](const Tree& t) { return !is_star(t); };
      const TreeTest neither = [](const Tree& t) { return !is_star(t) && !is_double_star(t); };
      return std::vector<Tier>{{1, always(true), is_star},
                               {3, not_star, is_double_star},
                               {6, neither, is_caterpillar_of_diameter_four}};
    };
    claims.push_back(std::move(c));
  }

  claims.push_back(diameter_claim(
      "IS_min_diameter", "IS(T) >= d(d-1)/2, equality iff T is a caterpillar", min,
      Invariant::kMaxInternalStatus, 2, 2,
      [](const ClaimParams& p) { return d_of(p) * (d_of(p) - 1) / 2; },
      [](const ClaimParams&) -> TreeTest { return is_caterpillar; }));

  claims.push_back(order_claim(
      "IS_max_global", "IS(T) <= (n^2-3n+2)/2, equality iff T is the path", max,
      Invariant::kMaxInternalStatus, 3, 3,
      [](const ClaimParams& p) { return (n_of(p) * n_of(p) - 3 * n_of(p) + 2) / 2; },
      [](const ClaimParams&) -> TreeTest { return is_path; }));

  {
    Claim c;
    c.id = "IS_max_maxdeg";
    c.statement =
        "IS(T) <= (n-D)(n-D+1)/2 for maximum degree D, equality iff T is starlike with at least "
        "D-2 hanging paths of length one";
    c.schema = ParamSchema::kOrderMaxDegree;
    c.direction = max;
    c.invariant = Invariant::kMaxInternalStatus;
    c.in_domain = [](const ClaimParams& p) { return max_degree_between(p, 2) && !p.diameter; };
    c.defined = c.in_domain;
    c.bound = [](const ClaimParams& p) {
      const Int gap = n_of(p) - delta_of(p);
      return gap * (gap + 1) / 2;
    };
    c.characterization = [](const ClaimParams& p) -> TreeTest {
      const std::size_t delta = *p.max_degree;
      return [delta](const Tree& t) { return starlike_with_short_legs(t, delta); };
    };
    claims.push_back(std::move(c));
  }
  return claims;
}

struct TierPartial {
  std::size_t scope_size = 0;
  std::vector<CanonicalForm> violations;
  std::vector<CanonicalForm> extremal;
  std::vector<CanonicalForm> characterized;
};

std::vector<CanonicalForm> sorted_union(std::vector<CanonicalForm> forms) {
  std::sort(forms.begin(), forms.end());
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
  return forms;
}

template <typename T>
void append(std::vector<T>& into, const std::vector<T>& from) {
  into.insert(into.end(), from.begin(), from.end());
}

}  // namespace

const std::vector<Claim>& registry() {
  static const std::vector<Claim> claims = build_registry();
  return claims;
}

const Claim& find_claim(std::string_view id) {
  for (const auto& c : registry()) {
    if (c.id == id) return c;
  }
  throw Error(ErrorCode::kUnknownClaim, "no claim named '" + std::string(id) + "'");
}

std::vector<std::size_t> secondary_domain(const Claim& claim, std::size_t n) {
  std::vector<std::size_t> values;
  if (claim.schema == ParamSchema::kOrder) return values;
  for (std::size_t v = 1; v < n; ++v) {
    ClaimParams p{n, std::nullopt, std::nullopt};
    (claim.schema == ParamSchema::kOrderDiameter ? p.diameter : p.max_degree) = v;
    if (claim.in_domain(p)) values.push_back(v);
  }
  return values;
}

ClaimReport verify(const Claim& claim, const ClaimParams& params, const VerifyOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  const bool in_domain = claim.in_domain(params);
  if (!in_domain && !(options.exploratory && claim.defined(params))) {
    throw Error(ErrorCode::kOutOfDomain,
                claim.id + " is not stated for " + params.to_string());
  }

  TreeFilter filter;
  if (claim.schema == ParamSchema::kOrderDiameter) filter.diameter = params.diameter;
  if (claim.schema == ParamSchema::kOrderMaxDegree) filter.max_degree = params.max_degree;
  const auto trees = enumerate_trees(params.n, filter, options.ceiling);

  const Status bound = claim.bound(params);
  std::vector<Tier> tiers;
  if (claim.tiers) {
    tiers = claim.tiers(params);
  } else {
    tiers.push_back({bound, always(true), claim.characterization(params)});
  }

  const std::size_t batch_size = std::max<std::size_t>(1, options.batch_size);
  const std::size_t batches = (trees.size() + batch_size - 1) / batch_size;
  std::vector<std::vector<TierPartial>> partials(batches, std::vector<TierPartial>(tiers.size()));
  detail::for_each_batch(
      trees.size(), batch_size, options.workers,
      [&](std::size_t batch, std::size_t begin, std::size_t end) {
        auto& slot = partials[batch];
        for (std::size_t i = begin; i < end; ++i) {
          const Tree& t = trees[i];
          const Status value = invariant_value(t, claim.invariant);
          std::optional<CanonicalForm> form;
          auto form_of = [&]() -> const CanonicalForm& {
            if (!form) form = canonical_form(t);
            return *form;
          };
          for (std::size_t k = 0; k < tiers.size(); ++k) {
            const auto& tier = tiers[k];
            if (!tier.scope(t)) continue;
            auto& part = slot[k];
            ++part.scope_size;
            const bool wrong_side =
                claim.direction == Direction::kLower ? value < tier.bound : value > tier.bound;
            if (wrong_side) part.violations.push_back(form_of());
            if (value == tier.bound) part.extremal.push_back(form_of());
            if (tier.characterization(t)) part.characterized.push_back(form_of());
          }
        }
      });

  ClaimReport report;
  report.claim = claim.id;
  report.params = params;
  report.universe = trees.size();
  report.bound = bound;
  report.exploratory = !in_domain;
  for (std::size_t k = 0; k < tiers.size(); ++k) {
    TierPartial merged;
    for (const auto& slot : partials) {
      merged.scope_size += slot[k].scope_size;
      append(merged.violations, slot[k].violations);
      append(merged.extremal, slot[k].extremal);
      append(merged.characterized, slot[k].characterized);
    }
    TierReport tier;
    tier.bound = tiers[k].bound;
    tier.scope_size = merged.scope_size;
    tier.violations = sorted_union(std::move(merged.violations));
    tier.extremal = sorted_union(std::move(merged.extremal));
    const auto characterized = sorted_union(std::move(merged.characterized));
    tier.characterization_agreement = tier.extremal == characterized;

    append(report.violations, tier.violations);
    append(report.extremal, tier.extremal);
    append(report.characterized, characterized);
    report.characterization_agreement =
        report.characterization_agreement && tier.characterization_agreement;
    report.tiers.push_back(std::move(tier));
  }
  report.violations = sorted_union(std::move(report.violations));
  report.extremal = sorted_union(std::move(report.extremal));
  report.characterized = sorted_union(std::move(report.characterized));
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

ClaimReport verify(std::string_view claim_id, const ClaimParams& params,
                   const VerifyOptions& options) {
  return verify(find_claim(claim_id), params, options);
}

// Structural lemmas.

std::string_view to_string(LemmaId id) {
  switch (id) {
    case LemmaId::kCentroidBranchWeight: return "lemma_centroid_bw";
    case LemmaId::kCentroidHalf: return "lemma_centroid_half";
    case LemmaId::kLeafPeripherian: return "lemma_leaf_periph";
    case LemmaId::kInternalPeripherian: return "lemma_internal_periph";
    case LemmaId::kLeafDeletedIdentity: return "leaf_deleted_identity";
    case LemmaId::kHangingShift: return "hanging_shift";
  }
  return "?";
}

LemmaId parse_lemma(std::string_view name) {
  for (auto id : {LemmaId::kCentroidBranchWeight, LemmaId::kCentroidHalf,
                  LemmaId::kLeafPeripherian, LemmaId::kInternalPeripherian,
                  LemmaId::kLeafDeletedIdentity, LemmaId::kHangingShift}) {
    if (to_string(id) == name) return id;
  }
  throw Error(ErrorCode::kUnknownLemma, "no lemma named '" + std::string(name) + "'");
}

std::span<const LemmaId> structural_lemmas() {
  static constexpr LemmaId kLemmas[] = {
      LemmaId::kCentroidBranchWeight, LemmaId::kCentroidHalf, LemmaId::kLeafPeripherian,
      LemmaId::kInternalPeripherian, LemmaId::kLeafDeletedIdentity};
  return kLemmas;
}

bool lemma_hypotheses_hold(LemmaId id, const Tree& t) {
  switch (id) {
    case LemmaId::kCentroidBranchWeight:
    case LemmaId::kHangingShift: return t.order() >= 2;
    case LemmaId::kCentroidHalf:
    case LemmaId::kInternalPeripherian:
    case LemmaId::kLeafDeletedIdentity: return t.order() >= 3;
    case LemmaId::kLeafPeripherian: return t.order() >= 2 && !is_path(t);
  }
  return false;
}

ShiftOutcome hanging_shift_outcome(const Tree& t, Vertex u, std::size_t p, std::size_t q) {
  if (t.order() < 2) throw Error(ErrorCode::kHypothesisViolated, "base tree must be nontrivial");
  if (u >= t.order()) throw Error(ErrorCode::kVertexOutOfRange, "vertex " + std::to_string(u));
  if (q < 1 || p < q) throw Error(ErrorCode::kHypothesisViolated, "needs p >= q >= 1");

  const Tree before = attach_path(attach_path(t, u, p), u, q);
  Tree after = attach_path(t, u, p + 1);
  if (q > 1) after = attach_path(after, u, q - 1);

  ShiftOutcome outcome;
  outcome.before = extremes(before, Selector::kInternal).max_value;
  outcome.after = extremes(after, Selector::kInternal).max_value;
  outcome.equality_predicted = q >= 2 && t.degree(u) == t.order() - 1;
  return outcome;
}

bool check_hanging_shift(const Tree& t, Vertex u, std::size_t p, std::size_t q) {
  const auto outcome = hanging_shift_outcome(t, u, p, q);
  return outcome.equality_predicted ? outcome.after == outcome.before
                                    : outcome.after > outcome.before;
}

bool check_structural_lemma(LemmaId id, const Tree& t, std::size_t max_shift_total) {
  if (!lemma_hypotheses_hold(id, t)) {
    throw Error(ErrorCode::kHypothesisViolated,
                std::string(to_string(id)) + " does not apply to this tree");
  }
  const auto partition = vertex_partition(t);
  switch (id) {
    case LemmaId::kCentroidBranchWeight: {
      std::vector<Selector> selectors{Selector::kLeaves, Selector::kAll};
      if (t.order() >= 3) selectors.push_back(Selector::kInternal);
      return std::all_of(selectors.begin(), selectors.end(), [&](Selector sel) {
        return a_centroid(t, sel, CentroidMethod::kBrute) ==
               a_centroid(t, sel, CentroidMethod::kBranchWeight);
      });
    }
    case LemmaId::kCentroidHalf:
      for (Selector sel : {Selector::kLeaves, Selector::kInternal}) {
        if (a_centroid(t, sel, CentroidMethod::kBrute) !=
            a_centroid(t, sel, CentroidMethod::kHalfCondition)) {
          return false;
        }
      }
      return true;
    case LemmaId::kLeafPeripherian:
      return peripherian(t, Selector::kLeaves).is_subset_of(partition.leaves);
    case LemmaId::kInternalPeripherian:
      return peripherian(t, Selector::kInternal).is_subset_of(partition.leaves);
    case LemmaId::kLeafDeletedIdentity:
      return extremes(t, Selector::kInternal).min_value ==
             extremes(delete_leaves(t), Selector::kAll).min_value;
    case LemmaId::kHangingShift:
      for (Vertex u = 0; u < t.order(); ++u) {
        for (std::size_t q = 1; 2 * q <= max_shift_total; ++q) {
          for (std::size_t p = q; p + q <= max_shift_total; ++p) {
            if (!check_hanging_shift(t, u, p, q)) return false;
          }
        }
      }
      return true;
  }
  return false;
}

bool check_structural_lemma(std::string_view id, const Tree& t) {
  return check_structural_lemma(parse_lemma(id), t);
}

}  // namespace statuslab
