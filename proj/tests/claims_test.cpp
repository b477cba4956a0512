#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "statuslab/claims.hpp"
#include "statuslab/error.hpp"
#include "statuslab/families.hpp"

using namespace statuslab;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kMalformedInput;
}

std::vector<ClaimParams> points(const Claim& claim, std::size_t n) {
  std::vector<ClaimParams> out;
  if (claim.schema == ParamSchema::kOrder) {
    ClaimParams p{n, std::nullopt, std::nullopt};
    if (claim.in_domain(p)) out.push_back(p);
    return out;
  }
  for (auto v : secondary_domain(claim, n)) {
    ClaimParams p{n, std::nullopt, std::nullopt};
    (claim.schema == ParamSchema::kOrderDiameter ? p.diameter : p.max_degree) = v;
    out.push_back(p);
  }
  return out;
}

std::vector<CanonicalForm> forms_of(const std::vector<Tree>& trees) {
  std::set<CanonicalForm> forms;
  for (const auto& t : trees) forms.insert(canonical_form(t));
  return {forms.begin(), forms.end()};
}

}  // namespace

TEST_CASE("registry") {
  const auto& claims = registry();
  CHECK(claims.size() == 14);
  std::set<std::string> ids;
  for (const auto& c : claims) {
    ids.insert(c.id);
    CHECK(c.in_domain);
    CHECK(c.defined);
    CHECK(c.bound);
    CHECK(c.characterization);
  }
  CHECK(ids.size() == claims.size());
  CHECK(find_claim("IS_max_global").invariant == Invariant::kMaxInternalStatus);
  CHECK(code_of([] { find_claim("nope"); }) == ErrorCode::kUnknownClaim);
}

TEST_CASE("every claim is certified at every parameter point up to order 12") {
  for (const auto& claim : registry()) {
    for (std::size_t n = 2; n <= 12; ++n) {
      for (const auto& p : points(claim, n)) {
        const auto report = verify(claim, p);
        CAPTURE(claim.id);
        CAPTURE(p.to_string());
        REQUIRE(report.violations.empty());
        REQUIRE(report.characterization_agreement);
        REQUIRE(!report.extremal.empty());
        REQUIRE(!report.exploratory);
      }
    }
  }
}

TEST_CASE("parameter domains") {
  CHECK(secondary_domain(find_claim("ls_max_diameter"), 6) == std::vector<std::size_t>{3, 4, 5});
  CHECK(secondary_domain(find_claim("LS_max_diameter"), 6) ==
        std::vector<std::size_t>{2, 3, 4, 5});
  CHECK(secondary_domain(find_claim("IS_max_maxdeg"), 5) == std::vector<std::size_t>{2, 3, 4});
  CHECK(secondary_domain(find_claim("is_max_global"), 9).empty());

  CHECK(code_of([] { verify("ls_max_global", {5}); }) == ErrorCode::kOutOfDomain);
  CHECK(code_of([] { verify("LS_max_global", {3}); }) == ErrorCode::kOutOfDomain);
  CHECK(code_of([] { verify("ls_max_diameter", {8, 2}); }) == ErrorCode::kOutOfDomain);
  CHECK(code_of([] { verify("ls_max_diameter", {8}); }) == ErrorCode::kOutOfDomain);
  CHECK(code_of([] { verify("ls_max_diameter", {8, 8}); }) == ErrorCode::kOutOfDomain);
  CHECK(code_of([] { verify("is_max_global", {8, 3}); }) == ErrorCode::kOutOfDomain);
  CHECK(code_of([] { verify("IS_max_global", {12}, {.ceiling = 10}); }) ==
        ErrorCode::kCeilingExceeded);

  VerifyOptions explore;
  explore.exploratory = true;
  const auto report = verify("ls_max_global", {5}, explore);
  CHECK(report.exploratory);
  CHECK(report.bound == 4);
  CHECK(report.universe == 3);
  CHECK(code_of([&] { verify("ls_max_global", {1}, explore); }) == ErrorCode::kOutOfDomain);
}

TEST_CASE("bound values") {
  const std::pair<std::size_t, Status> ls_max[] = {{8, 10}, {9, 12}, {10, 15}, {11, 18}};
  for (auto [n, bound] : ls_max) CHECK(verify("ls_max_global", {n}).bound == bound);
  CHECK(verify("LS_max_global", {9}).bound == 20);
  CHECK(verify("LS_max_global", {10}).bound == 25);
  CHECK(verify("ls_max_diameter", {10, 4}).bound == 13);
  CHECK(verify("IS_max_maxdeg", {7, std::nullopt, 3}).bound == 10);
  CHECK(verify("IS_max_maxdeg", {7, std::nullopt, 3}).extremal.size() == 2);
  CHECK(verify("IS_max_global", {12}).bound == 55);
  CHECK(verify("is_min_diameter", {9, 6}).bound == 6);
  CHECK(verify("IS_min_diameter", {9, 6}).bound == 15);
  CHECK(verify("LS_max_diameter", {9, 4}).bound == 20);
}

TEST_CASE("extremal sets match the family constructions") {
  CHECK(verify("ls_max_global", {9}).extremal ==
        forms_of({make_double_broom(9, 2, 2), make_double_broom(9, 3, 3)}));
  CHECK(verify("ls_max_global", {10}).extremal == forms_of({make_double_broom(10, 3, 3)}));
  CHECK(verify("LS_max_global", {9}).extremal == forms_of({make_broom(9, 4), make_broom(9, 5)}));
  CHECK(verify("LS_max_diameter", {11, 5}).extremal == forms_of({make_broom(11, 6)}));
  CHECK(verify("ls_max_diameter", {10, 4}).extremal == forms_of(diam_even_extremal_family(10, 4)));
  CHECK(verify("IS_max_global", {8}).extremal == forms_of({make_path(8)}));
}

TEST_CASE("small-value tiers are exclusive and cover diameters two to four") {
  for (const char* id : {"is_small_cases", "IS_small_cases"}) {
    const auto& claim = find_claim(id);
    for (std::size_t n = 3; n <= 12; ++n) {
      const auto tiers = claim.tiers({n});
      REQUIRE(tiers.size() == 3);
      for (const auto& t : enumerate_trees(n)) {
        std::size_t hits = 0;
        for (const auto& tier : tiers) hits += tier.characterization(t) ? 1 : 0;
        REQUIRE(hits <= 1);
        const auto d = oracle::diameter(t);
        if (d <= 3) REQUIRE(hits == 1);
        if (d == 4 && oracle::caterpillar(t)) REQUIRE(hits == 1);
        if (d > 4) REQUIRE(hits == 0);
      }
      const auto report = verify(claim, {n});
      REQUIRE(report.tiers.size() == 3);
      REQUIRE(report.certified());
    }
  }
}

TEST_CASE("diameter-constrained optimum meets the global optimum") {
  const auto& global = find_claim("ls_max_global");
  const auto& by_d = find_claim("ls_max_diameter");
  for (std::size_t n = 6; n <= 12; ++n) {
    Status best_bound = 0;
    Status best_attained = 0;
    for (auto d : secondary_domain(by_d, n)) {
      const ClaimParams p{n, d, std::nullopt};
      best_bound = std::max(best_bound, by_d.bound(p));
      for (const auto& t : enumerate_trees(n, TreeFilter{d, std::nullopt})) {
        best_attained = std::max(best_attained, invariant_value(t, Invariant::kMinLeafStatus));
      }
    }
    CHECK(best_bound == global.bound({n}));
    CHECK(best_attained == global.bound({n}));
  }
}

TEST_CASE("reports do not depend on the schedule") {
  for (const char* id : {"LS_min_diameter", "is_min_diameter"}) {
    const ClaimParams p{12, 6, std::nullopt};
    auto a = verify(id, p, {.workers = 1, .batch_size = 64});
    auto b = verify(id, p, {.workers = 4, .batch_size = 7});
    CHECK(a.extremal == b.extremal);
    CHECK(a.violations == b.violations);
    CHECK(a.characterized == b.characterized);
    CHECK(a.universe == b.universe);
    CHECK(std::is_sorted(a.extremal.begin(), a.extremal.end()));
  }
}

TEST_CASE("invariant values") {
  const Tree t = make_spider({1, 2, 3});
  CHECK(invariant_value(t, Invariant::kMaxInternalStatus) == 10);
  CHECK(invariant_value(t, Invariant::kMinLeafStatus) == 6);
  CHECK(to_string(Invariant::kMaxLeafStatus) == "LS");
}

TEST_CASE("structural lemmas over every tree up to order 9") {
  for (std::size_t n = 2; n <= 9; ++n) {
    for (const auto& t : enumerate_trees(n)) {
      for (auto id : structural_lemmas()) {
        if (!lemma_hypotheses_hold(id, t)) continue;
        CAPTURE(to_string(id));
        REQUIRE(check_structural_lemma(id, t));
      }
    }
  }
  CHECK(structural_lemmas().size() == 5);
  CHECK(parse_lemma("leaf_deleted_identity") == LemmaId::kLeafDeletedIdentity);
  CHECK(code_of([] { parse_lemma("lemma_9"); }) == ErrorCode::kUnknownLemma);
  CHECK(code_of([] { check_structural_lemma("lemma_leaf_periph", make_path(5)); }) ==
        ErrorCode::kHypothesisViolated);
  CHECK(code_of([] { check_structural_lemma("lemma_centroid_half", make_path(2)); }) ==
        ErrorCode::kHypothesisViolated);
  CHECK(check_structural_lemma("lemma_internal_periph", make_path(5)));
}

TEST_CASE("hanging path shift") {
  const auto star = hanging_shift_outcome(make_star(3), 0, 2, 2);
  CHECK(star.before == 6);
  CHECK(star.after == 6);
  CHECK(star.equality_predicted);

  const auto off_center = hanging_shift_outcome(make_path(4), 1, 2, 2);
  CHECK(!off_center.equality_predicted);
  CHECK(off_center.after > off_center.before);

  for (std::size_t n = 2; n <= 5; ++n) {
    for (const auto& t : enumerate_trees(n)) {
      REQUIRE(check_structural_lemma(LemmaId::kHangingShift, t));
    }
  }
  CHECK(code_of([] { hanging_shift_outcome(make_star(3), 0, 1, 2); }) ==
        ErrorCode::kHypothesisViolated);
  CHECK(code_of([] { hanging_shift_outcome(make_star(3), 0, 1, 0); }) ==
        ErrorCode::kHypothesisViolated);
  CHECK(code_of([] { hanging_shift_outcome(make_star(3), 7, 1, 1); }) ==
        ErrorCode::kVertexOutOfRange);
}
