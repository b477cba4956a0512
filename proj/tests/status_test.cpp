#include <doctest.h>

#include "oracles.hpp"
#include "statuslab/enumeration.hpp"
#include "statuslab/error.hpp"
#include "statuslab/families.hpp"
#include "statuslab/status.hpp"

using namespace statuslab;

namespace {

Tree chair() {
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {2, 4}};
  return Tree::from_edges(5, edges);
}

VertexSet set_of(std::vector<Vertex> v, std::size_t n) { return VertexSet(std::move(v), n); }

// Vertices of `s` induce a path: connected with maximum induced degree 2.
bool induces_path(const Tree& t, const VertexSet& s) {
  if (s.empty()) return false;
  std::size_t inner_edges = 0;
  for (Vertex u : s.members()) {
    std::size_t deg = 0;
    for (Vertex w : t.neighbors(u)) deg += s.contains(w) ? 1 : 0;
    if (deg > 2) return false;
    inner_edges += deg;
  }
  return inner_edges / 2 + 1 == s.size();
}

constexpr Selector kSelectors[] = {Selector::kLeaves, Selector::kInternal, Selector::kAll};

}  // namespace

TEST_CASE("chair status vectors") {
  const Tree t = chair();
  CHECK(status_vector(t, Selector::kLeaves).values == std::vector<Status>{6, 5, 4, 5, 5});
  CHECK(status_vector(t, Selector::kInternal).values == std::vector<Status>{3, 1, 1, 3, 3});
  CHECK(status_vector(t, Selector::kAll).values == std::vector<Status>{9, 6, 5, 8, 8});

  const auto leaves = extremes(t, Selector::kLeaves);
  CHECK(leaves.min_value == 4);
  CHECK(leaves.max_value == 6);
  CHECK(leaves.min_set == set_of({2}, 5));
  CHECK(leaves.max_set == set_of({0}, 5));

  const auto internal = extremes(t, Selector::kInternal);
  CHECK(internal.min_value == 1);
  CHECK(internal.max_value == 3);
  CHECK(internal.max_set == set_of({0, 3, 4}, 5));
}

TEST_CASE("target sets and their edge cases") {
  CHECK(target_set(chair(), Selector::kLeaves) == set_of({0, 3, 4}, 5));
  CHECK(target_set(Tree(), Selector::kAll).size() == 1);
  CHECK_THROWS_AS(target_set(make_path(2), Selector::kInternal), Error);
  CHECK(status_vector(Tree(), Selector::kAll).values == std::vector<Status>{0});
  CHECK(status_vector(make_path(2), Selector::kLeaves).values == std::vector<Status>{1, 1});

  CHECK(parse_selector("leaves") == Selector::kLeaves);
  CHECK(parse_selector("I") == Selector::kInternal);
  CHECK(parse_selector("V") == Selector::kAll);
  CHECK_THROWS_AS(parse_selector("roots"), Error);
}

TEST_CASE("explicit member sets") {
  const Tree t = chair();
  CHECK(status_values(t, set_of({3}, 5)) == std::vector<Status>{3, 2, 1, 0, 2});
  CHECK_THROWS_AS(status_values(t, set_of({}, 5)), Error);
}

TEST_CASE("rerooting equals the BFS oracle on every tree up to order 12") {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (const auto& t : enumerate_trees(n)) {
      for (auto sel : kSelectors) {
        if (sel != Selector::kAll && n < 3 && !(sel == Selector::kLeaves && n == 2)) continue;
        const auto expected = oracle::status(t, oracle::members(t, sel));
        REQUIRE(status_vector(t, sel).values == expected);
      }
    }
  }
}

TEST_CASE("adjacent statuses differ by at most |A|") {
  for (std::size_t n = 3; n <= 11; ++n) {
    for (const auto& t : enumerate_trees(n)) {
      for (auto sel : kSelectors) {
        const auto values = status_vector(t, sel).values;
        const auto a = static_cast<Status>(target_set(t, sel).size());
        for (auto [u, v] : t.edges()) REQUIRE(std::abs(values[u] - values[v]) <= a);
      }
    }
  }
}

TEST_CASE("branch weights") {
  const Tree t = chair();
  CHECK(branch_weights(t, Selector::kLeaves) == std::vector<std::size_t>{2, 2, 1, 2, 2});
  CHECK(branch_weight(t, 2, Selector::kAll) == 2);
  CHECK(branch_weights(t, Selector::kInternal) == std::vector<std::size_t>{2, 1, 1, 2, 2});
}

TEST_CASE("centroid methods") {
  const Tree t = chair();
  for (auto method :
       {CentroidMethod::kBrute, CentroidMethod::kBranchWeight, CentroidMethod::kHalfCondition}) {
    CHECK(a_centroid(t, Selector::kLeaves, method) == set_of({2}, 5));
    CHECK(a_centroid(t, Selector::kInternal, method) == set_of({1, 2}, 5));
  }
  CHECK_THROWS_AS(a_centroid(t, Selector::kAll, CentroidMethod::kHalfCondition), Error);
  try {
    a_centroid(make_path(2), Selector::kLeaves, CentroidMethod::kHalfCondition);
    FAIL("half condition accepted n = 2");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kMethodPreconditionViolated);
  }
}

TEST_CASE("centroid methods agree and the centroid induces a path, orders 3 to 12") {
  for (std::size_t n = 3; n <= 12; ++n) {
    for (const auto& t : enumerate_trees(n)) {
      for (auto sel : {Selector::kLeaves, Selector::kInternal}) {
        const auto brute = a_centroid(t, sel, CentroidMethod::kBrute);
        REQUIRE(brute == a_centroid(t, sel, CentroidMethod::kBranchWeight));
        REQUIRE(brute == a_centroid(t, sel, CentroidMethod::kHalfCondition));
        REQUIRE(induces_path(t, brute));
      }
      REQUIRE(a_centroid(t, Selector::kAll, CentroidMethod::kBrute) ==
              a_centroid(t, Selector::kAll, CentroidMethod::kBranchWeight));
    }
  }
}

TEST_CASE("peripherian vertices") {
  CHECK(peripherian(chair(), Selector::kLeaves) == set_of({0}, 5));
  CHECK(peripherian(chair(), Selector::kInternal) == set_of({0, 3, 4}, 5));
  CHECK(peripherian(make_path(6), Selector::kLeaves).size() == 6);

  for (std::size_t n = 3; n <= 12; ++n) {
    for (const auto& t : enumerate_trees(n)) {
      const auto part = vertex_partition(t);
      if (t.max_degree() > 2) REQUIRE(peripherian(t, Selector::kLeaves).is_subset_of(part.leaves));
      REQUIRE(peripherian(t, Selector::kInternal).is_subset_of(part.leaves));
    }
  }
}

TEST_CASE("minimum internal status equals minimum status after deleting leaves") {
  for (std::size_t n = 3; n <= 12; ++n) {
    for (const auto& t : enumerate_trees(n)) {
      REQUIRE(extremes(t, Selector::kInternal).min_value ==
              extremes(delete_leaves(t), Selector::kAll).min_value);
    }
  }
}

TEST_CASE("large random trees stay linear and exact") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Tree t = random_tree(300, seed);
    for (auto sel : kSelectors) {
      CHECK(status_vector(t, sel).values == oracle::status(t, oracle::members(t, sel)));
    }
  }
}
