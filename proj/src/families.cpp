#include "statuslab/families.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "statuslab/enumeration.hpp"
#include "statuslab/error.hpp"

namespace statuslab {

namespace {

[[noreturn]] void out_of_range(const std::string& what) {
  throw Error(ErrorCode::kParamOutOfRange, what);
}

std::string describe(std::string_view name, std::initializer_list<std::size_t> values) {
  std::string out(name);
  out += '(';
  bool first = true;
  for (auto v : values) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + ')';
}

}  // namespace

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kPath: return "path";
    case FamilyKind::kStar: return "star";
    case FamilyKind::kDoubleBroom: return "double_broom";
    case FamilyKind::kBroom: return "broom";
    case FamilyKind::kSpider: return "spider";
    case FamilyKind::kDiamEvenExtremal: return "diam_even_extremal";
  }
  return "?";
}

FamilySpec FamilySpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::kMalformedInput, "family spec needs the form kind:params");
  }
  const auto name = text.substr(0, colon);
  static const std::map<std::string_view, FamilyKind> kKinds = {
      {"path", FamilyKind::kPath},
      {"star", FamilyKind::kStar},
      {"double_broom", FamilyKind::kDoubleBroom},
      {"broom", FamilyKind::kBroom},
      {"spider", FamilyKind::kSpider},
      {"diam_even_extremal", FamilyKind::kDiamEvenExtremal},
  };
  const auto found = kKinds.find(name);
  if (found == kKinds.end()) {
    throw Error(ErrorCode::kMalformedInput, "unknown family '" + std::string(name) + "'");
  }

  FamilySpec spec;
  spec.kind = found->second;
  auto rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const auto token = rest.substr(0, comma);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw Error(ErrorCode::kMalformedInput, "bad family parameter '" + std::string(token) + "'");
    }
    spec.params.push_back(value);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }

  const std::size_t arity = spec.params.size();
  const bool ok = [&] {
    switch (spec.kind) {
      case FamilyKind::kPath:
      case FamilyKind::kStar: return arity == 1;
      case FamilyKind::kBroom:
      case FamilyKind::kDiamEvenExtremal: return arity == 2;
      case FamilyKind::kDoubleBroom: return arity == 3;
      case FamilyKind::kSpider: return arity >= 1;
    }
    return false;
  }();
  if (!ok) {
    throw Error(ErrorCode::kMalformedInput,
                "wrong parameter count for family '" + std::string(name) + "'");
  }
  return spec;
}

std::string FamilySpec::to_string() const {
  std::string out(statuslab::to_string(kind));
  out += ':';
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(params[i]);
  }
  return out;
}

Tree make_path(std::size_t n) {
  if (n == 0) out_of_range("path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Tree::from_edges(n, edges);
}

Tree make_star(std::size_t n) {
  if (n == 0) out_of_range("star needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Tree::from_edges(n, edges);
}

bool double_broom_in_standard_range(std::size_t n, std::size_t a, std::size_t b) {
  return n >= 6 && a >= 2 && b >= 2 && 2 * a <= n - 2 && 2 * b <= n - 2;
}

Tree make_double_broom(std::size_t n, std::size_t a, std::size_t b) {
  if (a < 1 || b < 1 || a + b + 2 > n) {
    out_of_range(describe("double_broom", {n, a, b}) + " needs a, b >= 1 and a + b <= n - 2");
  }
  const std::size_t path_length = n - a - b - 1;
  std::vector<Edge> edges;
  Vertex prev = 0;
  Vertex next = 2;
  for (std::size_t i = 1; i < path_length; ++i) {
    edges.emplace_back(prev, next);
    prev = next++;
  }
  edges.emplace_back(prev, 1);
  for (std::size_t i = 0; i < a; ++i) edges.emplace_back(0, next++);
  for (std::size_t i = 0; i < b; ++i) edges.emplace_back(1, next++);
  return Tree::from_edges(n, edges);
}

Tree make_broom(std::size_t n, std::size_t a) {
  if (a < 1 || a + 2 > n) out_of_range(describe("broom", {n, a}) + " needs 1 <= a <= n - 2");
  std::vector<Edge> edges;
  const std::size_t path_order = n - a;
  for (Vertex v = 1; v < path_order; ++v) edges.emplace_back(v - 1, v);
  for (auto v = static_cast<Vertex>(path_order); v < n; ++v) edges.emplace_back(0, v);
  return Tree::from_edges(n, edges);
}

Tree make_spider(const std::vector<std::size_t>& legs, bool allow_degenerate) {
  if (legs.empty()) throw Error(ErrorCode::kEmptyLegs, "spider needs at least one leg");
  if (legs.size() < 3 && !allow_degenerate) {
    out_of_range("spider with fewer than three legs is a path; pass allow_degenerate");
  }
  std::vector<Edge> edges;
  Vertex next = 1;
  for (auto length : legs) {
    if (length == 0) out_of_range("spider legs must have length >= 1");
    Vertex prev = 0;
    for (std::size_t i = 0; i < length; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Tree::from_edges(next, edges);
}

std::vector<Tree> diam_even_extremal_family(std::size_t n, std::size_t d) {
  if (d < 3 || d + 1 > n) {
    out_of_range(describe("diam_even_extremal", {n, d}) + " needs 3 <= d <= n - 1");
  }
  if ((n - d) % 2 != 0) {
    throw Error(ErrorCode::kParityMismatch, describe("diam_even_extremal", {n, d}) +
                                                " needs n - d even");
  }
  const std::size_t a = (n - d) / 2;
  std::map<CanonicalForm, Tree> classes;
  auto add = [&](Tree t) {
    auto form = canonical_form(t);
    classes.emplace(std::move(form), std::move(t));
  };
  add(make_double_broom(n, a, a + 1));
  if (d >= 4) {
    const Tree base = make_double_broom(n - 1, a, a);
    for (Vertex u = 0; u < base.order(); ++u) {
      if (base.degree(u) == 2) add(attach_path(base, u, 1));
    }
  }
  std::vector<Tree> out;
  out.reserve(classes.size());
  for (auto& [form, t] : classes) out.push_back(std::move(t));
  return out;
}

std::vector<Tree> build_family(const FamilySpec& spec) {
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::kPath: return {make_path(p.at(0))};
    case FamilyKind::kStar: return {make_star(p.at(0))};
    case FamilyKind::kDoubleBroom: return {make_double_broom(p.at(0), p.at(1), p.at(2))};
    case FamilyKind::kBroom: return {make_broom(p.at(0), p.at(1))};
    case FamilyKind::kSpider: return {make_spider(p, true)};
    case FamilyKind::kDiamEvenExtremal: return diam_even_extremal_family(p.at(0), p.at(1));
  }
  return {};
}

}  // namespace statuslab
