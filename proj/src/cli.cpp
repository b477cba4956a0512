#include "statuslab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "statuslab/claims.hpp"
#include "statuslab/enumeration.hpp"
#include "statuslab/error.hpp"
#include "statuslab/families.hpp"
#include "statuslab/json_io.hpp"
#include "statuslab/status.hpp"
#include "statuslab/tree.hpp"

namespace statuslab::cli {

namespace {

// Raised for failures that map to an exit code without being library errors.
struct Exit {
  int code;
  std::string message;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Exit{kExitIo, "cannot open '" + path + "'"};
  buffer << file.rdbuf();
  return buffer.str();
}

std::string join(std::span<const Vertex> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(values[i]);
  }
  return out;
}

std::optional<CentroidReport> try_extremes(const Tree& t, Selector sel) {
  try {
    return extremes(t, sel);
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::vector<Selector> defined_selectors(const Tree& t) {
  std::vector<Selector> out;
  for (auto sel : {Selector::kLeaves, Selector::kInternal, Selector::kAll}) {
    if (try_extremes(t, sel)) out.push_back(sel);
  }
  return out;
}

struct StatusArgs {
  std::string in;
  std::string selector;
  bool json = false;
};

int run_status(const StatusArgs& args, std::istream& in, std::ostream& out) {
  const Tree t = parse_edge_list(read_input(args.in, in));
  if (args.json) {
    if (!args.selector.empty()) {
      out << status_report_json(t, parse_selector(args.selector)).dump(2) << '\n';
      return kExitOk;
    }
    auto docs = nlohmann::ordered_json::array();
    for (auto sel : defined_selectors(t)) docs.push_back(status_report_json(t, sel));
    out << docs.dump(2) << '\n';
    return kExitOk;
  }

  if (!args.selector.empty()) {
    const Selector sel = parse_selector(args.selector);
    const auto vec = status_vector(t, sel);
    const auto report = extremes(t, sel);
    out << "selector=" << to_string(sel) << " min=" << report.min_value
        << " max=" << report.max_value << '\n';
    out << "min_set: " << join(report.min_set.members()) << '\n';
    out << "max_set: " << join(report.max_set.members()) << '\n';
    for (std::size_t u = 0; u < vec.values.size(); ++u) {
      out << u << ' ' << vec.values[u] << '\n';
    }
    return kExitOk;
  }

  const auto leaves = try_extremes(t, Selector::kLeaves);
  const auto internal = try_extremes(t, Selector::kInternal);
  auto value = [](const std::optional<CentroidReport>& r, bool max) {
    if (!r) return std::string("n/a");
    return std::to_string(max ? r->max_value : r->min_value);
  };
  auto set = [](const std::optional<CentroidReport>& r, bool max) {
    if (!r) return std::string("n/a");
    return join((max ? r->max_set : r->min_set).members());
  };
  out << "ls=" << value(leaves, false) << " LS=" << value(leaves, true)
      << " is=" << value(internal, false) << " IS=" << value(internal, true) << '\n';
  out << "ls_set: " << set(leaves, false) << '\n';
  out << "LS_set: " << set(leaves, true) << '\n';
  out << "is_set: " << set(internal, false) << '\n';
  out << "IS_set: " << set(internal, true) << '\n';
  return kExitOk;
}

int run_centroid(const StatusArgs& args, std::istream& in, std::ostream& out) {
  const Tree t = parse_edge_list(read_input(args.in, in));
  std::vector<Selector> selectors;
  if (args.selector.empty()) {
    selectors = defined_selectors(t);
  } else {
    selectors.push_back(parse_selector(args.selector));
  }

  auto docs = nlohmann::ordered_json::array();
  for (auto sel : selectors) {
    nlohmann::ordered_json doc;
    doc["selector"] = std::string(to_string(sel));
    std::string line = std::string(to_string(sel));
    for (auto method :
         {CentroidMethod::kBrute, CentroidMethod::kBranchWeight, CentroidMethod::kHalfCondition}) {
      const std::string name(to_string(method));
      try {
        const VertexSet centre = a_centroid(t, sel, method);
        const auto members = centre.members();
        doc[name] = std::vector<Vertex>(members.begin(), members.end());
        line += "  " + name + ": " + join(members);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kMethodPreconditionViolated) throw;
        doc[name] = nullptr;
        line += "  " + name + ": n/a";
      }
    }
    doc["branch_weights"] = branch_weights(t, sel);
    docs.push_back(std::move(doc));
    if (!args.json) out << line << '\n';
  }
  if (args.json) out << (docs.size() == 1 ? docs[0] : docs).dump(2) << '\n';
  return kExitOk;
}

int run_family(const std::string& text, std::ostream& out) {
  const auto members = build_family(FamilySpec::parse(text));
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members.size() > 1) out << "# member " << i << '\n';
    out << to_edge_list(members[i]);
  }
  return kExitOk;
}

struct EnumerateArgs {
  std::size_t order = 0;
  std::optional<std::size_t> diameter;
  std::optional<std::size_t> max_degree;
  std::string emit = "canon";
};

int run_enumerate(const EnumerateArgs& args, std::ostream& out) {
  TreeStream stream(args.order, TreeFilter{args.diameter, args.max_degree});
  std::size_t count = 0;
  while (auto t = stream.next()) {
    if (args.emit == "edges") {
      out << "# tree " << count << '\n' << to_edge_list(*t);
    } else if (args.emit == "canon") {
      out << canonical_form(*t).encoding() << '\n';
    }
    ++count;
  }
  if (args.emit == "count") out << count << '\n';
  return kExitOk;
}

struct VerifyArgs {
  std::string claim;
  std::string orders;
  std::optional<std::size_t> diameter;
  std::optional<std::size_t> max_degree;
  std::string json_path;
  bool explore = false;
  std::size_t workers = 0;
};

std::size_t parse_count(std::string_view text) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw Exit{kExitUsage, "bad number '" + std::string(text) + "'"};
  }
  return value;
}

std::pair<std::size_t, std::size_t> parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const auto n = parse_count(text);
    return {n, n};
  }
  const auto lo = parse_count(text.substr(0, dots));
  const auto hi = parse_count(text.substr(dots + 2));
  if (lo > hi) throw Exit{kExitUsage, "empty range '" + std::string(text) + "'"};
  return {lo, hi};
}

std::vector<ClaimParams> parameter_points(const Claim& claim, const VerifyArgs& args) {
  const bool by_diameter = claim.schema == ParamSchema::kOrderDiameter;
  const bool by_degree = claim.schema == ParamSchema::kOrderMaxDegree;
  if ((args.diameter && !by_diameter) || (args.max_degree && !by_degree)) {
    throw Exit{kExitUsage, claim.id + " takes parameters " + std::string(to_string(claim.schema))};
  }
  const auto [lo, hi] = parse_range(args.orders);
  std::vector<ClaimParams> points;
  for (std::size_t n = lo; n <= hi; ++n) {
    if (claim.schema == ParamSchema::kOrder) {
      points.push_back({n, std::nullopt, std::nullopt});
      continue;
    }
    const auto fixed = by_diameter ? args.diameter : args.max_degree;
    std::vector<std::size_t> values;
    if (fixed) {
      values.push_back(*fixed);
    } else {
      values = secondary_domain(claim, n);
    }
    for (auto v : values) {
      ClaimParams p{n, std::nullopt, std::nullopt};
      (by_diameter ? p.diameter : p.max_degree) = v;
      points.push_back(p);
    }
  }
  if (points.empty()) {
    throw Error(ErrorCode::kOutOfDomain, claim.id + " has no parameter points for n=" +
                                             std::string(args.orders));
  }
  for (const auto& p : points) {
    if (!claim.in_domain(p) && !(args.explore && claim.defined(p))) {
      throw Error(ErrorCode::kOutOfDomain, claim.id + " is not stated for " + p.to_string());
    }
  }
  return points;
}

int run_verify(const VerifyArgs& args, std::ostream& out) {
  const Claim& claim = find_claim(args.claim);
  const auto points = parameter_points(claim, args);

  VerifyOptions options;
  options.workers = args.workers;
  options.exploratory = args.explore;

  std::vector<ClaimReport> reports;
  std::size_t certified = 0;
  std::size_t asserted = 0;
  for (const auto& p : points) {
    auto report = verify(claim, p, options);
    out << claim.id << ' ' << p.to_string() << " universe=" << report.universe
        << " bound=" << report.bound << " violations=" << report.violations.size()
        << " extremal=" << report.extremal.size()
        << " agreement=" << (report.characterization_agreement ? "yes" : "no")
        << (report.exploratory ? " (exploratory)" : "") << '\n';
    if (!report.exploratory) {
      ++asserted;
      if (report.certified()) ++certified;
    }
    reports.push_back(std::move(report));
  }
  out << "certified " << certified << '/' << asserted << '\n';

  if (!args.json_path.empty()) {
    auto docs = nlohmann::ordered_json::array();
    for (const auto& r : reports) docs.push_back(claim_report_json(r));
    const auto text = (docs.size() == 1 ? docs[0] : docs).dump(2) + "\n";
    if (args.json_path == "-") {
      out << text;
    } else {
      std::ofstream file(args.json_path, std::ios::binary);
      if (!(file << text)) throw Exit{kExitIo, "cannot write '" + args.json_path + "'"};
    }
  }
  return certified == asserted ? kExitOk : kExitViolation;
}

struct RandomCheckArgs {
  std::size_t k = 1000;
  std::size_t n = 200;
  std::uint64_t seed = 0;
};

int run_random_check(const RandomCheckArgs& args, std::ostream& out) {
  std::size_t failures = 0;
  auto report = [&](std::string_view what, std::uint64_t seed, const Tree& t) {
    ++failures;
    out << "FAIL " << what << " seed=" << seed << '\n' << to_edge_list(t);
  };
  for (std::size_t i = 0; i < args.k; ++i) {
    const std::uint64_t seed = args.seed + i;
    const Tree t = random_tree(args.n, seed);
    for (auto id : structural_lemmas()) {
      if (lemma_hypotheses_hold(id, t) && !check_structural_lemma(id, t)) report(to_string(id), seed, t);
    }
    // The shift is swept at one vertex per tree; all vertices would cost
    // O(n^2) per tree.
    const auto u = static_cast<Vertex>(seed % t.order());
    bool shift_ok = true;
    for (std::size_t q = 1; 2 * q <= 6; ++q) {
      for (std::size_t p = q; p + q <= 6; ++p) shift_ok = shift_ok && check_hanging_shift(t, u, p, q);
    }
    if (!shift_ok) report("hanging_shift u=" + std::to_string(u), seed, t);
  }
  out << "random-check k=" << args.k << " n=" << args.n << " seed=" << args.seed << ": "
      << failures << " failures\n";
  return failures == 0 ? kExitOk : kExitViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Leaf and internal status of trees", "statuslab"};
  app.require_subcommand(1);

  StatusArgs status_args;
  auto* status = app.add_subcommand("status", "ls, LS, is, IS and their witness sets");
  status->add_option("--in", status_args.in, "edge-list file, - for stdin")->required();
  status->add_option("--selector", status_args.selector, "leaves, internal or all");
  status->add_flag("--json", status_args.json, "machine-readable report");

  StatusArgs centroid_args;
  auto* centroid = app.add_subcommand("centroid", "A-centroids by all three methods");
  centroid->add_option("--in", centroid_args.in, "edge-list file, - for stdin")->required();
  centroid->add_option("--selector", centroid_args.selector, "leaves, internal or all");
  centroid->add_flag("--json", centroid_args.json, "machine-readable report");

  std::string family_spec;
  auto* family = app.add_subcommand("family", "edge list of a named family member");
  family->add_option("spec", family_spec, "kind:params, e.g. double_broom:10,3,3")->required();

  EnumerateArgs enumerate_args;
  auto* enumerate = app.add_subcommand("enumerate", "all trees of one order up to isomorphism");
  enumerate->add_option("--order", enumerate_args.order, "number of vertices")->required();
  enumerate->add_option("--diameter", enumerate_args.diameter);
  enumerate->add_option("--max-degree", enumerate_args.max_degree);
  enumerate->add_option("--emit", enumerate_args.emit)
      ->check(CLI::IsMember({"edges", "canon", "count"}));

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "check a claim over every tree");
  verify_cmd->add_option("--claim", verify_args.claim)->required();
  verify_cmd->add_option("--n", verify_args.orders, "order or range A..B")->required();
  auto* d_opt = verify_cmd->add_option("--d", verify_args.diameter);
  verify_cmd->add_option("--max-degree", verify_args.max_degree)->excludes(d_opt);
  verify_cmd->add_option("--json", verify_args.json_path, "report file, - for stdout");
  verify_cmd->add_flag("--explore", verify_args.explore, "report below the stated hypotheses");
  verify_cmd->add_option("--workers", verify_args.workers, "0 = all cores");

  RandomCheckArgs random_args;
  auto* random_check = app.add_subcommand("random-check", "structural lemmas on random trees");
  random_check->add_option("--k", random_args.k);
  random_check->add_option("--n", random_args.n);
  random_check->add_option("--seed", random_args.seed);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (status->parsed()) return run_status(status_args, in, out);
    if (centroid->parsed()) return run_centroid(centroid_args, in, out);
    if (family->parsed()) return run_family(family_spec, out);
    if (enumerate->parsed()) return run_enumerate(enumerate_args, out);
    if (verify_cmd->parsed()) return run_verify(verify_args, out);
    if (random_check->parsed()) return run_random_check(random_args, out);
  } catch (const Exit& e) {
    err << "statuslab: " << e.message << '\n';
    return e.code;
  } catch (const Error& e) {
    err << "statuslab: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace statuslab::cli
