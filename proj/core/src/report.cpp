#include "turan_forge/report.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "turan_forge/bounds.hpp"

namespace turan_forge::report {

namespace {

using constructions::ForbiddenClaim;
using nlohmann::ordered_json;

ordered_json spec_block(const constructions::ConstructionResult& built) {
  const auto& spec = built.spec;
  ordered_json out;
  out["family"] = spec.family_name();
  out["p"] = spec.p;
  switch (spec.family) {
    case constructions::Family::BrownSphere:
      out["alpha"] = spec.alpha;
      break;
    case constructions::Family::NormGraph:
    case constructions::Family::ProjNormGraph:
      out["s"] = spec.s;
      break;
    case constructions::Family::Wenger:
      out["t"] = spec.t;
      break;
    case constructions::Family::InnerProduct:
      out["s"] = spec.s;
      out["mode"] = spec.mode == constructions::InnerProductMode::Generic
                        ? "generic"
                        : "explicit";
      break;
    default:
      break;
  }

  const auto& claim = built.claimed_forbidden;
  ordered_json claimed;
  switch (claim.kind) {
    case ForbiddenClaim::Kind::Grid:
      claimed["kind"] = "grid";
      claimed["s"] = claim.s;
      claimed["t"] = claim.t;
      break;
    case ForbiddenClaim::Kind::Cycle:
      claimed["kind"] = "cycle";
      claimed["length"] = claim.cycle_length;
      break;
    case ForbiddenClaim::Kind::None:
      claimed["kind"] = "none";
      break;
  }
  out["claimed"] = claimed;
  return out;
}

ordered_json witness_block(const gridsearch::GridWitness& w) {
  ordered_json out;
  out["left"] = w.left_set;
  out["right"] = w.right_set;
  return out;
}

}  // namespace

ReportResult verification_report(const ReportOptions& options) {
  if (options.spec.family == constructions::Family::Custom) {
    throw std::invalid_argument("report requires a built-in family");
  }

  const auto built = constructions::build_graph(options.spec);
  const auto& g = built.graph;
  const auto& claim = built.claimed_forbidden;
  const std::uint64_t edges = g.edge_count();

  ordered_json doc;
  doc["spec"] = spec_block(built);

  {
    ordered_json block;
    block["left"] = g.left_size;
    block["right"] = g.right_size;
    block["count"] = edges;
    doc["edges"] = block;
  }

  {
    const auto expectation = constructions::expected_edge_count(options.spec);
    ordered_json block;
    block["value"] = expectation.expected;
    block["exact"] = expectation.exact;
    block["rel_window"] = expectation.rel_window;
    block["note"] = expectation.note;
    bool within;
    if (expectation.exact) {
      within = edges == expectation.expected;
    } else {
      const double dev =
          std::abs(static_cast<double>(edges) -
                   static_cast<double>(expectation.expected));
      within = dev <= expectation.rel_window *
                          static_cast<double>(expectation.expected);
    }
    block["within_window"] = within;
    block["warning"] =
        within ? ordered_json(nullptr)
               : ordered_json("edge count outside the expected window");
    doc["expected"] = block;
  }

  bool verified = true;

  if (claim.kind == ForbiddenClaim::Kind::Grid) {
    const unsigned s = static_cast<unsigned>(claim.s);
    const auto bound = gridsearch::check_kst_bound(g, s, claim.t);
    ordered_json block;
    block["s"] = claim.s;
    block["t"] = claim.t;
    block["lhs"] = bound.lhs.get_str();
    block["rhs"] = bound.rhs.get_str();
    block["holds"] = bound.holds;
    doc["kst_bound"] = block;
    if (!bound.holds) verified = false;

    const auto outcome = gridsearch::find_kst(g, s, static_cast<unsigned>(claim.t),
                                              options.budget);
    ordered_json search;
    search["s"] = claim.s;
    search["t"] = claim.t;
    search["found"] = outcome.found.has_value();
    search["witness"] = outcome.found ? witness_block(*outcome.found)
                                      : ordered_json(nullptr);
    search["exhaustive"] = outcome.exhaustive;
    search["budget"] = options.budget;
    // The node count is scheduling-dependent unless the search ran to
    // completion, so it is only reported for exhaustive runs.
    search["subsets_examined"] = outcome.exhaustive
                                     ? ordered_json(outcome.subsets_examined)
                                     : ordered_json(nullptr);
    doc["search"] = search;
    if (outcome.found) verified = false;
  } else {
    doc["kst_bound"] = nullptr;
    doc["search"] = nullptr;
  }

  if (claim.kind == ForbiddenClaim::Kind::Cycle) {
    const auto value = gridsearch::girth(g);
    ordered_json block;
    block["value"] = value ? ordered_json(*value) : ordered_json(nullptr);
    block["claimed_forbidden_cycle"] = claim.cycle_length;
    const bool holds = !value || *value > claim.cycle_length;
    block["holds"] = holds;
    doc["girth"] = block;
    if (!holds) verified = false;
  } else {
    doc["girth"] = nullptr;
  }

  {
    const double n = static_cast<double>(g.left_size) +
                     static_cast<double>(g.right_size);
    ordered_json block;
    block["n"] = g.left_size + g.right_size;
    if (claim.kind == ForbiddenClaim::Kind::Grid) {
      const unsigned s = static_cast<unsigned>(claim.s);
      block["furedi"] =
          s >= 2 ? ordered_json(bounds::furedi_bound(s, claim.t, n))
                 : ordered_json(nullptr);
      const double kst = bounds::kst_leading_bound(s, claim.t, n);
      block["kst_leading"] = kst;
      const double ratio = static_cast<double>(edges) / kst;
      block["edge_ratio"] = ratio;
      const double threshold =
          1.0 + 10.0 / std::sqrt(static_cast<double>(built.spec.p));
      block["ratio_threshold"] = threshold;
      block["warning"] =
          ratio < threshold
              ? ordered_json(nullptr)
              : ordered_json("edge count above the leading-term bound");
    } else if (claim.kind == ForbiddenClaim::Kind::Cycle) {
      const double cb =
          bounds::even_cycle_bound(built.spec.t, n);
      block["cycle_bound"] = cb;
      block["edge_ratio"] = static_cast<double>(edges) / cb;
    }
    block["note"] = "leading terms only";
    doc["bounds"] = block;
  }

  {
    ordered_json block;
    block["run"] = built.seed_used;
    block["prng"] = "xoshiro256**";
    block["resamples"] = built.resample_count;
    doc["seeds"] = block;
  }

  {
    ordered_json block;
    block["included"] = false;
    block["note"] =
        "wall time goes to stderr; the report stays byte-stable per seed";
    doc["timing"] = block;
  }

  return ReportResult{doc.dump(2) + "\n", verified};
}

}  // namespace turan_forge::report
