#include "turan_forge/cli.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "turan_forge/constructions.hpp"
#include "turan_forge/edge_list.hpp"
#include "turan_forge/embeddings.hpp"
#include "turan_forge/gridsearch.hpp"
#include "turan_forge/report.hpp"
#include "turan_forge/theta.hpp"

namespace turan_forge::cli {

namespace {

using nlohmann::ordered_json;

struct ConstructArgs {
  std::string family;
  std::uint64_t p = 3;
  unsigned s = 2;
  unsigned t = 2;
  std::uint64_t alpha = 1;
  std::string mode = "generic";
  std::uint64_t seed = 0;
  std::string equations_path;
  std::string out_path;
};

struct CheckArgs {
  std::string in_path;
  std::string forbid;
  unsigned forbid_cycle = 0;
  std::uint64_t budget = gridsearch::kDefaultBudget;
};

struct ThetaArgs {
  std::uint64_t p = 3;
  unsigned k = 2;
  unsigned max_dim = 0;  // 0: defaults to p + 1
};

struct EmbedArgs {
  std::string kind;
  unsigned s = 1;
  unsigned t = 2;
  std::int64_t d = 1;
  unsigned n = 1;
  std::uint64_t p = 3;
  std::uint64_t seed = 0;
  std::int64_t trials = -1;  // -1: per-kind default
};

struct ReportArgs {
  ConstructArgs construct;
  std::uint64_t budget = gridsearch::kDefaultBudget;
  std::string out_path;
};

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

constructions::ConstructionSpec spec_from_args(const ConstructArgs& args) {
  constructions::ConstructionSpec spec;
  spec.family = constructions::family_from_name(args.family);
  spec.p = args.p;
  spec.s = args.s;
  spec.t = args.t;
  spec.alpha = args.alpha;
  spec.seed = args.seed;
  if (args.mode == "generic") {
    spec.mode = constructions::InnerProductMode::Generic;
  } else if (args.mode == "explicit") {
    spec.mode = constructions::InnerProductMode::Explicit;
  } else {
    throw std::invalid_argument("mode must be 'generic' or 'explicit'");
  }
  if (spec.family == constructions::Family::Custom) {
    if (args.equations_path.empty()) {
      throw std::invalid_argument("custom family needs --equations");
    }
    const auto map = embeddings::polymap_from_text(
        read_text_file(args.equations_path), spec.p);
    if (map.s == 0 || map.s % 2 != 0) {
      throw std::invalid_argument(
          "custom equations need an even number of variables (x block then y "
          "block)");
    }
    spec.equations = map.components;
    spec.custom_side_dim = map.s / 2;
  } else if (!args.equations_path.empty()) {
    throw std::invalid_argument("--equations is only for --family custom");
  }
  return spec;
}

int do_construct(const ConstructArgs& args, std::ostream& out) {
  const auto spec = spec_from_args(args);
  const auto built = constructions::build_graph(spec);
  edge_list::write_file(args.out_path, built.graph, spec.family_name(),
                        spec.p);
  out << "wrote " << args.out_path << ": family=" << spec.family_name()
      << " p=" << spec.p << " left=" << built.graph.left_size
      << " right=" << built.graph.right_size
      << " edges=" << built.graph.edge_count() << "\n";
  return 0;
}

int do_check(const CheckArgs& args, std::ostream& out) {
  if (args.forbid.empty() && args.forbid_cycle == 0) {
    throw std::invalid_argument("check needs --forbid or --forbid-cycle");
  }
  const auto data = edge_list::read_file(args.in_path);
  const auto& g = data.graph;
  out << "graph: family=" << data.family << " p=" << data.p
      << " left=" << g.left_size << " right=" << g.right_size
      << " edges=" << g.edge_count() << "\n";

  int exit_code = 0;
  if (!args.forbid.empty()) {
    unsigned s = 0, t = 0;
    char comma = 0;
    std::istringstream parse(args.forbid);
    std::string rest;
    if (!(parse >> s >> comma >> t) || comma != ',' || (parse >> rest) ||
        s == 0 || t == 0) {
      throw std::invalid_argument("--forbid expects 's,t' with s,t >= 1");
    }
    const auto bound = gridsearch::check_kst_bound(g, s, t);
    out << "kst_bound: s=" << s << " t=" << t << " lhs=" << bound.lhs
        << " rhs=" << bound.rhs << " holds=" << (bound.holds ? "true" : "false")
        << "\n";
    const auto outcome = gridsearch::find_kst(g, s, t, args.budget);
    if (outcome.found) {
      out << "search: s=" << s << " t=" << t << " witness "
          << gridsearch::witness_to_json(*outcome.found) << "\n";
      exit_code = 1;
    } else if (outcome.exhaustive) {
      out << "search: s=" << s << " t=" << t << " exhaustive, none found\n";
    } else {
      out << "search: s=" << s << " t=" << t
          << " budget exhausted, none found (inconclusive)\n";
    }
    if (!bound.holds) exit_code = 1;  // counting proof of existence
  }

  if (args.forbid_cycle != 0) {
    const auto value = gridsearch::girth(g);
    out << "girth: value=";
    if (value) {
      out << *value;
    } else {
      out << "none";
    }
    const bool holds = !value || *value > args.forbid_cycle;
    out << " forbidden_cycle=" << args.forbid_cycle
        << " holds=" << (holds ? "true" : "false") << "\n";
    if (!holds) exit_code = 1;
  }
  return exit_code;
}

int do_theta(const ThetaArgs& args, std::ostream& out) {
  const auto th = theta::theta_poly(args.p, args.k);
  const unsigned max_dim =
      args.max_dim == 0 ? static_cast<unsigned>(args.p) + 1 : args.max_dim;
  const auto tuples = theta::admissible_tuples(th, max_dim);

  ordered_json doc;
  doc["p"] = args.p;
  doc["k"] = args.k;
  ordered_json support = ordered_json::array();
  for (const auto& mono : th.poly.support()) {
    support.push_back(mono);
  }
  doc["support"] = support;
  doc["max_dim"] = max_dim;
  ordered_json tuple_list = ordered_json::array();
  for (const auto& t : tuples) {
    tuple_list.push_back(t.dims);
  }
  doc["minimal_tuples"] = tuple_list;
  doc["grid_dimension"] = args.k == 2
                              ? ordered_json(theta::grid_dimension(args.p))
                              : ordered_json(nullptr);
  out << doc.dump(2) << "\n";
  return 0;
}

int do_embed(const EmbedArgs& args, std::ostream& out) {
  ordered_json doc;
  bool pass = false;
  if (args.kind == "veronese") {
    const unsigned trials =
        args.trials < 0 ? 20u : static_cast<unsigned>(args.trials);
    unsigned resamples = 0;
    const auto map = embeddings::veronese_regular(args.s, args.t, args.d,
                                                  args.seed, args.p,
                                                  &resamples);
    const auto rep =
        embeddings::test_regularity(map, args.t, args.p, trials, args.seed);
    unsigned min_rank = args.t;
    for (const auto& w : rep.witnesses) {
      if (w.rank < min_rank) min_rank = w.rank;
    }
    pass = rep.pass;
    doc["kind"] = "veronese";
    doc["s"] = args.s;
    doc["t"] = args.t;
    doc["d"] = args.d;
    doc["p"] = args.p;
    doc["seed"] = args.seed;
    doc["resamples"] = resamples;
    doc["trials"] = trials;
    doc["min_rank"] = min_rank;
    doc["pass"] = pass;
  } else if (args.kind == "prime-power") {
    const unsigned trials =
        args.trials < 0 ? 200u : static_cast<unsigned>(args.trials);
    const auto emb = embeddings::prime_power_embedding(args.s, args.n);
    const auto rep =
        embeddings::test_nondegeneracy(emb.map, args.s, args.p, trials,
                                       args.seed);
    pass = mpz_class(rep.max_fiber) <= emb.order;
    doc["kind"] = "prime-power";
    doc["s"] = args.s;
    doc["n"] = args.n;
    doc["p"] = args.p;
    ordered_json primes = ordered_json::array();
    for (unsigned i = 0; i < emb.primes.n; ++i) {
      ordered_json row = ordered_json::array();
      for (unsigned j = 0; j < emb.primes.s; ++j) {
        row.push_back(emb.primes.at(i, j));
      }
      primes.push_back(row);
    }
    doc["primes"] = primes;
    doc["order_bound"] = emb.order.get_str();
    doc["trials"] = trials;
    doc["max_fiber"] = rep.max_fiber;
    doc["pass"] = pass;
  } else {
    throw std::invalid_argument("--kind must be 'veronese' or 'prime-power'");
  }
  out << doc.dump(2) << "\n";
  return pass ? 0 : 1;
}

int do_report(const ReportArgs& args, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  report::ReportOptions options;
  options.spec = spec_from_args(args.construct);
  options.budget = args.budget;
  const auto result = report::verification_report(options);
  if (args.out_path.empty()) {
    out << result.json;
  } else {
    std::ofstream file(args.out_path);
    if (!file) {
      throw std::runtime_error("cannot open '" + args.out_path +
                               "' for writing");
    }
    file << result.json;
    if (!file) throw std::runtime_error("write to '" + args.out_path + "' failed");
    out << "wrote " << args.out_path << "\n";
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  err << "elapsed_ms=" << elapsed.count() << "\n";
  return result.verified ? 0 : 1;
}

void add_construct_options(CLI::App* cmd, ConstructArgs& args,
                           bool allow_custom) {
  cmd->add_option("--family", args.family,
                  allow_custom
                      ? "er | brown | norm | projnorm | wenger | inner | custom"
                      : "er | brown | norm | projnorm | wenger | inner")
      ->required();
  cmd->add_option("--p", args.p, "prime modulus")->required();
  cmd->add_option("--s", args.s, "norm / inner-product parameter");
  cmd->add_option("--t", args.t, "coordinate count (wenger)");
  cmd->add_option("--alpha", args.alpha, "sphere radius (brown)");
  cmd->add_option("--mode", args.mode, "inner-product mode: generic | explicit");
  cmd->add_option("--seed", args.seed, "PRNG seed (inner)");
  if (allow_custom) {
    cmd->add_option("--equations", args.equations_path,
                    "defining equations file (custom)");
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "Extremal bipartite graphs from hypersurfaces: construction, forbidden-"
      "subgraph checks, obstruction polynomials, and verification reports"};
  app.name("turan-forge");
  app.require_subcommand(1);

  ConstructArgs construct_args;
  auto* construct_cmd =
      app.add_subcommand("construct", "build a graph and write its edge list");
  add_construct_options(construct_cmd, construct_args, true);
  construct_cmd->add_option("--out", construct_args.out_path, "edge list path")
      ->required();

  CheckArgs check_args;
  auto* check_cmd =
      app.add_subcommand("check", "test an edge list for forbidden structure");
  check_cmd->add_option("--in", check_args.in_path, "edge list path")
      ->required();
  check_cmd->add_option("--forbid", check_args.forbid,
                        "grid to search for, as 's,t'");
  check_cmd->add_option("--forbid-cycle", check_args.forbid_cycle,
                        "fail when the girth is at most this length");
  check_cmd->add_option("--budget", check_args.budget,
                        "search node budget (default 10^8)");

  ThetaArgs theta_args;
  auto* theta_cmd = app.add_subcommand(
      "theta", "obstruction polynomial support and grid dimensions");
  theta_cmd->add_option("--p", theta_args.p, "odd prime")->required();
  theta_cmd->add_option("--k", theta_args.k, "variable count (default 2)");
  theta_cmd->add_option("--max-dim", theta_args.max_dim,
                        "tuple entry cap (default p + 1)");

  EmbedArgs embed_args;
  auto* embed_cmd =
      app.add_subcommand("embed", "build an embedding and test it");
  embed_cmd->add_option("--kind", embed_args.kind, "veronese | prime-power")
      ->required();
  embed_cmd->add_option("--s", embed_args.s, "domain dimension");
  embed_cmd->add_option("--t", embed_args.t, "regularity target (veronese)");
  embed_cmd->add_option("--d", embed_args.d, "polynomial degree (veronese)");
  embed_cmd->add_option("--n", embed_args.n, "target dimension (prime-power)");
  embed_cmd->add_option("--p", embed_args.p, "prime modulus")->required();
  embed_cmd->add_option("--seed", embed_args.seed, "PRNG seed");
  embed_cmd->add_option("--trials", embed_args.trials,
                        "test trials; 0 = exhaustive");

  ReportArgs report_args;
  auto* report_cmd = app.add_subcommand(
      "report", "construct, verify, and emit a JSON report");
  add_construct_options(report_cmd, report_args.construct, false);
  report_cmd->add_option("--budget", report_args.budget,
                         "search node budget (default 10^8)");
  report_cmd->add_option("--out", report_args.out_path,
                         "report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e, out, err);  // --help and friends
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(construct_cmd)) {
      return do_construct(construct_args, out);
    }
    if (app.got_subcommand(check_cmd)) {
      return do_check(check_args, out);
    }
    if (app.got_subcommand(theta_cmd)) {
      return do_theta(theta_args, out);
    }
    if (app.got_subcommand(embed_cmd)) {
      return do_embed(embed_args, out);
    }
    if (app.got_subcommand(report_cmd)) {
      return do_report(report_args, out, err);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("turan-forge");
  for (const auto& arg : args) argv.push_back(arg.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace turan_forge::cli
