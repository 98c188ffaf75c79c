#include "ramanujan/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ramanujan/errors.hpp"
#include "ramanujan/expectation_engine.hpp"
#include "ramanujan/oracle.hpp"
#include "ramanujan/ramanujan_walk.hpp"
#include "ramanujan/serialization.hpp"

namespace ramanujan::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

// Inline JSON when the argument looks like an object, otherwise a file path.
json read_node_argument(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') {
    try {
      return json::parse(arg);
    } catch (const json::parse_error& e) {
      throw UsageError(std::string("node: ") + e.what());
    }
  }
  return read_json_file(arg);
}

void write_json(const fs::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path.string());
  out << j.dump(2) << "\n";
}

struct BuildArgs {
  unsigned n = 0;
  unsigned d = 0;
  std::string out_dir = ".";
  bool trace = false;
  bool canonical_first_matching = false;
  unsigned jobs = 1;
};

int cmd_build(const BuildArgs& args, std::ostream& out, std::ostream& err) {
  const Params params{args.n, args.d};
  try {
    params.validate();
  } catch (const InvalidParams& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  const fs::path dir(args.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    err << "error: cannot create " << dir << ": " << ec.message() << "\n";
    return kUsage;
  }

  WalkOptions options;
  options.jobs = args.jobs;
  options.canonical_first_matching = args.canonical_first_matching;

  WalkResult walk;
  try {
    walk = find_leaf(params, options);
  } catch (const RootExceedsBound& e) {
    err << "no Ramanujan guarantee: " << e.what() << "\n";
    return kFail;
  } catch (const WalkFailure& e) {
    write_json(dir / "trace.json", transcript_to_json(e.transcript(), std::nullopt));
    err << "internal error: " << e.what() << " (transcript in " << (dir / "trace.json") << ")\n";
    return kInternal;
  }

  const Multigraph graph = leaf_graph(walk.leaf, params);
  const Certificate cert = certify(graph);
  write_json(dir / "graph.json", multigraph_to_json(graph));
  write_json(dir / "certificate.json", certificate_to_json(cert));
  if (args.trace) write_json(dir / "trace.json", transcript_to_json(walk, cert));

  out << "n=" << params.n << " d=" << params.d << " stages=" << walk.stages.size()
      << " certificate=" << (cert.passed ? "passed" : "FAILED") << "\n";
  out << "wrote " << (dir / "graph.json").string() << " and "
      << (dir / "certificate.json").string() << "\n";
  return cert.passed ? kPass : kFail;
}

int cmd_certify(const std::string& path, std::ostream& out, std::ostream& err) {
  Multigraph graph;
  try {
    graph = multigraph_from_json(read_json_file(path));
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  try {
    const Certificate cert = certify(graph);
    out << certificate_to_json(cert).dump(2) << "\n";
    return cert.passed ? kPass : kFail;
  } catch (const NotRegular& e) {
    err << "error: graph is not regular: " << e.what() << "\n";
    return kUsage;
  }
}

int cmd_node_poly(const std::string& node_arg, const Params& params, bool with_ctensor,
                  std::ostream& out) {
  params.validate();
  const NodeState node = node_from_json(read_node_argument(node_arg), params);
  json result = {{"n", params.n},
                 {"d", params.d},
                 {"node", node_to_json(node)},
                 {"poly", poly_to_json(node_polynomial(node, params))}};
  if (with_ctensor) {
    const HalfAdjacency half = half_adjacency(node, params);
    const BlockExpectation detail = fixed_plus_random_block_detail(half.a, half.block);
    result["ctensor"] = detail.ctensor ? ctensor_to_json(*detail.ctensor) : json(nullptr);
  }
  out << result.dump(2) << "\n";
  return kPass;
}

int cmd_oracle(const std::string& node_arg, const Params& params, std::uint64_t cap,
               std::ostream& out) {
  params.validate();
  const NodeState node = node_from_json(read_node_argument(node_arg), params);
  const UniPoly<Rational> poly = oracle::brute_expected_charpoly(node, params, cap);
  out << json({{"n", params.n},
               {"d", params.d},
               {"node", node_to_json(node)},
               {"poly", poly_to_json(poly)}})
             .dump(2)
      << "\n";
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Deterministic bipartite Ramanujan multigraph construction", "ramanujan"};
  app.require_subcommand(1);

  BuildArgs build;
  auto* build_cmd = app.add_subcommand("build", "Construct a graph and certify it");
  build_cmd->add_option("--n", build.n, "Number of vertices (even)")->required();
  build_cmd->add_option("--d", build.d, "Degree")->required();
  build_cmd->add_option("--out", build.out_dir, "Output directory");
  build_cmd->add_flag("--trace", build.trace, "Also write trace.json");
  build_cmd->add_flag("--canonical-first-matching", build.canonical_first_matching,
                      "Fix the first matching to the identity");
  build_cmd->add_option("--jobs", build.jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::string graph_path;
  auto* certify_cmd = app.add_subcommand("certify", "Certify a graph JSON file");
  certify_cmd->add_option("graph", graph_path, "Graph JSON file")->required();

  std::string node_arg;
  Params node_params;
  bool with_ctensor = false;
  auto* node_cmd = app.add_subcommand("node-poly", "Print a node polynomial");
  node_cmd->add_option("node", node_arg, "Node JSON (inline or file)")->required();
  node_cmd->add_option("--n", node_params.n)->required();
  node_cmd->add_option("--d", node_params.d)->required();
  node_cmd->add_flag("--ctensor", with_ctensor, "Also dump the minor-sum tensor");

  std::string oracle_node;
  Params oracle_params;
  std::uint64_t cap = oracle::kDefaultCap;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force expected characteristic polynomial");
  oracle_cmd->add_option("node", oracle_node, "Node JSON (inline or file)")->required();
  oracle_cmd->add_option("--n", oracle_params.n)->required();
  oracle_cmd->add_option("--d", oracle_params.d)->required();
  oracle_cmd->add_option("--oracle-cap", cap, "Maximum number of enumerated outcomes");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*build_cmd) return cmd_build(build, out, err);
    if (*certify_cmd) return cmd_certify(graph_path, out, err);
    if (*node_cmd) return cmd_node_poly(node_arg, node_params, with_ctensor, out);
    if (*oracle_cmd) return cmd_oracle(oracle_node, oracle_params, cap, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidParams& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidNode& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const TooLarge& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace ramanujan::cli
