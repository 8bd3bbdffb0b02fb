#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "circledom/chord_diagram.hpp"
#include "circledom/dominating_tree.hpp"
#include "circledom/domination.hpp"
#include "circledom/fpt_tree.hpp"
#include "circledom/oracles.hpp"
#include "circledom/reductions.hpp"
#include "circledom/rooted_tree.hpp"

namespace circledom::cli {

namespace {

using nlohmann::json;

// A user-facing failure; reported as exit code 2.
struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr int kOracleMaxChords = 24;
constexpr int kOracleMaxSize = 6;

const std::vector<std::string> kVariants{"plain",   "connected",    "total", "independent",
                                         "acyclic", "conn-acyclic", "tree",  "tree-size"};

std::string read_file(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw Failure("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out || !(out << text)) throw Failure("cannot write " + path);
}

// Variant options shared by solve and verify.
struct VariantOptions {
  std::string name = "conn-acyclic";
  std::string tree_path;
  int size = -1;  // -1 when --size is absent

  void add_to(CLI::App* command) {
    command->add_option("--variant", name, "Domination variant")->check(CLI::IsMember(kVariants));
    command->add_option("--tree", tree_path, "Tree file, for --variant tree");
    command->add_option("--size", size, "Size bound; exact size for --variant tree-size")
        ->check(CLI::NonNegativeNumber);
  }

  std::optional<RootedTree> tree() const {
    if (name != "tree") return std::nullopt;
    if (tree_path.empty()) throw Failure("--variant tree needs --tree FILE");
    return parse_tree(read_file(tree_path));
  }

  DominationVariant variant(const std::optional<RootedTree>& tree) const {
    if (name == "plain") return DominationVariant::plain();
    if (name == "connected") return DominationVariant::connected();
    if (name == "total") return DominationVariant::total();
    if (name == "independent") return DominationVariant::independent();
    if (name == "acyclic") return DominationVariant::acyclic();
    if (name == "conn-acyclic") return DominationVariant::connected_acyclic();
    if (name == "tree") return DominationVariant::given_tree(*tree);
    if (size < 1) throw Failure("--variant tree-size needs --size K with K >= 1");
    return DominationVariant::fixed_size_tree(size);
  }
};

json labels_of(const CircleRepresentation& repr, const std::vector<int>& chords) {
  json out = json::array();
  for (int c : chords) out.push_back(repr.label(c));
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct SolveOptions {
  std::string input;
  VariantOptions variant;
  bool oracle = false;
  bool force = false;
  int root = 0;  // 1-based, 0 for the default
};

int cmd_solve(const SolveOptions& opt, std::ostream& out) {
  const auto repr = parse_representation(read_file(opt.input));
  const auto graph = build_intersection_graph(repr);
  const int n = repr.chord_count();
  const auto tree = opt.variant.tree();
  const auto variant = opt.variant.variant(tree);
  const std::string& name = opt.variant.name;
  if (opt.root != 0 && (!tree || opt.root < 1 || opt.root > tree->size()))
    throw Failure("--root must name a vertex of the --tree tree");

  const bool polynomial = name == "conn-acyclic" || name == "tree" || name == "tree-size";
  const bool use_oracle = opt.oracle || !polynomial;
  int bound = opt.variant.size >= 0 ? opt.variant.size : n;
  if (tree) bound = tree->size();
  if (use_oracle && !opt.force && (n > kOracleMaxChords || bound > kOracleMaxSize)) {
    throw Failure("brute force on " + std::to_string(n) + " chords with size bound " + std::to_string(bound) +
                  " exceeds the guard (n <= " + std::to_string(kOracleMaxChords) + ", size <= " +
                  std::to_string(kOracleMaxSize) + "); pass --size or --force");
  }

  const auto start = std::chrono::steady_clock::now();
  std::optional<std::vector<int>> witness;
  std::vector<int> tree_vertex;
  json stats = json::object();
  if (use_oracle) {
    if (tree) {
      witness = brute_tree_dominating(graph, *tree);
    } else if (name == "tree-size") {
      auto sets = brute_all_dominating_of_size(graph, variant, opt.variant.size);
      if (!sets.empty()) witness = sets.front();
    } else {
      witness = brute_min_dominating(graph, variant, bound);
    }
    stats["method"] = "oracle";
  } else if (name == "conn-acyclic") {
    DpStats dp;
    if (auto found = min_dominating_tree(repr, &dp); found && (opt.variant.size < 0 || found->size <= opt.variant.size))
      witness = found->chords;
    stats = {{"method", "dp"}, {"regions", dp.regions}, {"entries", dp.entries}};
  } else if (name == "tree-size") {
    DpStats dp;
    witness = dominating_tree_of_size(repr, opt.variant.size, &dp);
    stats = {{"method", "dp"}, {"regions", dp.regions}, {"entries", dp.entries}};
  } else {
    FptStats fpt;
    std::optional<int> root;
    if (opt.root != 0) root = opt.root - 1;
    if (auto found = fpt_tree_dominating(repr, *tree, root, &fpt)) {
      witness = found->chords;
      for (int v : found->vertex_of) tree_vertex.push_back(v + 1);
    }
    stats = {{"method", "fpt"},
             {"entries", fpt.entries},
             {"forest_keys", fpt.forest_keys},
             {"alpha", fpt.alpha},
             {"root", fpt.root + 1}};
  }
  stats["seconds"] = seconds_since(start);

  json result{{"schema", 1}, {"answer", witness ? "yes" : "no"}, {"variant", name}};
  if (witness) {
    if (!verify_variant(graph, *witness, variant)) throw std::logic_error("solver produced an invalid witness");
    result["size"] = witness->size();
    result["witness"] = labels_of(repr, *witness);
    if (!tree_vertex.empty()) result["tree_vertex"] = tree_vertex;
  }
  result["stats"] = stats;
  out << result.dump() << '\n';
  return witness ? kYes : kNo;
}

struct GenOptions {
  std::string kind;
  std::string source;
  std::string output;
  std::string tree_out;
  std::string meta_out;
  bool pad = false;
  bool json_out = false;
};

int cmd_gen(const GenOptions& opt, std::ostream& out) {
  const std::string text = read_file(opt.source);
  ReductionInstance inst;
  if (opt.kind == "3part") {
    inst = gen_tree_from_3partition(parse_three_partition(text));
  } else {
    auto cg = parse_colored_graph(text);
    if (opt.pad) cg = normalize_kcc(cg);
    if (opt.kind == "domset") inst = gen_domset_from_kcc(cg);
    if (opt.kind == "independent") inst = gen_independent_from_kcc(cg);
    if (opt.kind == "acyclic") inst = gen_acyclic_from_kcc(cg);
  }

  const std::string repr_text = serialize_representation(inst.repr);
  const std::string meta = instance_metadata_json(inst);
  std::string meta_path = opt.meta_out;
  std::string tree_path = opt.tree_out;
  if (!opt.output.empty()) {
    write_file(opt.output, repr_text);
    if (meta_path.empty()) meta_path = opt.output + ".json";
    if (tree_path.empty() && inst.tree) tree_path = opt.output + ".tree";
  }
  if (!meta_path.empty()) write_file(meta_path, meta);
  if (!tree_path.empty() && inst.tree) write_file(tree_path, serialize_tree(*inst.tree));

  if (opt.output.empty()) {
    out << repr_text;
  } else if (opt.json_out) {
    out << meta;
  } else {
    out << inst.kind << ": " << inst.repr.chord_count() << " chords, target size " << inst.target_size;
    if (inst.tree) out << ", tree on " << inst.tree->size() << " vertices";
    out << '\n';
  }
  return kYes;
}

struct VerifyOptions {
  std::string input;
  std::string witness;
  VariantOptions variant;
  bool json_out = false;
};

int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
  const auto repr = parse_representation(read_file(opt.input));
  std::vector<int> chords;
  std::istringstream words(read_file(opt.witness));
  std::string line;
  while (std::getline(words, line)) {
    if (auto first = line.find_first_not_of(" \t\r"); first == std::string::npos || line[first] == '#') continue;
    std::istringstream tokens(line);
    std::string label;
    while (tokens >> label) {
      auto id = repr.find(label);
      if (!id) throw Failure("witness names unknown chord '" + label + "'");
      chords.push_back(*id);
    }
  }
  const auto tree = opt.variant.tree();
  const bool ok = verify_variant(build_intersection_graph(repr), chords, opt.variant.variant(tree));
  if (opt.json_out) {
    out << json{{"schema", 1}, {"valid", ok}, {"variant", opt.variant.name}}.dump() << '\n';
  } else {
    out << (ok ? "true" : "false") << '\n';
  }
  return ok ? kYes : kNo;
}

int cmd_alpha(const std::string& path, int root, bool json_out, std::ostream& out) {
  const auto tree = parse_tree(read_file(path));
  if (root != 0 && (root < 1 || root > tree.size())) throw Failure("--root is not a vertex of the tree");
  const AlphaReport report = root != 0 ? alpha_for_root(tree, root - 1) : alpha(tree);
  if (json_out) {
    out << json{{"schema", 1}, {"alpha", report.value}, {"root", report.root + 1}, {"vertex", report.vertex + 1}}.dump()
        << '\n';
  } else {
    out << report.value << " (root " << report.root + 1 << ", vertex " << report.vertex + 1 << ")\n";
  }
  return kYes;
}

int cmd_random(int n, std::uint64_t seed, const std::string& output, std::ostream& out) {
  const std::string text = serialize_representation(random_representation(n, seed));
  if (output.empty()) {
    out << text;
  } else {
    write_file(output, text);
  }
  return kYes;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact domination algorithms on circle graphs", "circledom"};
  app.require_subcommand(1);
  bool json_out = false;

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Decide a domination variant on a chord diagram");
  solve_cmd->add_option("input", solve.input, "Representation file ('-' for stdin)")->required();
  solve.variant.add_to(solve_cmd);
  solve_cmd->add_flag("--oracle", solve.oracle, "Use brute force even when a polynomial algorithm exists");
  solve_cmd->add_flag("--force", solve.force, "Lift the brute-force size guard");
  solve_cmd->add_option("--root", solve.root, "Root vertex of --tree for the FPT algorithm (1-based)");
  solve_cmd->add_flag("--json", json_out, "Accepted for symmetry; solve always prints JSON");

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a reduction instance");
  gen_cmd->add_option("--kind", gen.kind, "Reduction")
      ->required()
      ->check(CLI::IsMember({"domset", "independent", "acyclic", "3part"}));
  gen_cmd->add_option("source", gen.source, "Colored graph or 3-partition file")->required();
  gen_cmd->add_option("-o,--output", gen.output, "Representation output; metadata goes to <output>.json");
  gen_cmd->add_option("--tree-out", gen.tree_out, "Tree file output for --kind 3part");
  gen_cmd->add_option("--meta", gen.meta_out, "Metadata output path");
  gen_cmd->add_flag("--pad", gen.pad, "Pad color classes with isolated vertices to equal size");
  gen_cmd->add_flag("--json", gen.json_out, "Print the metadata instead of a summary");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a witness file against a variant");
  verify_cmd->add_option("input", verify.input, "Representation file")->required();
  verify_cmd->add_option("witness", verify.witness, "Whitespace-separated chord labels")->required();
  verify.variant.name = "plain";
  verify.variant.add_to(verify_cmd);
  verify_cmd->add_flag("--json", verify.json_out, "Print JSON");

  std::string alpha_path;
  int alpha_root = 0;
  bool alpha_json = false;
  auto* alpha_cmd = app.add_subcommand("alpha", "Report the alpha parameter of a tree");
  alpha_cmd->add_option("tree", alpha_path, "Tree file")->required();
  alpha_cmd->add_option("--root", alpha_root, "Fix the root (1-based)");
  alpha_cmd->add_flag("--json", alpha_json, "Print JSON");

  int random_n = 0;
  std::uint64_t random_seed = 0;
  std::string random_out;
  auto* random_cmd = app.add_subcommand("random", "Write a uniformly random chord diagram");
  random_cmd->add_option("n", random_n, "Number of chords")->required()->check(CLI::Range(0, 1024));
  random_cmd->add_option("--seed", random_seed, "Random seed");
  random_cmd->add_option("-o,--output", random_out, "Output file");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kError;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve, out);
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*verify_cmd) return cmd_verify(verify, out);
    if (*alpha_cmd) return cmd_alpha(alpha_path, alpha_root, alpha_json, out);
    return cmd_random(random_n, random_seed, random_out, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
}

}  // namespace circledom::cli
