#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "circledom/chord_diagram.hpp"
#include "circledom/graph.hpp"
#include "circledom/oracles.hpp"
#include "circledom/rooted_tree.hpp"

namespace circledom {

// A generated diagram together with what it encodes.
struct ReductionInstance {
  std::string kind;  // "domset", "independent", "acyclic" or "3part"
  CircleRepresentation repr;
  std::vector<std::string> roles;  // by chord id
  int target_size = 0;
  std::variant<std::monostate, ColoredGraph, ThreePartitionInstance> source;
  // Named construction coordinates mapped to slots, e.g. "cluster.2.3".
  std::map<std::string, std::vector<Slot>> layout;
  std::optional<RootedTree> tree;  // 3part only

  ChordId chord(std::string_view label) const;  // throws std::invalid_argument
};

// Pads every color class with isolated vertices up to the largest class.
// Throws std::invalid_argument on a monochromatic edge.
ColoredGraph normalize_kcc(const ColoredGraph& cg);

// Preconditions for the k-colored clique generators: k >= 2, balanced classes,
// no monochromatic edge. Violations throw std::invalid_argument.
ReductionInstance gen_domset_from_kcc(const ColoredGraph& cg);
ReductionInstance gen_independent_from_kcc(const ColoredGraph& cg);
ReductionInstance gen_acyclic_from_kcc(const ColoredGraph& cg);

// `clique` lists source vertices, one per color. Throws std::invalid_argument
// if it is not a colored clique of the source graph.
std::vector<ChordId> witness_domset_from_clique(const ReductionInstance& inst, const std::vector<int>& clique);
std::vector<ChordId> witness_from_clique_LR(const ReductionInstance& inst, const std::vector<int>& clique);

// Requires B/4 < a_i < B/2, sum = mB and mB > 6.
ReductionInstance gen_tree_from_3partition(const ThreePartitionInstance& inst);
// Triples list values and must form a partition of the instance with sums B.
std::vector<ChordId> witness_tree_from_partition(const ReductionInstance& inst, const std::vector<Triple>& triples);

struct StarInstance {
  Graph graph;
  RootedTree star;  // K_{1,k}, center 0
};
// Sets over elements of `universe`; yes iff at most k sets cover it.
StarInstance gen_star_from_setcover(const std::vector<int>& universe, const std::vector<std::vector<int>>& collection,
                                    int k);

// Text formats. Colored graph: "p <n> <m> <k>", "c <v> <color>", "e <u> <v>",
// all 1-based. 3-Partition: "tp <m> <B>" followed by 3m integers.
ColoredGraph parse_colored_graph(std::string_view text);
std::string serialize_colored_graph(const ColoredGraph& cg);
ThreePartitionInstance parse_three_partition(std::string_view text);
std::string serialize_three_partition(const ThreePartitionInstance& inst);

// Sidecar metadata: schema, kind, target size, roles, layout and source.
std::string instance_metadata_json(const ReductionInstance& inst);

}  // namespace circledom
