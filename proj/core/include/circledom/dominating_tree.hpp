#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <tuple>
#include <optional>
#include <vector>

#include "circledom/chord_diagram.hpp"
#include "circledom/region.hpp"

namespace circledom {

inline constexpr int kInfinity = std::numeric_limits<int>::max();

// How a table value was obtained.
struct RegionDerivation {
  enum class Kind { None, Init, T1, T2 };
  Kind kind = Kind::None;
  ChordId chord = -1;
  std::optional<Region> first;
  std::optional<Region> second;
};

struct RegionValue {
  int forest = kInfinity;  // smallest valid forest
  int tree = kInfinity;    // smallest valid tree
  RegionDerivation forest_from;
  RegionDerivation tree_from;
};

// Region -> smallest valid forest / tree sizes, keyed by canonical name.
class RegionTable {
 public:
  int forest_size(const Region& r) const;
  int tree_size(const Region& r) const;
  const RegionValue* find(const Region& r) const;

  // Min-update; returns true if either value improved.
  bool improve_forest(const Region& r, int size, const RegionDerivation& how);
  bool improve_tree(const Region& r, int size, const RegionDerivation& how);

  std::size_t size() const { return values_.size(); }
  const std::map<std::tuple<Slot, Slot, Slot, Slot>, std::pair<Region, RegionValue>>& values() const {
    return values_;
  }

  // Chords of the recorded forest (or tree) of a region.
  std::vector<ChordId> forest_witness(const Region& r) const;
  std::vector<ChordId> tree_witness(const Region& r) const;

 private:
  void collect(const RegionDerivation& how, std::vector<ChordId>& out) const;

  std::map<std::tuple<Slot, Slot, Slot, Slot>, std::pair<Region, RegionValue>> values_;
};

// One unit entry ab-ab per chord.
RegionTable init_regions(const CircleRepresentation& repr);

// ab-cd with ef-gh inside its inner gap gives ab-gh; regions are read with
// the names given.
std::optional<std::pair<Region, int>> try_combine_T1(const CircleRepresentation& repr, RegionTable& table,
                                                     const Region& r1, const Region& r2);
// Chord uv closes ab-cd (and optionally ef-gh) into a tree for df-ce. Either
// orientation of the chord is tried.
std::optional<std::pair<Region, int>> try_combine_T2(const CircleRepresentation& repr, RegionTable& table,
                                                     const Region& r1, const std::optional<Region>& r2,
                                                     ChordId uv);

struct DpStats {
  std::uint64_t entries = 0;
  std::uint64_t regions = 0;
  std::uint64_t join_checks = 0;
  std::uint64_t close_checks = 0;
  double seconds = 0;
};

struct DominatingTree {
  int size = 0;
  std::vector<ChordId> chords;  // sorted
  Region region;                // region whose tree closes the circle
};

std::optional<DominatingTree> min_dominating_tree(const CircleRepresentation& repr, DpStats* stats = nullptr);
std::optional<std::vector<ChordId>> dominating_tree_of_size(const CircleRepresentation& repr, int k,
                                                            DpStats* stats = nullptr);
// Every k for which a dominating tree with exactly k chords exists.
std::vector<int> dominating_tree_sizes(const CircleRepresentation& repr, DpStats* stats = nullptr);

// Minimum values for every region reachable by the dynamic program.
RegionTable build_region_table(const CircleRepresentation& repr);

}  // namespace circledom
