#pragma once

#include <cstdint>
#include <span>

#include "circledom/chord_diagram.hpp"
#include "circledom/graph.hpp"

namespace circledom {

// Region ab-cd: the arcs [a,c] and [d,b], with a, c, d, b in anticlockwise
// order starting from a. The same two arcs are also named dc-ba.
struct Region {
  Slot a = 0;
  Slot b = 0;
  Slot c = 0;
  Slot d = 0;

  // The other name of the same region.
  Region swapped() const { return Region{d, c, b, a}; }
  // The name whose first slot is smaller; used as the table key.
  Region canonical() const { return a <= d ? *this : swapped(); }
  bool same_region(const Region& other) const { return canonical() == other.canonical(); }

  bool operator==(const Region&) const = default;
};

// Unit region of a chord: ab-ab.
Region chord_region(const CircleRepresentation& repr, ChordId chord);

// True iff a, c, d, b occur in that anticlockwise order from a, with the two
// arcs disjoint.
bool well_ordered(const Region& r, int slot_count);

// Closed anticlockwise arc membership.
bool in_arc(Slot from, Slot to, Slot x, int slot_count);

// Direct evaluation of the region definitions, used to audit table entries.
bool spans(const CircleRepresentation& repr, const Region& r, std::span<const ChordId> forest);
bool is_split_by(const CircleRepresentation& repr, const Graph& g, const Region& r,
                 std::span<const ChordId> forest);
bool is_region_dominating(const CircleRepresentation& repr, const Graph& g, const Region& r,
                          std::span<const ChordId> forest);
// spans, split and dominating; with `require_tree` the set must also induce a tree.
bool is_valid_for(const CircleRepresentation& repr, const Graph& g, const Region& r,
                  std::span<const ChordId> forest, bool require_tree);

}  // namespace circledom
