#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "circledom/graph.hpp"
#include "circledom/parse_error.hpp"

namespace circledom {

using ChordId = int;
using Slot = int;

// A chord diagram: 2n endpoint slots on an anticlockwise circle, slot 0 just
// after the origin. Chord ids are assigned in order of first appearance.
class CircleRepresentation {
 public:
  CircleRepresentation() = default;

  // Builds a diagram from the label sitting in each slot. Every label must
  // occur exactly twice; throws ParseError otherwise.
  static CircleRepresentation from_slot_labels(const std::vector<std::string>& slot_labels);

  int chord_count() const { return static_cast<int>(ends_.size()); }
  int slot_count() const { return static_cast<int>(slots_.size()); }

  ChordId chord_at(Slot s) const { return slots_[s]; }
  // (lower, higher) slot pair of a chord.
  std::pair<Slot, Slot> ends(ChordId c) const { return ends_[c]; }
  Slot partner(Slot s) const {
    auto [lo, hi] = ends_[slots_[s]];
    return s == lo ? hi : lo;
  }

  const std::string& label(ChordId c) const { return labels_[c]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<ChordId> find(std::string_view label) const;

  bool operator==(const CircleRepresentation&) const = default;

 private:
  std::vector<ChordId> slots_;
  std::vector<std::pair<Slot, Slot>> ends_;
  std::vector<std::string> labels_;
};

// Text format: first non-comment line holds n, the remaining tokens are the
// 2n slot labels in slot order. Lines starting with '#' are ignored.
CircleRepresentation parse_representation(std::string_view text);
std::string serialize_representation(const CircleRepresentation& repr);

// True iff exactly one endpoint of y lies strictly between the endpoints of x.
// Throws std::out_of_range for unknown ids; a chord never crosses itself.
bool chords_cross(const CircleRepresentation& repr, ChordId x, ChordId y);

Graph build_intersection_graph(const CircleRepresentation& repr);

// True iff no chord has both endpoints in the open anticlockwise arc (p, q).
// For p == q the arc is the whole circle minus p.
bool open_interval_chord_free(const CircleRepresentation& repr, Slot p, Slot q);

// Uniformly random perfect matching on 2n slots, deterministic per seed.
CircleRepresentation random_representation(int n, std::uint64_t seed);

// Calls `visit` once for each perfect matching on 2n slots.
void for_each_representation(int n, const std::function<void(const CircleRepresentation&)>& visit);

// Spreadsheet-style labels: a..z, aa, ab, ...
std::string default_label(int index);

// Precomputed answers to open_interval_chord_free for every slot pair.
class ArcIndex {
 public:
  explicit ArcIndex(const CircleRepresentation& repr);

  int slot_count() const { return n_; }
  Slot partner(Slot s) const { return partner_[s]; }

  // Anticlockwise distance from `from` to `x`, in [0, 2n).
  int pos(Slot from, Slot x) const {
    int d = x - from;
    return d < 0 ? d + n_ : d;
  }
  bool chord_free(Slot p, Slot q) const {
    int d = pos(p, q);
    return (d == 0 ? n_ : d) <= reach_[p];
  }

 private:
  int n_;
  std::vector<Slot> partner_;
  // Largest arc length L such that (p, p+L) is chord-free.
  std::vector<int> reach_;
};

}  // namespace circledom
