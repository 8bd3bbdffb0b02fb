#include "circledom/region.hpp"

#include <algorithm>
#include <vector>

namespace circledom {

Region chord_region(const CircleRepresentation& repr, ChordId chord) {
  auto [lo, hi] = repr.ends(chord);
  return Region{lo, hi, lo, hi};
}

bool in_arc(Slot from, Slot to, Slot x, int slot_count) {
  int len = (to - from + slot_count) % slot_count;
  int d = (x - from + slot_count) % slot_count;
  return d <= len;
}

bool well_ordered(const Region& r, int slot_count) {
  auto pos = [&](Slot x) { return (x - r.a + slot_count) % slot_count; };
  return pos(r.c) < pos(r.d) && pos(r.d) <= pos(r.b);
}

namespace {

bool in_region(const Region& r, Slot x, int slot_count) {
  return in_arc(r.a, r.c, x, slot_count) || in_arc(r.d, r.b, x, slot_count);
}

bool crosses_arcs(const CircleRepresentation& repr, const Region& r, ChordId chord) {
  const int n = repr.slot_count();
  auto [p, q] = repr.ends(chord);
  bool p_first = in_arc(r.a, r.c, p, n);
  bool q_first = in_arc(r.a, r.c, q, n);
  bool p_second = in_arc(r.d, r.b, p, n);
  bool q_second = in_arc(r.d, r.b, q, n);
  return (p_first && q_second) || (p_second && q_first);
}

}  // namespace

bool spans(const CircleRepresentation& repr, const Region& r, std::span<const ChordId> forest) {
  const int n = repr.slot_count();
  if (!well_ordered(r, n)) return false;
  for (Slot corner : {r.a, r.b, r.c, r.d}) {
    if (std::find(forest.begin(), forest.end(), repr.chord_at(corner)) == forest.end()) return false;
  }
  for (ChordId chord : forest) {
    auto [p, q] = repr.ends(chord);
    if (!in_region(r, p, n) || !in_region(r, q, n)) return false;
  }
  return true;
}

bool is_split_by(const CircleRepresentation& repr, const Graph& g, const Region& r,
                 std::span<const ChordId> forest) {
  // Label components by flood fill inside G[forest].
  std::vector<int> comp(forest.size(), -1);
  int comps = 0;
  for (std::size_t s = 0; s < forest.size(); ++s) {
    if (comp[s] != -1) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = comps;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y = 0; y < forest.size(); ++y) {
        if (comp[y] == -1 && g.adjacent(forest[x], forest[y])) {
          comp[y] = comps;
          stack.push_back(y);
        }
      }
    }
    ++comps;
  }
  std::vector<int> crossing(comps, 0);
  for (std::size_t s = 0; s < forest.size(); ++s)
    if (crosses_arcs(repr, r, forest[s])) ++crossing[comp[s]];
  return std::all_of(crossing.begin(), crossing.end(), [](int c) { return c == 1; });
}

bool is_region_dominating(const CircleRepresentation& repr, const Graph& g, const Region& r,
                          std::span<const ChordId> forest) {
  const int n = repr.slot_count();
  for (ChordId chord = 0; chord < repr.chord_count(); ++chord) {
    auto [p, q] = repr.ends(chord);
    bool inside = (in_arc(r.a, r.c, p, n) && in_arc(r.a, r.c, q, n)) ||
                  (in_arc(r.d, r.b, p, n) && in_arc(r.d, r.b, q, n));
    if (!inside) continue;
    bool dominated = std::any_of(forest.begin(), forest.end(), [&](ChordId f) {
      return f == chord || g.adjacent(f, chord);
    });
    if (!dominated) return false;
  }
  return true;
}

bool is_valid_for(const CircleRepresentation& repr, const Graph& g, const Region& r,
                  std::span<const ChordId> forest, bool require_tree) {
  if (!spans(repr, r, forest) || !is_split_by(repr, g, r, forest) ||
      !is_region_dominating(repr, g, r, forest))
    return false;
  if (!require_tree) return induced_edge_count(g, forest) + component_count(g, forest) ==
                            static_cast<int>(forest.size());
  return component_count(g, forest) == 1 &&
         induced_edge_count(g, forest) == static_cast<int>(forest.size()) - 1;
}

}  // namespace circledom
