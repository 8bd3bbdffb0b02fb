#pragma once

// Layered region DP shared by the dominating-tree solvers. Entries of layer j
// are (region, key) pairs realised by chord sets of size j. The policy decides
// what a key means and how keys combine.

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "circledom/chord_diagram.hpp"
#include "circledom/region.hpp"

namespace circledom::detail {

struct Derivation {
  enum class Kind : std::uint8_t { Init, Join, Close };
  Kind kind = Kind::Init;
  ChordId chord = -1;
  int left = -1;
  int right = -1;
};

struct Entry {
  Region region;  // canonical name
  std::uint32_t key = 0;
  int size = 0;
  Derivation how;
};

struct EngineCounters {
  std::uint64_t join_checks = 0;
  std::uint64_t close_checks = 0;
  double seconds = 0;
};

// Policy interface:
//   void init(ChordId, Emit)                        keys of a single chord
//   bool is_operand(uint32_t key)                   usable as a forest
//   std::optional<uint32_t> join(uint32_t, uint32_t)
//   void close(ChordId, optional<uint32_t>, optional<uint32_t>, Emit)
// where Emit is callable with a key.
template <class Policy>
class RegionEngine {
 public:
  static constexpr int kSlotBits = 11;
  static constexpr int kKeyBits = 64 - 4 * kSlotBits;

  RegionEngine(const CircleRepresentation& repr, Policy& policy)
      : repr_(repr), arcs_(repr), policy_(policy), n_(repr.slot_count()) {
    if (n_ > (1 << kSlotBits)) throw std::length_error("diagram too large for the region table");
    layer_begin_.push_back(0);
    layer_begin_.push_back(0);
    by_first_.emplace_back();
    gap_.emplace_back();
  }

  // Builds layers 1..max_size. After each layer, stop(j) may end the run.
  template <class Stop>
  void run(int max_size, Stop&& stop) {
    auto started = std::chrono::steady_clock::now();
    for (int j = 1; j <= max_size; ++j) {
      build_layer(j);
      index_layer(j);
      if (stop(j)) break;
    }
    counters_.seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  }

  int layers() const { return static_cast<int>(layer_begin_.size()) - 2; }
  int layer_begin(int j) const { return layer_begin_[j]; }
  int layer_end(int j) const { return layer_begin_[j + 1]; }
  const std::vector<Entry>& entries() const { return entries_; }
  const ArcIndex& arcs() const { return arcs_; }
  const EngineCounters& counters() const { return counters_; }

  // Both gaps of the region are chord-free, so a valid tree for it dominates everything.
  bool closes_circle(const Region& r) const { return arcs_.chord_free(r.c, r.d) && arcs_.chord_free(r.b, r.a); }

  template <class Visit>
  void for_each_chord(int entry, Visit&& visit) const {
    const Entry& e = entries_[entry];
    if (e.how.chord >= 0) visit(e.how.chord);
    if (e.how.left >= 0) for_each_chord(e.how.left, visit);
    if (e.how.right >= 0) for_each_chord(e.how.right, visit);
  }

 private:
  // Reference into a layer index: entry id and whether the swapped name is meant.
  static int ref(int entry, bool swapped) { return entry * 2 + (swapped ? 1 : 0); }
  Region named(int r) const {
    const Region& base = entries_[r >> 1].region;
    return (r & 1) ? base.swapped() : base;
  }

  void add(const Region& name, std::uint32_t key, int size, const Derivation& how) {
    if (key >> kKeyBits) throw std::length_error("too many keys for the region table");
    Region canon = name.canonical();
    std::uint64_t packed = (static_cast<std::uint64_t>(canon.a) << (3 * kSlotBits)) |
                           (static_cast<std::uint64_t>(canon.c) << (2 * kSlotBits)) |
                           (static_cast<std::uint64_t>(canon.d) << kSlotBits) |
                           static_cast<std::uint64_t>(canon.b);
    packed = (packed << kKeyBits) | key;
    auto [it, inserted] = seen_.try_emplace(packed, static_cast<int>(entries_.size()));
    if (!inserted) return;
    entries_.push_back(Entry{canon, key, size, how});
  }

  void build_layer(int j) {
    if (j == 1) {
      for (ChordId chord = 0; chord < repr_.chord_count(); ++chord) {
        Region r = chord_region(repr_, chord);
        policy_.init(chord, [&](std::uint32_t key) { add(r, key, 1, Derivation{Derivation::Kind::Init, chord}); });
      }
    } else {
      for (int jo = 1; 2 * jo <= j; ++jo) join_layers(jo, j - jo, j);
      close_alone(j - 1, j);
      for (int j1 = 1; 2 * j1 <= j - 1; ++j1) close_pair(j1, j - 1 - j1, j);
    }
    layer_begin_.push_back(static_cast<int>(entries_.size()));
  }

  void index_layer(int j) {
    by_first_.emplace_back(n_);
    gap_.emplace_back(n_);
    auto& by_first = by_first_[j];
    auto& gap = gap_[j];
    for (int e = layer_begin(j); e < layer_end(j); ++e) {
      if (!policy_.is_operand(entries_[e].key)) continue;
      for (bool swapped : {false, true}) {
        Region r = named(ref(e, swapped));
        by_first[r.a].push_back(ref(e, swapped));
        // Slots u in the open gap (b, a) with (b, u) and (u, a) chord-free.
        const int span = arcs_.pos(r.b, r.a);
        for (int t = 1; t < span; ++t) {
          Slot u = (r.b + t) % n_;
          if (!arcs_.chord_free(r.b, u)) break;
          if (arcs_.chord_free(u, r.a)) gap[u].push_back(ref(e, swapped));
        }
      }
    }
  }

  // Outer operand of size jo, inner operand of size ji placed in its inner gap.
  void join_layers(int jo, int ji, int j) {
    const auto& inner_index = by_first_[ji];
    for (int e1 = layer_begin(jo); e1 < layer_end(jo); ++e1) {
      const std::uint32_t k1 = entries_[e1].key;
      if (!policy_.is_operand(k1)) continue;
      for (bool swapped : {false, true}) {
        const Region r1 = named(ref(e1, swapped));
        const int pc = arcs_.pos(r1.a, r1.c);
        const int pd = arcs_.pos(r1.a, r1.d);
        for (int t = 1; pc + t < pd; ++t) {
          const Slot e = (r1.c + t) % n_;
          if (!arcs_.chord_free(r1.c, e)) break;
          for (int r : inner_index[e]) {
            ++counters_.join_checks;
            const Region r2 = named(r);  // e = r2.a, g = r2.c, h = r2.d, f = r2.b
            const int pf = arcs_.pos(r1.a, r2.b);
            if (pf < pc + t || pf >= pd || !arcs_.chord_free(r2.b, r1.d)) continue;
            auto key = policy_.join(k1, entries_[r >> 1].key);
            if (!key) continue;
            add(Region{r1.a, r1.b, r2.c, r2.d}, *key, j, Derivation{Derivation::Kind::Join, -1, e1, r >> 1});
          }
        }
      }
    }
  }

  // New chord uv with a single forest on the u side.
  void close_alone(int j1, int j) {
    const auto& index = gap_[j1];
    for (Slot u = 0; u < n_; ++u) {
      const Slot v = arcs_.partner(u);
      const ChordId chord = repr_.chord_at(u);
      for (int r : index[u]) {
        ++counters_.close_checks;
        const Region r1 = named(r);
        const int pv = arcs_.pos(u, v);
        if (pv <= arcs_.pos(u, r1.c) || pv >= arcs_.pos(u, r1.d)) continue;
        const Derivation how{Derivation::Kind::Close, chord, r >> 1, -1};
        policy_.close(chord, entries_[r >> 1].key, std::nullopt,
                      [&](std::uint32_t key) { add(Region{r1.d, v, r1.c, v}, key, j, how); });
      }
    }
  }

  // New chord uv with forests on both sides, of sizes j1 (u side) and j2.
  void close_pair(int j1, int j2, int j) {
    const auto& u_index = gap_[j1];
    const auto& v_index = gap_[j2];
    for (Slot u = 0; u < n_; ++u) {
      const Slot v = arcs_.partner(u);
      const ChordId chord = repr_.chord_at(u);
      const int pv = arcs_.pos(u, v);
      if (v_index[v].empty()) continue;
      for (int r : u_index[u]) {
        const Region r1 = named(r);
        const int pc = arcs_.pos(u, r1.c);
        const int pd = arcs_.pos(u, r1.d);
        if (pv <= pc || pv >= pd) continue;
        for (int s : v_index[v]) {
          ++counters_.close_checks;
          // Seen from u the second forest reads e g . h f with e = d', g = b', h = a', f = c'.
          const Region r2 = named(s);
          const int pe = arcs_.pos(u, r2.d);
          const int pf = arcs_.pos(u, r2.c);
          if (pe <= pc || pe >= pv || pf <= pv || pf >= pd) continue;
          const Derivation how{Derivation::Kind::Close, chord, r >> 1, s >> 1};
          policy_.close(chord, entries_[r >> 1].key, entries_[s >> 1].key,
                        [&](std::uint32_t key) { add(Region{r1.d, r2.c, r1.c, r2.d}, key, j, how); });
        }
      }
    }
  }

  const CircleRepresentation& repr_;
  ArcIndex arcs_;
  Policy& policy_;
  int n_;
  std::vector<Entry> entries_;
  std::unordered_map<std::uint64_t, int> seen_;
  std::vector<int> layer_begin_;
  std::vector<std::vector<std::vector<int>>> by_first_;
  std::vector<std::vector<std::vector<int>>> gap_;
  EngineCounters counters_;
};

}  // namespace circledom::detail
