#include "circledom/dominating_tree.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "circledom/domination.hpp"
#include "region_engine.hpp"

namespace circledom {

namespace {

std::tuple<Slot, Slot, Slot, Slot> table_key(const Region& r) {
  Region c = r.canonical();
  return {c.a, c.c, c.d, c.b};
}

int pos(Slot from, Slot x, int n) { return (x - from + n) % n; }

}  // namespace

const RegionValue* RegionTable::find(const Region& r) const {
  auto it = values_.find(table_key(r));
  return it == values_.end() ? nullptr : &it->second.second;
}

int RegionTable::forest_size(const Region& r) const {
  const RegionValue* v = find(r);
  return v ? v->forest : kInfinity;
}

int RegionTable::tree_size(const Region& r) const {
  const RegionValue* v = find(r);
  return v ? v->tree : kInfinity;
}

bool RegionTable::improve_forest(const Region& r, int size, const RegionDerivation& how) {
  auto& slot = values_.try_emplace(table_key(r), r.canonical(), RegionValue{}).first->second.second;
  if (size >= slot.forest) return false;
  slot.forest = size;
  slot.forest_from = how;
  return true;
}

bool RegionTable::improve_tree(const Region& r, int size, const RegionDerivation& how) {
  auto& slot = values_.try_emplace(table_key(r), r.canonical(), RegionValue{}).first->second.second;
  if (size >= slot.tree) return false;
  slot.tree = size;
  slot.tree_from = how;
  return true;
}

void RegionTable::collect(const RegionDerivation& how, std::vector<ChordId>& out) const {
  if (how.chord >= 0) out.push_back(how.chord);
  for (const auto& part : {how.first, how.second}) {
    if (!part) continue;
    const RegionValue* v = find(*part);
    if (v) collect(v->forest_from, out);
  }
}

std::vector<ChordId> RegionTable::forest_witness(const Region& r) const {
  std::vector<ChordId> out;
  if (const RegionValue* v = find(r); v && v->forest != kInfinity) collect(v->forest_from, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ChordId> RegionTable::tree_witness(const Region& r) const {
  std::vector<ChordId> out;
  if (const RegionValue* v = find(r); v && v->tree != kInfinity) collect(v->tree_from, out);
  std::sort(out.begin(), out.end());
  return out;
}

RegionTable init_regions(const CircleRepresentation& repr) {
  RegionTable table;
  for (ChordId chord = 0; chord < repr.chord_count(); ++chord) {
    RegionDerivation how{RegionDerivation::Kind::Init, chord, std::nullopt, std::nullopt};
    Region r = chord_region(repr, chord);
    table.improve_forest(r, 1, how);
    table.improve_tree(r, 1, how);
  }
  return table;
}

std::optional<std::pair<Region, int>> try_combine_T1(const CircleRepresentation& repr, RegionTable& table,
                                                     const Region& r1, const Region& r2) {
  const int n = repr.slot_count();
  if (n == 0 || !well_ordered(r1, n) || !well_ordered(r2, n)) return std::nullopt;
  const int v1 = table.forest_size(r1);
  const int v2 = table.forest_size(r2);
  if (v1 == kInfinity || v2 == kInfinity) return std::nullopt;
  // a <= c < e <= g < h <= f < d <= b, read from a.
  const int pc = pos(r1.a, r1.c, n), pd = pos(r1.a, r1.d, n), pb = pos(r1.a, r1.b, n);
  const int pe = pos(r1.a, r2.a, n), pg = pos(r1.a, r2.c, n);
  const int ph = pos(r1.a, r2.d, n), pf = pos(r1.a, r2.b, n);
  if (!(pc < pe && pe <= pg && pg < ph && ph <= pf && pf < pd && pd <= pb)) return std::nullopt;
  if (!open_interval_chord_free(repr, r1.c, r2.a) || !open_interval_chord_free(repr, r2.b, r1.d))
    return std::nullopt;
  Region result{r1.a, r1.b, r2.c, r2.d};
  RegionDerivation how{RegionDerivation::Kind::T1, -1, r1, r2};
  table.improve_forest(result, v1 + v2, how);
  return std::pair{result, v1 + v2};
}

std::optional<std::pair<Region, int>> try_combine_T2(const CircleRepresentation& repr, RegionTable& table,
                                                     const Region& r1, const std::optional<Region>& r2,
                                                     ChordId uv) {
  const int n = repr.slot_count();
  if (n == 0 || uv < 0 || uv >= repr.chord_count() || !well_ordered(r1, n)) return std::nullopt;
  if (r2 && !well_ordered(*r2, n)) return std::nullopt;
  const int v1 = table.forest_size(r1);
  const int v2 = r2 ? table.forest_size(*r2) : 0;
  if (v1 == kInfinity || v2 == kInfinity) return std::nullopt;
  auto [lo, hi] = repr.ends(uv);
  for (auto [u, v] : {std::pair{lo, hi}, std::pair{hi, lo}}) {
    auto p = [&](Slot x) { return pos(u, x, n); };
    // u < a <= c < v < d <= b, read from u.
    if (!(0 < p(r1.a) && p(r1.a) <= p(r1.c) && p(r1.c) < p(v) && p(v) < p(r1.d) && p(r1.d) <= p(r1.b)))
      continue;
    if (!open_interval_chord_free(repr, u, r1.a) || !open_interval_chord_free(repr, r1.b, u)) continue;
    Slot e = v, f = v, g = v, h = v;
    if (r2) {
      e = r2->a, f = r2->b, g = r2->c, h = r2->d;
      // c < e <= g < v < h <= f < d.
      if (!(p(r1.c) < p(e) && p(e) <= p(g) && p(g) < p(v) && p(v) < p(h) && p(h) <= p(f) && p(f) < p(r1.d)))
        continue;
      if (!open_interval_chord_free(repr, g, v) || !open_interval_chord_free(repr, v, h)) continue;
    }
    Region result{r1.d, f, r1.c, e};
    RegionDerivation how{RegionDerivation::Kind::T2, uv, r1, r2};
    const int size = v1 + v2 + 1;
    table.improve_forest(result, size, how);
    table.improve_tree(result, size, how);
    return std::pair{result, size};
  }
  return std::nullopt;
}

namespace {

// Keys: 0 = forest, 1 = tree. The first layer reaching a key holds its minimum.
struct MinPolicy {
  template <class Emit>
  void init(ChordId, Emit&& emit) {
    emit(0);
    emit(1);
  }
  bool is_operand(std::uint32_t key) const { return key == 0; }
  std::optional<std::uint32_t> join(std::uint32_t, std::uint32_t) const { return 0; }
  template <class Emit>
  void close(ChordId, std::optional<std::uint32_t>, std::optional<std::uint32_t>, Emit&& emit) {
    emit(0);
    emit(1);
  }
};

// Keys carry the size as well, so every achievable size of a region is kept.
struct SizesPolicy {
  static std::uint32_t size_of(std::uint32_t key) { return key >> 1; }
  template <class Emit>
  void init(ChordId, Emit&& emit) {
    emit(2);
    emit(3);
  }
  bool is_operand(std::uint32_t key) const { return (key & 1) == 0; }
  std::optional<std::uint32_t> join(std::uint32_t k1, std::uint32_t k2) const {
    return (size_of(k1) + size_of(k2)) << 1;
  }
  template <class Emit>
  void close(ChordId, std::optional<std::uint32_t> k1, std::optional<std::uint32_t> k2, Emit&& emit) {
    std::uint32_t size = 1 + (k1 ? size_of(*k1) : 0) + (k2 ? size_of(*k2) : 0);
    emit(size << 1);
    emit((size << 1) | 1);
  }
};

template <class Engine>
void fill_stats(const Engine& engine, DpStats* stats) {
  if (!stats) return;
  std::unordered_set<std::uint64_t> regions;
  for (const auto& e : engine.entries()) {
    const Region& r = e.region;
    regions.insert((std::uint64_t(r.a) << 48) | (std::uint64_t(r.c) << 32) | (std::uint64_t(r.d) << 16) | r.b);
  }
  stats->entries = engine.entries().size();
  stats->regions = regions.size();
  stats->join_checks = engine.counters().join_checks;
  stats->close_checks = engine.counters().close_checks;
  stats->seconds = engine.counters().seconds;
}

// Materialises an accepted tree and re-checks it before it leaves the module.
template <class Engine>
std::vector<ChordId> chords_of(const CircleRepresentation& repr, const Engine& engine, int entry) {
  std::vector<ChordId> out;
  engine.for_each_chord(entry, [&](ChordId c) { out.push_back(c); });
  std::sort(out.begin(), out.end());
  auto variant = DominationVariant::fixed_size_tree(engine.entries()[entry].size);
  if (!verify_variant(build_intersection_graph(repr), out, variant))
    throw std::logic_error("dominating tree witness fails verification");
  return out;
}

// First tree entry of layer j whose region closes the circle.
template <class Engine, class IsTree>
int closing_tree(const Engine& engine, int j, IsTree&& is_tree) {
  for (int e = engine.layer_begin(j); e < engine.layer_end(j); ++e) {
    const auto& entry = engine.entries()[e];
    if (is_tree(entry.key) && engine.closes_circle(entry.region)) return e;
  }
  return -1;
}

}  // namespace

std::optional<DominatingTree> min_dominating_tree(const CircleRepresentation& repr, DpStats* stats) {
  MinPolicy policy;
  detail::RegionEngine<MinPolicy> engine(repr, policy);
  int found = -1;
  auto is_tree = [](std::uint32_t key) { return key == 1; };
  engine.run(repr.chord_count(), [&](int j) {
    found = closing_tree(engine, j, is_tree);
    return found >= 0;
  });
  fill_stats(engine, stats);
  if (found < 0) return std::nullopt;
  const auto& entry = engine.entries()[found];
  return DominatingTree{entry.size, chords_of(repr, engine, found), entry.region};
}

std::optional<std::vector<ChordId>> dominating_tree_of_size(const CircleRepresentation& repr, int k,
                                                            DpStats* stats) {
  if (k < 1 || k > repr.chord_count()) return std::nullopt;
  SizesPolicy policy;
  detail::RegionEngine<SizesPolicy> engine(repr, policy);
  engine.run(k, [](int) { return false; });
  fill_stats(engine, stats);
  int found = closing_tree(engine, k, [](std::uint32_t key) { return (key & 1) == 1; });
  if (found < 0) return std::nullopt;
  return chords_of(repr, engine, found);
}

std::vector<int> dominating_tree_sizes(const CircleRepresentation& repr, DpStats* stats) {
  SizesPolicy policy;
  detail::RegionEngine<SizesPolicy> engine(repr, policy);
  std::vector<int> sizes;
  auto is_tree = [](std::uint32_t key) { return (key & 1) == 1; };
  engine.run(repr.chord_count(), [&](int j) {
    if (closing_tree(engine, j, is_tree) >= 0) sizes.push_back(j);
    return false;
  });
  fill_stats(engine, stats);
  return sizes;
}

RegionTable build_region_table(const CircleRepresentation& repr) {
  MinPolicy policy;
  detail::RegionEngine<MinPolicy> engine(repr, policy);
  engine.run(repr.chord_count(), [](int) { return false; });
  RegionTable table;
  const auto& entries = engine.entries();
  for (const auto& e : entries) {
    RegionDerivation how;
    how.chord = e.how.chord;
    if (e.how.left >= 0) how.first = entries[e.how.left].region;
    if (e.how.right >= 0) how.second = entries[e.how.right].region;
    switch (e.how.kind) {
      case detail::Derivation::Kind::Init: how.kind = RegionDerivation::Kind::Init; break;
      case detail::Derivation::Kind::Join: how.kind = RegionDerivation::Kind::T1; break;
      case detail::Derivation::Kind::Close: how.kind = RegionDerivation::Kind::T2; break;
    }
    if (e.key == 0) table.improve_forest(e.region, e.size, how);
    else table.improve_tree(e.region, e.size, how);
  }
  return table;
}

}  // namespace circledom
