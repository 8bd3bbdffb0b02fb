#include "circledom/reductions.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace circledom {

ChordId ReductionInstance::chord(std::string_view label) const {
  auto id = repr.find(label);
  if (!id) throw std::invalid_argument("instance has no chord '" + std::string(label) + "'");
  return *id;
}

namespace {

std::string join_label(std::string_view role, std::initializer_list<int> parts) {
  std::string out(role);
  for (int p : parts) out += "." + std::to_string(p);
  return out;
}

// Collects slot labels left to right and the role of each label.
class SlotWriter {
 public:
  Slot put(const std::string& label, std::string_view role) {
    roles_.try_emplace(label, role);
    labels_.push_back(label);
    return static_cast<Slot>(labels_.size()) - 1;
  }
  Slot next() const { return static_cast<Slot>(labels_.size()); }

  void finish(ReductionInstance& inst) const {
    inst.repr = CircleRepresentation::from_slot_labels(labels_);
    inst.roles.clear();
    for (ChordId c = 0; c < inst.repr.chord_count(); ++c) inst.roles.push_back(roles_.at(inst.repr.label(c)));
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::string> roles_;
};

void check_kcc(const ColoredGraph& cg) {
  if (cg.k < 2) throw std::invalid_argument("k-colored clique reductions need k >= 2");
  if (static_cast<int>(cg.color.size()) != cg.graph.size())
    throw std::invalid_argument("every vertex needs a color");
  for (int c : cg.color)
    if (c < 1 || c > cg.k) throw std::invalid_argument("color out of range");
  if (cg.has_monochromatic_edge()) throw std::invalid_argument("monochromatic edge");
  if (!cg.balanced()) throw std::invalid_argument("color classes have different sizes");
}

// (color, 1-based index within the class) of every vertex.
std::vector<std::pair<int, int>> class_positions(const ColoredGraph& cg) {
  std::vector<std::pair<int, int>> out(cg.graph.size());
  auto classes = cg.classes();
  for (int i = 0; i < cg.k; ++i)
    for (std::size_t h = 0; h < classes[i].size(); ++h) out[classes[i][h]] = {i + 1, static_cast<int>(h) + 1};
  return out;
}

// Index within its class of the clique vertex of each color, after validating.
std::vector<int> clique_indices(const ReductionInstance& inst, const std::vector<int>& clique) {
  const auto* cg = std::get_if<ColoredGraph>(&inst.source);
  if (!cg) throw std::invalid_argument("instance was not built from a colored graph");
  if (static_cast<int>(clique.size()) != cg->k) throw std::invalid_argument("clique must have one vertex per color");
  auto where = class_positions(*cg);
  std::vector<int> index(cg->k + 1, 0);
  for (int v : clique) {
    if (v < 0 || v >= cg->graph.size()) throw std::invalid_argument("clique vertex out of range");
    auto [color, h] = where[v];
    if (index[color] != 0) throw std::invalid_argument("two clique vertices share a color");
    index[color] = h;
  }
  for (int u : clique)
    for (int v : clique)
      if (u != v && !cg->graph.adjacent(u, v)) throw std::invalid_argument("vertices are not pairwise adjacent");
  return index;
}

}  // namespace

ColoredGraph normalize_kcc(const ColoredGraph& cg) {
  if (cg.has_monochromatic_edge()) throw std::invalid_argument("monochromatic edge");
  auto classes = cg.classes();
  std::size_t target = 0;
  for (const auto& c : classes) target = std::max(target, c.size());
  std::vector<int> color = cg.color;
  for (int i = 0; i < cg.k; ++i)
    for (std::size_t pad = classes[i].size(); pad < target; ++pad) color.push_back(i + 1);
  ColoredGraph out{Graph(static_cast<int>(color.size())), color, cg.k};
  for (int u = 0; u < cg.graph.size(); ++u)
    for (int v : cg.graph.neighbors(u))
      if (u < v) out.graph.add_edge(u, v);
  return out;
}

ReductionInstance gen_domset_from_kcc(const ColoredGraph& cg) {
  check_kcc(cg);
  const int k = cg.k;
  const auto classes = cg.classes();
  const int n = static_cast<int>(classes.front().size());
  auto x = [&](int color, int h) { return classes[color - 1][h - 1]; };

  // Middle cluster c of section a holds the outer chords towards this section.
  auto section_of_cluster = [&](int a, int c) { return c > a ? c : c - 1; };

  ReductionInstance inst;
  inst.kind = "domset";
  inst.target_size = k * (k + 1) / 2;
  inst.source = cg;
  SlotWriter w;
  for (int i = 1; i <= k; ++i) {
    const Slot section_start = w.next();
    for (int j = 1; j <= k + 1; ++j) {
      const Slot open = w.put(join_label("ext", {i, j}), "extremal");
      for (int l = 0; l <= n; ++l) {
        if (l > 0) {
          std::vector<Slot> at_point;
          if (j == 1 || j == k + 1) {
            at_point.push_back(w.put(join_label("mem", {i, l}), "memory"));
          } else {
            const int other = section_of_cluster(i, j);
            for (int q = 1; q <= n; ++q) {
              if (!cg.graph.adjacent(x(i, l), x(other, q))) continue;
              auto label = i < other ? join_label("out", {i, l, other, q}) : join_label("out", {other, q, i, l});
              at_point.push_back(w.put(label, "outer"));
            }
          }
          inst.layout[join_label("point", {i, j, l})] = at_point;
        }
        // Twins from the previous cluster end here, inner one first; twins to
        // the next cluster start here, outer one first.
        if (j > 1) {
          w.put(join_label("in", {i, j - 1, l, 2}), "inner");
          w.put(join_label("in", {i, j - 1, l, 1}), "inner");
        }
        if (j <= k) {
          w.put(join_label("in", {i, j, l, 1}), "inner");
          w.put(join_label("in", {i, j, l, 2}), "inner");
        }
      }
      const Slot close = w.put(join_label("ext", {i, j}), "extremal");
      inst.layout[join_label("cluster", {i, j})] = {open, close};
    }
    inst.layout[join_label("section", {i})] = {section_start, w.next() - 1};
  }
  w.finish(inst);
  return inst;
}

std::vector<ChordId> witness_domset_from_clique(const ReductionInstance& inst, const std::vector<int>& clique) {
  auto index = clique_indices(inst, clique);
  const int k = static_cast<int>(index.size()) - 1;
  std::vector<ChordId> out;
  for (int i = 1; i <= k; ++i) out.push_back(inst.chord(join_label("mem", {i, index[i]})));
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) out.push_back(inst.chord(join_label("out", {i, index[i], j, index[j]})));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

ReductionInstance gen_lr(const ColoredGraph& cg, bool acyclic) {
  check_kcc(cg);
  const int k = cg.k;
  const auto classes = cg.classes();
  const int n = static_cast<int>(classes.front().size());
  const int twins = 2 * k + 1;
  auto x = [&](int color, int h) { return classes[color - 1][h - 1]; };

  ReductionInstance inst;
  inst.kind = acyclic ? "acyclic" : "independent";
  inst.target_size = 2 * k;
  inst.source = cg;
  SlotWriter w;
  auto parallel_open = [&](int i, int set) {
    for (int p = 1; p <= twins; ++p) w.put(join_label("par", {i, set, p}), "parallel");
  };
  auto parallel_close = [&](int i, int set) {
    for (int p = twins; p >= 1; --p) w.put(join_label("par", {i, set, p}), "parallel");
  };

  for (int i = 1; i <= k; ++i) {
    const Slot start = w.next();
    parallel_open(i, 1);
    for (int j = 1; j <= n; ++j) {
      w.put(join_label("l", {i, j}), "L");
      if (acyclic) {
        w.put(join_label("d", {i, j}), "distance");
        w.put(join_label("dbar", {i, j}), "distance");
      }
    }
    parallel_close(i, 1);
    if (acyclic) parallel_open(i, 3);
    for (int j = 1; j <= n; ++j) {
      const Slot left = w.put(join_label("l", {i, j}), "L");
      // Outer chords for non-edges, ordered by the other end.
      for (int other = 1; other <= k; ++other) {
        if (other == i) continue;
        for (int q = 1; q <= n; ++q) {
          if (cg.graph.adjacent(x(i, j), x(other, q))) continue;
          w.put(i < other ? join_label("out", {i, j, other, q}) : join_label("out", {other, q, i, j}), "outer");
        }
      }
      const Slot right = w.put(join_label("r", {i, j}), "R");
      inst.layout[join_label("v", {i, j})] = {left, right};
    }
    if (acyclic) parallel_close(i, 3);
    parallel_open(i, 2);
    for (int j = 1; j <= n; ++j) {
      w.put(join_label("r", {i, j}), "R");
      if (acyclic) {
        w.put(join_label("dbar", {i, j}), "distance");
        w.put(join_label("d", {i, j}), "distance");
      }
    }
    parallel_close(i, 2);
    inst.layout[join_label("H", {i})] = {start, w.next() - 1};
  }
  w.finish(inst);
  return inst;
}

}  // namespace

ReductionInstance gen_independent_from_kcc(const ColoredGraph& cg) { return gen_lr(cg, false); }
ReductionInstance gen_acyclic_from_kcc(const ColoredGraph& cg) { return gen_lr(cg, true); }

std::vector<ChordId> witness_from_clique_LR(const ReductionInstance& inst, const std::vector<int>& clique) {
  auto index = clique_indices(inst, clique);
  std::vector<ChordId> out;
  for (int i = 1; i < static_cast<int>(index.size()); ++i) {
    out.push_back(inst.chord(join_label("l", {i, index[i]})));
    out.push_back(inst.chord(join_label("r", {i, index[i]})));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ReductionInstance gen_tree_from_3partition(const ThreePartitionInstance& inst) {
  const int m = inst.m, B = inst.B;
  if (m <= 0 || static_cast<int>(inst.values.size()) != 3 * m)
    throw std::invalid_argument("3-partition needs exactly 3m values");
  long sum = 0;
  for (int a : inst.values) sum += a;
  if (sum != static_cast<long>(m) * B) throw std::invalid_argument("values do not sum to mB");
  auto violations = inst.bound_violations();
  if (!violations.empty()) throw std::invalid_argument(violations.front());
  const int total = m * B;
  if (total <= 6) throw std::invalid_argument("mB must exceed 6 so the root is the only vertex of degree above 6");

  ReductionInstance out;
  out.kind = "3part";
  out.target_size = total + 1;
  out.source = inst;

  // Root with one hanging path of a_i vertices per value.
  std::vector<int> parents{-1};
  for (int a : inst.values) {
    int previous = 0;
    for (int step = 0; step < a; ++step) {
      parents.push_back(previous);
      previous = static_cast<int>(parents.size()) - 1;
    }
  }
  out.tree = RootedTree::from_parents(std::move(parents));

  auto has_chain = [&](int i) { return i >= 1 && i < total && i % B != 0; };
  SlotWriter w;
  const Slot root_open = w.put("root", "root");
  std::vector<Slot> pendant_open(total + 1), pendant_close(total + 1);
  for (int i = 1; i <= total; ++i) {
    pendant_open[i] = w.put(join_label("pendant", {i}), "pendant");
    if (has_chain(i)) w.put(join_label("chain", {i}), "chain");
    const Slot g = w.put(join_label("branch", {i}), "branch");
    if (has_chain(i - 1)) w.put(join_label("chain", {i - 1}), "chain");
    pendant_close[i] = w.put(join_label("pendant", {i}), "pendant");
    out.layout[join_label("branch", {i})] = {g};
  }
  const Slot root_close = w.put("root", "root");
  for (int i = total; i >= 1; --i) out.layout[join_label("branch", {i})].push_back(w.put(join_label("branch", {i}), "branch"));
  out.layout["root"] = {root_open, root_close};
  for (int j = 1; j <= m; ++j) out.layout[join_label("block", {j})] = {pendant_open[(j - 1) * B + 1], pendant_close[j * B]};
  w.finish(out);
  return out;
}

std::vector<ChordId> witness_tree_from_partition(const ReductionInstance& inst, const std::vector<Triple>& triples) {
  const auto* source = std::get_if<ThreePartitionInstance>(&inst.source);
  if (!source) throw std::invalid_argument("instance was not built from a 3-partition instance");
  if (static_cast<int>(triples.size()) != source->m) throw std::invalid_argument("need exactly m triples");
  std::vector<int> used;
  for (const auto& t : triples) {
    if (t[0] + t[1] + t[2] != source->B) throw std::invalid_argument("triple does not sum to B");
    used.insert(used.end(), t.begin(), t.end());
  }
  std::vector<int> expected = source->values;
  std::sort(used.begin(), used.end());
  std::sort(expected.begin(), expected.end());
  if (used != expected) throw std::invalid_argument("triples are not a partition of the values");

  std::vector<ChordId> out{inst.chord("root")};
  for (int j = 1; j <= source->m; ++j) {
    int offset = (j - 1) * source->B;
    for (int a : triples[j - 1]) {
      out.push_back(inst.chord(join_label("branch", {offset + 1})));
      for (int step = 1; step < a; ++step) out.push_back(inst.chord(join_label("chain", {offset + step})));
      offset += a;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

StarInstance gen_star_from_setcover(const std::vector<int>& universe, const std::vector<std::vector<int>>& collection,
                                    int k) {
  if (collection.empty()) throw std::invalid_argument("empty collection");
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  const int sets = static_cast<int>(collection.size());
  const int elements = static_cast<int>(universe.size());
  const int hub = sets + elements;
  Graph g(hub + 1 + k + 1);
  for (int s = 0; s < sets; ++s) {
    g.add_edge(s, hub);
    for (int element : collection[s]) {
      auto it = std::find(universe.begin(), universe.end(), element);
      if (it == universe.end()) throw std::invalid_argument("set contains an element outside the universe");
      g.add_edge(s, sets + static_cast<int>(it - universe.begin()));
    }
  }
  for (int p = 0; p <= k; ++p) g.add_edge(hub, hub + 1 + p);
  std::vector<int> parents(k + 1, 0);
  parents[0] = -1;
  return StarInstance{std::move(g), RootedTree::from_parents(std::move(parents))};
}

}  // namespace circledom
