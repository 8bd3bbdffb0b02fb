#include "circledom/fpt_tree.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "circledom/domination.hpp"
#include "region_engine.hpp"

namespace circledom {

namespace {

using Multiset = std::vector<int>;  // sorted class ids

Multiset merged(const Multiset& x, const Multiset& y) {
  Multiset out;
  out.reserve(x.size() + y.size());
  std::merge(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

// Forest keys are non-empty sub-multisets of some vertex's children, named by
// isomorphism class; 2m for multiset m. The only tree key is the root's, 2c+1.
class TreePolicy {
 public:
  explicit TreePolicy(const RootedTree& rooted) {
    auto codes = canonical_codes(rooted);
    std::map<std::string, int> class_of_code;
    // Children before parents, so child classes exist when a parent is named.
    const auto& order = rooted.preorder();
    vertex_class_.assign(rooted.size(), -1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      auto [pos, fresh] = class_of_code.try_emplace(codes[*it], static_cast<int>(children_.size()));
      vertex_class_[*it] = pos->second;
      if (!fresh) continue;
      Multiset kids;
      for (int c : rooted.children(*it)) kids.push_back(vertex_class_[c]);
      std::sort(kids.begin(), kids.end());
      class_with_children_.emplace(kids, static_cast<int>(children_.size()));
      children_.push_back(std::move(kids));
    }
    root_class_ = vertex_class_[rooted.root()];
    for (const auto& kids : children_) intern_submultisets(kids);
    single_.assign(children_.size(), -1);
    for (int c = 0; c < static_cast<int>(children_.size()); ++c) {
      auto it = multiset_id_.find(Multiset{c});
      if (it != multiset_id_.end()) single_[c] = it->second;
    }
  }

  template <class Emit>
  void init(ChordId, Emit&& emit) {
    emit_class(class_with_children_.at(Multiset{}), emit);
  }
  bool is_operand(std::uint32_t key) const { return (key & 1) == 0; }
  std::optional<std::uint32_t> join(std::uint32_t k1, std::uint32_t k2) {
    auto id = combine(k1 >> 1, k2 >> 1);
    if (id < 0) return std::nullopt;
    return static_cast<std::uint32_t>(id) << 1;
  }
  template <class Emit>
  void close(ChordId, std::optional<std::uint32_t> k1, std::optional<std::uint32_t> k2, Emit&& emit) {
    int cls;
    if (k1 && k2) {
      cls = close_class(merged(multisets_[*k1 >> 1], multisets_[*k2 >> 1]));
    } else {
      cls = close_class(multisets_[(k1 ? *k1 : *k2) >> 1]);
    }
    if (cls >= 0) emit_class(cls, emit);
  }

  int root_class() const { return root_class_; }
  std::uint32_t root_key() const { return (static_cast<std::uint32_t>(root_class_) << 1) | 1; }
  int vertex_class(int v) const { return vertex_class_[v]; }
  std::size_t forest_key_count() const { return multisets_.size(); }
  // Class of the splitting chord for an entry produced by a closing step.
  int closed_class(std::uint32_t key) const {
    return (key & 1) ? static_cast<int>(key >> 1) : multisets_[key >> 1].front();
  }

 private:
  template <class Emit>
  void emit_class(int cls, Emit& emit) {
    if (cls == root_class_) emit((static_cast<std::uint32_t>(cls) << 1) | 1);
    if (single_[cls] >= 0) emit(static_cast<std::uint32_t>(single_[cls]) << 1);
  }

  int close_class(const Multiset& kids) const {
    auto it = class_with_children_.find(kids);
    return it == class_with_children_.end() ? -1 : it->second;
  }

  int combine(int m1, int m2) {
    std::uint64_t key = (static_cast<std::uint64_t>(std::min(m1, m2)) << 32) | static_cast<std::uint32_t>(std::max(m1, m2));
    auto [it, fresh] = join_cache_.try_emplace(key, -1);
    if (fresh) {
      auto found = multiset_id_.find(merged(multisets_[m1], multisets_[m2]));
      if (found != multiset_id_.end()) it->second = found->second;
    }
    return it->second;
  }

  void intern_submultisets(const Multiset& kids) {
    // Distinct classes with multiplicities, then a mixed-radix counter.
    std::vector<std::pair<int, int>> groups;
    for (int c : kids) {
      if (!groups.empty() && groups.back().first == c) ++groups.back().second;
      else groups.emplace_back(c, 1);
    }
    std::vector<int> count(groups.size(), 0);
    while (true) {
      std::size_t i = 0;
      while (i < count.size() && count[i] == groups[i].second) count[i++] = 0;
      if (i == count.size()) break;
      ++count[i];
      Multiset sub;
      for (std::size_t g = 0; g < groups.size(); ++g) sub.insert(sub.end(), count[g], groups[g].first);
      if (multiset_id_.try_emplace(sub, static_cast<int>(multisets_.size())).second) multisets_.push_back(sub);
    }
  }

  std::vector<Multiset> children_;
  std::map<Multiset, int> class_with_children_;
  std::vector<int> vertex_class_;
  int root_class_ = 0;
  std::vector<Multiset> multisets_;
  std::map<Multiset, int> multiset_id_;
  std::vector<int> single_;
  std::unordered_map<std::uint64_t, int> join_cache_;
};

struct Node {
  ChordId chord;
  int cls;
  std::vector<int> kids;
};

template <class Engine>
void gather(const Engine& engine, const TreePolicy& policy, int entry, std::vector<Node>& nodes,
            std::vector<int>& out) {
  const auto& e = engine.entries()[entry];
  using Kind = detail::Derivation::Kind;
  if (e.how.kind == Kind::Join) {
    gather(engine, policy, e.how.left, nodes, out);
    gather(engine, policy, e.how.right, nodes, out);
    return;
  }
  std::vector<int> kids;
  if (e.how.left >= 0) gather(engine, policy, e.how.left, nodes, kids);
  if (e.how.right >= 0) gather(engine, policy, e.how.right, nodes, kids);
  nodes.push_back(Node{e.how.chord, policy.closed_class(e.key), std::move(kids)});
  out.push_back(static_cast<int>(nodes.size()) - 1);
}

}  // namespace

std::optional<TreeEmbedding> fpt_tree_dominating(const CircleRepresentation& repr, const RootedTree& tree,
                                                 std::optional<int> root, FptStats* stats) {
  const int chosen_root = root ? *root : centroid(tree);
  if (chosen_root < 0 || chosen_root >= tree.size()) throw std::invalid_argument("root out of range");
  RootedTree rooted = chosen_root == tree.root() ? tree : tree.rerooted(chosen_root);
  TreePolicy policy(rooted);
  detail::RegionEngine<TreePolicy> engine(repr, policy);
  const int t = rooted.size();

  int found = -1;
  if (t <= repr.chord_count()) {
    engine.run(t, [&](int j) {
      if (j < t) return false;
      for (int e = engine.layer_begin(j); e < engine.layer_end(j); ++e) {
        const auto& entry = engine.entries()[e];
        if (entry.key == policy.root_key() && engine.closes_circle(entry.region)) {
          found = e;
          break;
        }
      }
      return true;
    });
  }
  if (stats) {
    stats->entries = engine.entries().size();
    stats->forest_keys = policy.forest_key_count();
    stats->alpha = alpha_for_root(rooted).value;
    stats->root = chosen_root;
    stats->seconds = engine.counters().seconds;
  }
  if (found < 0) return std::nullopt;

  std::vector<Node> nodes;
  std::vector<int> top;
  gather(engine, policy, found, nodes, top);
  if (top.size() != 1 || nodes[top[0]].cls != policy.root_class())
    throw std::logic_error("tree derivation does not end at the root");

  // Concrete vertices: any child of the right class will do, as members of a
  // class are isomorphic.
  std::map<ChordId, int> vertex_of;
  std::vector<std::pair<int, int>> stack{{top[0], rooted.root()}};
  while (!stack.empty()) {
    auto [node, vertex] = stack.back();
    stack.pop_back();
    vertex_of[nodes[node].chord] = vertex;
    std::map<int, std::vector<int>> pool;
    for (int c : rooted.children(vertex)) pool[policy.vertex_class(c)].push_back(c);
    for (int kid : nodes[node].kids) {
      auto& free_children = pool[nodes[kid].cls];
      if (free_children.empty()) throw std::logic_error("tree derivation does not match the children");
      stack.emplace_back(kid, free_children.back());
      free_children.pop_back();
    }
  }

  TreeEmbedding out;
  for (auto [chord, vertex] : vertex_of) {
    out.chords.push_back(chord);
    out.vertex_of.push_back(vertex);
  }
  Graph g = build_intersection_graph(repr);
  if (!verify_variant(g, out.chords, DominationVariant::given_tree(tree)))
    throw std::logic_error("tree witness fails verification");
  for (std::size_t i = 0; i < out.chords.size(); ++i)
    for (std::size_t k = 0; k < out.chords.size(); ++k)
      if (g.adjacent(out.chords[i], out.chords[k]) != (rooted.parent(out.vertex_of[i]) == out.vertex_of[k] ||
                                                        rooted.parent(out.vertex_of[k]) == out.vertex_of[i]))
        throw std::logic_error("tree witness mapping is not an isomorphism");
  return out;
}

}  // namespace circledom
