#include "circledom/chord_diagram.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

namespace circledom {

CircleRepresentation CircleRepresentation::from_slot_labels(
    const std::vector<std::string>& slot_labels) {
  CircleRepresentation repr;
  std::unordered_map<std::string, ChordId> ids;
  std::vector<int> seen;
  repr.slots_.reserve(slot_labels.size());
  for (std::size_t s = 0; s < slot_labels.size(); ++s) {
    const auto& label = slot_labels[s];
    auto [it, inserted] = ids.try_emplace(label, repr.chord_count());
    if (inserted) {
      repr.labels_.push_back(label);
      repr.ends_.emplace_back(static_cast<Slot>(s), -1);
      seen.push_back(1);
    } else {
      ChordId c = it->second;
      if (++seen[c] > 2) throw ParseError("label '" + label + "' appears more than twice");
      repr.ends_[c].second = static_cast<Slot>(s);
    }
    repr.slots_.push_back(it->second);
  }
  for (ChordId c = 0; c < repr.chord_count(); ++c)
    if (seen[c] != 2) throw ParseError("label '" + repr.labels_[c] + "' appears only once");
  return repr;
}

std::optional<ChordId> CircleRepresentation::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<ChordId>(it - labels_.begin());
}

CircleRepresentation parse_representation(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<long> n;
  std::vector<std::string> tokens;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream words(line);
    std::string word;
    if (!n) {
      words >> word;
      long value = 0;
      auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
      if (ec != std::errc() || ptr != word.data() + word.size() || value < 0)
        throw ParseError("line " + std::to_string(line_no) + ": malformed header '" + word + "'");
      std::string extra;
      if (words >> extra)
        throw ParseError("line " + std::to_string(line_no) + ": trailing data after header");
      n = value;
      continue;
    }
    while (words >> word) tokens.push_back(word);
  }
  if (!n) throw ParseError("missing header line");
  if (static_cast<long>(tokens.size()) != 2 * *n)
    throw ParseError("expected " + std::to_string(2 * *n) + " slot labels, found " +
                     std::to_string(tokens.size()));
  return CircleRepresentation::from_slot_labels(tokens);
}

std::string serialize_representation(const CircleRepresentation& repr) {
  std::string out = std::to_string(repr.chord_count()) + "\n";
  for (Slot s = 0; s < repr.slot_count(); ++s) {
    if (s > 0) out += ' ';
    out += repr.label(repr.chord_at(s));
  }
  if (repr.slot_count() > 0) out += '\n';
  return out;
}

bool chords_cross(const CircleRepresentation& repr, ChordId x, ChordId y) {
  if (x < 0 || y < 0 || x >= repr.chord_count() || y >= repr.chord_count())
    throw std::out_of_range("unknown chord id");
  if (x == y) return false;
  auto [xl, xh] = repr.ends(x);
  auto [yl, yh] = repr.ends(y);
  bool first_inside = xl < yl && yl < xh;
  bool second_inside = xl < yh && yh < xh;
  return first_inside != second_inside;
}

Graph build_intersection_graph(const CircleRepresentation& repr) {
  Graph g(repr.chord_count());
  // Sweep: a chord opened earlier and still open when y closes crosses y iff it
  // was opened after y.
  std::vector<ChordId> open;
  for (Slot s = 0; s < repr.slot_count(); ++s) {
    ChordId c = repr.chord_at(s);
    if (repr.ends(c).first == s) {
      open.push_back(c);
      continue;
    }
    auto it = std::find(open.begin(), open.end(), c);
    for (auto later = it + 1; later != open.end(); ++later) g.add_edge(c, *later);
    open.erase(it);
  }
  return g;
}

bool open_interval_chord_free(const CircleRepresentation& repr, Slot p, Slot q) {
  const int n = repr.slot_count();
  if (p < 0 || q < 0 || p >= n || q >= n) throw std::out_of_range("slot out of range");
  int length = (q - p + n) % n;
  if (length == 0) length = n;
  auto inside = [&](Slot s) {
    int d = (s - p + n) % n;
    return d > 0 && d < length;
  };
  for (ChordId c = 0; c < repr.chord_count(); ++c) {
    auto [lo, hi] = repr.ends(c);
    if (inside(lo) && inside(hi)) return false;
  }
  return true;
}

std::string default_label(int index) {
  std::string label;
  ++index;
  while (index > 0) {
    --index;
    label.insert(label.begin(), static_cast<char>('a' + index % 26));
    index /= 26;
  }
  return label;
}

namespace {

CircleRepresentation from_matching(const std::vector<Slot>& partner) {
  const int slots = static_cast<int>(partner.size());
  std::vector<std::string> labels(slots);
  int next = 0;
  for (Slot s = 0; s < slots; ++s) {
    if (partner[s] > s) {
      labels[s] = default_label(next++);
      labels[partner[s]] = labels[s];
    }
  }
  return CircleRepresentation::from_slot_labels(labels);
}

void enumerate_matchings(std::vector<Slot>& partner, const std::function<void(const CircleRepresentation&)>& visit) {
  auto first = std::find(partner.begin(), partner.end(), -1);
  if (first == partner.end()) {
    visit(from_matching(partner));
    return;
  }
  Slot s = static_cast<Slot>(first - partner.begin());
  for (Slot t = s + 1; t < static_cast<Slot>(partner.size()); ++t) {
    if (partner[t] != -1) continue;
    partner[s] = t;
    partner[t] = s;
    enumerate_matchings(partner, visit);
    partner[s] = -1;
    partner[t] = -1;
  }
}

}  // namespace

CircleRepresentation random_representation(int n, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("negative chord count");
  std::mt19937_64 rng(seed);
  std::vector<Slot> order(2 * n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Slot> partner(2 * n);
  for (int i = 0; i < n; ++i) {
    partner[order[2 * i]] = order[2 * i + 1];
    partner[order[2 * i + 1]] = order[2 * i];
  }
  return from_matching(partner);
}

void for_each_representation(int n, const std::function<void(const CircleRepresentation&)>& visit) {
  std::vector<Slot> partner(2 * n, -1);
  enumerate_matchings(partner, visit);
}

ArcIndex::ArcIndex(const CircleRepresentation& repr)
    : n_(repr.slot_count()), partner_(n_), reach_(n_, n_) {
  for (Slot s = 0; s < n_; ++s) partner_[s] = repr.partner(s);
  for (Slot p = 0; p < n_; ++p) {
    for (int d = 1; d < n_; ++d) {
      Slot x = (p + d) % n_;
      int back = pos(p, partner_[x]);
      if (back > 0 && back < d) {
        reach_[p] = d;
        break;
      }
    }
  }
}

}  // namespace circledom
