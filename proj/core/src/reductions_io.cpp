#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "circledom/reductions.hpp"

namespace circledom {

namespace {

// Non-comment lines split into tokens.
std::vector<std::vector<std::string>> token_lines(std::string_view text) {
  std::vector<std::vector<std::string>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream words(line);
    std::vector<std::string> tokens;
    std::string word;
    while (words >> word) tokens.push_back(word);
    out.push_back(std::move(tokens));
  }
  return out;
}

int to_int(const std::string& word) {
  try {
    std::size_t used = 0;
    int value = std::stoi(word, &used);
    if (used != word.size()) throw ParseError("not an integer: '" + word + "'");
    return value;
  } catch (const std::logic_error&) {
    throw ParseError("not an integer: '" + word + "'");
  }
}

}  // namespace

ColoredGraph parse_colored_graph(std::string_view text) {
  auto lines = token_lines(text);
  if (lines.empty() || lines[0].size() != 4 || lines[0][0] != "p") throw ParseError("expected 'p <n> <m> <k>' header");
  const int n = to_int(lines[0][1]);
  const int m = to_int(lines[0][2]);
  const int k = to_int(lines[0][3]);
  if (n < 0 || m < 0 || k < 1) throw ParseError("bad header values");
  ColoredGraph cg{Graph(n), std::vector<int>(n, 0), k};
  int edges = 0;
  auto vertex = [&](const std::string& word) {
    int v = to_int(word);
    if (v < 1 || v > n) throw ParseError("vertex out of range: " + word);
    return v - 1;
  };
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& t = lines[i];
    if (t.size() != 3) throw ParseError("expected three fields per line");
    if (t[0] == "c") {
      int color = to_int(t[2]);
      if (color < 1 || color > k) throw ParseError("color out of range: " + t[2]);
      cg.color[vertex(t[1])] = color;
    } else if (t[0] == "e") {
      int u = vertex(t[1]), v = vertex(t[2]);
      if (u == v) throw ParseError("self-loop");
      cg.graph.add_edge(u, v);
      ++edges;
    } else {
      throw ParseError("unknown line tag '" + t[0] + "'");
    }
  }
  if (edges != m) throw ParseError("header announces " + std::to_string(m) + " edges, found " + std::to_string(edges));
  if (std::count(cg.color.begin(), cg.color.end(), 0) > 0) throw ParseError("vertex without a color");
  return cg;
}

std::string serialize_colored_graph(const ColoredGraph& cg) {
  std::ostringstream out;
  out << "p " << cg.graph.size() << ' ' << cg.graph.edge_count() << ' ' << cg.k << '\n';
  for (int v = 0; v < cg.graph.size(); ++v) out << "c " << v + 1 << ' ' << cg.color[v] << '\n';
  for (int u = 0; u < cg.graph.size(); ++u)
    for (int v : cg.graph.neighbors(u))
      if (u < v) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

ThreePartitionInstance parse_three_partition(std::string_view text) {
  auto lines = token_lines(text);
  if (lines.empty() || lines[0].size() != 3 || lines[0][0] != "tp") throw ParseError("expected 'tp <m> <B>' header");
  ThreePartitionInstance inst;
  inst.m = to_int(lines[0][1]);
  inst.B = to_int(lines[0][2]);
  if (inst.m < 1 || inst.B < 1) throw ParseError("bad header values");
  for (std::size_t i = 1; i < lines.size(); ++i)
    for (const auto& word : lines[i]) {
      int a = to_int(word);
      if (a < 1) throw ParseError("values must be positive");
      inst.values.push_back(a);
    }
  if (static_cast<int>(inst.values.size()) != 3 * inst.m)
    throw ParseError("expected " + std::to_string(3 * inst.m) + " values");
  return inst;
}

std::string serialize_three_partition(const ThreePartitionInstance& inst) {
  std::ostringstream out;
  out << "tp " << inst.m << ' ' << inst.B << '\n';
  for (std::size_t i = 0; i < inst.values.size(); ++i) out << (i ? " " : "") << inst.values[i];
  out << '\n';
  return out.str();
}

std::string instance_metadata_json(const ReductionInstance& inst) {
  nlohmann::json doc;
  doc["schema"] = 1;
  doc["kind"] = inst.kind;
  doc["target_size"] = inst.target_size;
  doc["chords"] = inst.repr.chord_count();
  nlohmann::json roles = nlohmann::json::object();
  for (ChordId c = 0; c < inst.repr.chord_count(); ++c) roles[inst.repr.label(c)] = inst.roles[c];
  doc["roles"] = roles;
  nlohmann::json layout = nlohmann::json::object();
  for (const auto& [name, slots] : inst.layout) layout[name] = slots;
  doc["layout"] = layout;
  if (const auto* cg = std::get_if<ColoredGraph>(&inst.source)) {
    doc["source"] = {{"type", "colored-graph"}, {"text", serialize_colored_graph(*cg)}};
  } else if (const auto* tp = std::get_if<ThreePartitionInstance>(&inst.source)) {
    doc["source"] = {{"type", "3-partition"}, {"m", tp->m}, {"B", tp->B}, {"values", tp->values}};
  }
  if (inst.tree) doc["tree"] = serialize_tree(*inst.tree);
  return doc.dump(2) + "\n";
}

}  // namespace circledom
