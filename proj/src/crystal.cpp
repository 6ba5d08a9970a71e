#include "wallcrys/crystal.hpp"

#include <algorithm>
#include <deque>
#include <json.hpp>
#include <sstream>

namespace wallcrys {

ReducedSignature reduce_signature(const std::vector<SignatureRun>& runs) {
  // Stack of surviving pluses; a minus cancels the most recent open plus.
  struct Open {
    int factor;
    int count;
  };
  std::vector<Open> pluses;
  ReducedSignature out;
  for (int idx = 0; idx < int(runs.size()); ++idx) {
    int minus = runs[idx].minus;
    while (minus > 0 && !pluses.empty()) {
      int take = std::min(minus, pluses.back().count);
      pluses.back().count -= take;
      minus -= take;
      if (pluses.back().count == 0) pluses.pop_back();
    }
    if (minus > 0) {
      out.eps += minus;
      out.e_factor = idx;  // right-most surviving minus so far
    }
    if (runs[idx].plus > 0) pluses.push_back({idx, runs[idx].plus});
  }
  for (const auto& p : pluses) out.phi += p.count;
  if (!pluses.empty()) out.f_factor = pluses.front().factor;
  return out;
}

std::vector<int> CrystalGraph::nodes_per_depth() const {
  std::vector<int> counts;
  for (const auto& n : nodes) {
    if (int(counts.size()) <= n.depth) counts.resize(n.depth + 1, 0);
    ++counts[n.depth];
  }
  return counts;
}

BisimResult graphs_bisimilar(const CrystalGraph& g1, const CrystalGraph& g2) {
  BisimResult res;
  if (g1.max_depth != g2.max_depth || g1.truncated || g2.truncated) {
    res.equal = false;
    res.detail = "graphs not complete to the same depth";
    return res;
  }
  auto out_edges = [](const CrystalGraph& g) {
    std::vector<std::map<int, int>> out(g.nodes.size());
    for (const auto& e : g.edges) out[e.src][e.label] = e.dst;
    return out;
  };
  auto o1 = out_edges(g1), o2 = out_edges(g2);

  struct Item {
    int a, b;
    std::vector<int> word;
  };
  std::deque<Item> q;
  std::vector<int> match(g1.nodes.size(), -1);
  q.push_back({0, 0, {}});
  match[0] = 0;
  auto diverge = [&](const Item& it, const std::string& why) {
    res.equal = false;
    res.counterexample = it.word;
    res.detail = why + " at node '" + g1.nodes[it.a].key + "' vs '" + g2.nodes[it.b].key + "'";
    return res;
  };
  while (!q.empty()) {
    Item it = q.front();
    q.pop_front();
    const auto& n1 = g1.nodes[it.a];
    const auto& n2 = g2.nodes[it.b];
    if (n1.wt != n2.wt) return diverge(it, "classical weight mismatch");
    if (n1.eps != n2.eps) return diverge(it, "eps mismatch");
    if (n1.phi != n2.phi) return diverge(it, "phi mismatch");
    if (n1.depth >= g1.max_depth) continue;  // frontier: children not comparable
    for (int i = 0; i < std::max(g1.n_labels, g2.n_labels); ++i) {
      auto e1 = o1[it.a].find(i);
      auto e2 = o2[it.b].find(i);
      bool h1 = e1 != o1[it.a].end();
      bool h2 = e2 != o2[it.b].end();
      if (h1 != h2) {
        Item bad = it;
        bad.word.push_back(i);
        return diverge(bad, h1 ? "edge only in first graph" : "edge only in second graph");
      }
      if (!h1) continue;
      Item next{e1->second, e2->second, it.word};
      next.word.push_back(i);
      if (match[next.a] == -1) {
        match[next.a] = next.b;
        q.push_back(next);
      } else if (match[next.a] != next.b) {
        return diverge(next, "node identification conflict");
      }
    }
  }
  if (g1.nodes.size() != g2.nodes.size()) {
    res.equal = false;
    res.detail = "node counts differ: " + std::to_string(g1.nodes.size()) + " vs " +
                 std::to_string(g2.nodes.size());
  }
  return res;
}

std::string graph_to_json(const CrystalGraph& g) {
  nlohmann::json j;
  j["root"] = g.nodes.empty() ? "" : g.nodes[0].key;
  j["depth"] = g.max_depth;
  j["truncated"] = g.truncated;
  std::vector<int> order(g.nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = int(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return g.nodes[a].key < g.nodes[b].key; });
  nlohmann::json nodes = nlohmann::json::array();
  for (int idx : order) {
    const auto& n = g.nodes[idx];
    nodes.push_back({{"key", n.key}, {"wt", n.wt}, {"eps", n.eps}, {"phi", n.phi}, {"depth", n.depth}});
  }
  j["nodes"] = std::move(nodes);
  std::vector<CrystalGraph::Edge> es = g.edges;
  std::sort(es.begin(), es.end(), [&](const auto& a, const auto& b) {
    auto ka = std::tie(g.nodes[a.src].key, a.label, g.nodes[a.dst].key);
    auto kb = std::tie(g.nodes[b.src].key, b.label, g.nodes[b.dst].key);
    return ka < kb;
  });
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : es)
    edges.push_back({{"src", g.nodes[e.src].key}, {"i", e.label}, {"dst", g.nodes[e.dst].key}});
  j["edges"] = std::move(edges);
  return j.dump(2);
}

std::string graph_to_dot(const CrystalGraph& g) {
  std::ostringstream os;
  os << "digraph crystal {\n  rankdir=TB;\n  node [shape=box];\n";
  std::vector<int> order(g.nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = int(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return g.nodes[a].key < g.nodes[b].key; });
  for (int idx : order) os << "  \"" << g.nodes[idx].key << "\";\n";
  std::vector<CrystalGraph::Edge> es = g.edges;
  std::sort(es.begin(), es.end(), [&](const auto& a, const auto& b) {
    auto ka = std::tie(g.nodes[a.src].key, a.label, g.nodes[a.dst].key);
    auto kb = std::tie(g.nodes[b.src].key, b.label, g.nodes[b.dst].key);
    return ka < kb;
  });
  for (const auto& e : es)
    os << "  \"" << g.nodes[e.src].key << "\" -> \"" << g.nodes[e.dst].key
       << "\" [label=" << e.label << "];\n";
  os << "}\n";
  return os.str();
}

}  // namespace wallcrys
