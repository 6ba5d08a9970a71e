#ifndef WALLCRYS_CRYSTAL_HPP
#define WALLCRYS_CRYSTAL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wallcrys {

/// Per-factor contribution to an i-signature: eps many minuses followed by
/// phi many pluses.
struct SignatureRun {
  int minus = 0;
  int plus = 0;
};

/// Result of cancelling (+,-) pairs left to right.
struct ReducedSignature {
  int eps = 0;                // surviving minuses = eps_i of the word
  int phi = 0;                // surviving pluses  = phi_i of the word
  int e_factor = -1;          // factor index holding the right-most surviving minus
  int f_factor = -1;          // factor index holding the left-most surviving plus
};

/// Stack cancellation of the concatenated runs; O(total factors).
ReducedSignature reduce_signature(const std::vector<SignatureRun>& runs);

/// Deterministic edge-labeled rooted graph produced by closing a highest
/// weight element under all f_i.
struct CrystalGraph {
  struct Node {
    std::string key;
    std::vector<std::int64_t> wt;  // classical weight coordinates <h_i, wt>
    std::vector<int> eps;
    std::vector<int> phi;
    int depth = 0;
  };
  struct Edge {
    int src = 0;
    int label = 0;
    int dst = 0;
  };

  int n_labels = 0;
  int max_depth = 0;      // generation horizon
  bool truncated = false; // node budget hit before closing max_depth
  std::vector<Node> nodes;  // BFS order, root first
  std::vector<Edge> edges;  // discovery order (src asc, label asc)
  std::map<std::string, int> index_of;

  std::vector<int> nodes_per_depth() const;
};

/// Breadth-first closure under all f_i up to max_depth, deduplicated by
/// canonical key.  Model requirements:
///   Elem root() const; int n_labels() const;
///   std::optional<Elem> f(const Elem&, int) const;
///   std::optional<Elem> e(const Elem&, int) const;
///   int eps(const Elem&, int) const;  int phi(const Elem&, int) const;
///   std::vector<std::int64_t> classical_wt(const Elem&) const;
///   std::string key(const Elem&) const;
template <class Model>
CrystalGraph generate_graph(const Model& model, int max_depth,
                            std::size_t node_budget = 1000000) {
  CrystalGraph g;
  g.n_labels = model.n_labels();
  g.max_depth = max_depth;
  using Elem = decltype(model.root());
  std::vector<Elem> elems;
  auto intern = [&](const Elem& x, int depth) {
    std::string k = model.key(x);
    auto it = g.index_of.find(k);
    if (it != g.index_of.end()) return it->second;
    CrystalGraph::Node node;
    node.key = std::move(k);
    node.wt = model.classical_wt(x);
    node.depth = depth;
    node.eps.resize(g.n_labels);
    node.phi.resize(g.n_labels);
    for (int i = 0; i < g.n_labels; ++i) {
      node.eps[i] = model.eps(x, i);
      node.phi[i] = model.phi(x, i);
    }
    int idx = int(g.nodes.size());
    g.index_of.emplace(node.key, idx);
    g.nodes.push_back(std::move(node));
    elems.push_back(x);
    return idx;
  };
  intern(model.root(), 0);
  for (std::size_t head = 0; head < elems.size(); ++head) {
    if (g.nodes[head].depth >= max_depth) continue;
    Elem cur = elems[head];  // copy: intern() may reallocate elems
    for (int i = 0; i < g.n_labels; ++i) {
      auto next = model.f(cur, i);
      if (!next) continue;
      if (g.nodes.size() >= node_budget && !g.index_of.count(model.key(*next))) {
        g.truncated = true;
        continue;
      }
      int dst = intern(*next, g.nodes[head].depth + 1);
      g.edges.push_back({int(head), i, dst});
    }
  }
  return g;
}

/// Cor 2.5(a): a highest weight element has no raising operator defined.
template <class Model, class Elem>
bool is_maximal(const Model& model, const Elem& b) {
  for (int i = 0; i < model.n_labels(); ++i)
    if (model.e(b, i)) return false;
  return true;
}

/// Simultaneous rooted traversal.  True iff the two deterministic graphs
/// agree on out-label sets, weights and eps/phi everywhere; on divergence,
/// counterexample holds a shortest f-word from the roots.
struct BisimResult {
  bool equal = true;
  std::vector<int> counterexample;
  std::string detail;
};
BisimResult graphs_bisimilar(const CrystalGraph& g1, const CrystalGraph& g2);

std::string graph_to_json(const CrystalGraph& g);
std::string graph_to_dot(const CrystalGraph& g);

}  // namespace wallcrys

#endif
