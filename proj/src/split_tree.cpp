#include <algorithm>
#include "json.hpp"

#include "tww/dh.hpp"

namespace tww {

int SplitTree::internal_count() const {
  return static_cast<int>(std::count_if(nodes.begin(), nodes.end(), [](const SplitNode& x) { return x.kind != SplitKind::leaf; }));
}

namespace {

void replace_neighbour(SplitNode& node, int from, int to) {
  *std::find(node.adj.begin(), node.adj.end(), from) = to;
  if (node.centre == from) node.centre = to;
}

// Markers a (arrival) and b (departure) of node x are joined by a label edge.
bool label_edge(const SplitNode& x, int a, int b) {
  return x.kind == SplitKind::clique || x.centre == a || x.centre == b;
}

}  // namespace

SplitTree split_tree_dh(const Graph& g, const EliminationOrder& order) {
  validate_elimination(g, order);
  int n = g.order();
  SplitTree t;
  t.leaf_of.assign(n, -1);
  auto new_node = [&](SplitKind kind) {
    t.nodes.push_back(SplitNode{kind, -1, {}, -1});
    return static_cast<int>(t.nodes.size()) - 1;
  };
  auto new_leaf = [&](int v) {
    int x = new_node(SplitKind::leaf);
    t.nodes[x].vertex = v;
    t.leaf_of[v] = x;
    return x;
  };
  new_leaf(order.last);
  for (auto it = order.steps.rbegin(); it != order.steps.rend(); ++it) {
    auto [v, kind, w] = *it;
    int lw = t.leaf_of[w];
    int lv = new_leaf(v);
    if (t.nodes[lw].adj.empty()) {
      // second vertex: a bare edge between two leaves
      t.nodes[lw].adj.push_back(lv);
      t.nodes[lv].adj.push_back(lw);
      continue;
    }
    int p = t.nodes[lw].adj[0];
    SplitNode& pn = t.nodes[p];
    bool p_centre_at_w = pn.kind == SplitKind::star && pn.centre == lw;
    bool p_leafward = pn.kind == SplitKind::star && pn.centre != lw;  // w sits at a non-centre marker
    // Extend p in place when the new node would be mergeable with it.
    if ((kind == EliminationKind::true_twin && pn.kind == SplitKind::clique) ||
        (kind == EliminationKind::false_twin && p_leafward) ||
        (kind == EliminationKind::pendant && p_centre_at_w)) {
      pn.adj.push_back(lv);
      t.nodes[lv].adj.push_back(p);
      continue;
    }
    int s = new_node(kind == EliminationKind::true_twin ? SplitKind::clique : SplitKind::star);
    SplitNode& sn = t.nodes[s];
    sn.adj = {p, lw, lv};
    if (kind == EliminationKind::false_twin) sn.centre = p;
    if (kind == EliminationKind::pendant) sn.centre = lw;
    t.nodes[lw].adj[0] = s;
    t.nodes[lv].adj.push_back(s);
    replace_neighbour(t.nodes[p], lw, s);
  }
  // With two leaves the second one was attached by a bare edge; a third
  // vertex always spawns a node, so the tree is reduced here.
  return t;
}

Graph accessibility_graph(const SplitTree& t) {
  int n = static_cast<int>(t.leaf_of.size());
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    int start = t.leaf_of[v];
    // (node, arrived from)
    std::vector<std::pair<int, int>> stack;
    for (int y : t.nodes[start].adj) stack.emplace_back(y, start);
    while (!stack.empty()) {
      auto [x, from] = stack.back();
      stack.pop_back();
      const SplitNode& node = t.nodes[x];
      if (node.kind == SplitKind::leaf) {
        if (node.vertex > v) edges.emplace_back(v, node.vertex);
        continue;
      }
      for (int y : node.adj)
        if (y != from && label_edge(node, from, y)) stack.emplace_back(y, x);
    }
  }
  return Graph(n, edges);
}

std::string split_tree_defect(const SplitTree& t) {
  for (int x = 0; x < static_cast<int>(t.nodes.size()); ++x) {
    const SplitNode& node = t.nodes[x];
    if (node.kind == SplitKind::leaf) {
      if (node.adj.size() > 1) return "leaf " + std::to_string(x) + " has several neighbours";
      continue;
    }
    if (node.adj.size() < 3) return "node " + std::to_string(x) + " has degree below 3";
    if (node.kind == SplitKind::star && std::find(node.adj.begin(), node.adj.end(), node.centre) == node.adj.end())
      return "star " + std::to_string(x) + " has no centre";
    for (int y : node.adj) {
      const SplitNode& other = t.nodes[y];
      if (node.kind == SplitKind::clique && other.kind == SplitKind::clique)
        return "adjacent cliques " + std::to_string(x) + " and " + std::to_string(y);
      if (node.kind == SplitKind::star && other.kind == SplitKind::star && (node.centre == y) != (other.centre == x))
        return "mergeable stars " + std::to_string(x) + " and " + std::to_string(y);
    }
  }
  return {};
}

std::string split_tree_to_json(const SplitTree& t) {
  nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
  for (int x = 0; x < static_cast<int>(t.nodes.size()); ++x) {
    const SplitNode& node = t.nodes[x];
    nlohmann::ordered_json j;
    j["id"] = x;
    j["kind"] = node.kind == SplitKind::leaf ? "leaf" : node.kind == SplitKind::clique ? "clique" : "star";
    if (node.kind == SplitKind::leaf) j["vertex"] = node.vertex;
    if (node.kind == SplitKind::star) j["centre"] = node.centre;
    j["adj"] = node.adj;
    nodes.push_back(j);
  }
  nlohmann::ordered_json out;
  out["nodes"] = nodes;
  return out.dump();
}

int classify_by_split_structure(const SplitTree& t) {
  if (auto err = split_tree_defect(t); !err.empty()) throw PreconditionError("split tree is not reduced: " + err);
  int k = static_cast<int>(t.nodes.size());
  std::vector<int> stars;
  for (int x = 0; x < k; ++x)
    if (t.nodes[x].kind == SplitKind::star) stars.push_back(x);
  if (stars.empty()) return 0;

  // Edge (a,b) is identified by the child end when rooted at node 0; count
  // stars pointing to it.
  std::vector<int> parent(k, -1), order;
  {
    std::vector<int> stack{0};
    parent[0] = 0;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      order.push_back(x);
      for (int y : t.nodes[x].adj)
        if (parent[y] == -1) {
          parent[y] = x;
          stack.push_back(y);
        }
    }
    parent[0] = -1;
  }
  std::vector<int> count(k, 0);
  for (int s : stars) {
    // every edge on the centre side, plus the centre edge
    int c = t.nodes[s].centre;
    std::vector<std::pair<int, int>> stack{{c, s}};
    while (!stack.empty()) {
      auto [x, from] = stack.back();
      stack.pop_back();
      ++count[parent[x] == from ? x : from];
      for (int y : t.nodes[x].adj)
        if (y != from) stack.emplace_back(y, x);
    }
  }
  for (int x = 1; x < k; ++x)
    if (count[x] == static_cast<int>(stars.size())) return 0;

  // A path may be extended to leaves. With endpoint u fixed, a star off the
  // path points to it iff its centre points toward u, so the stars that do
  // not must all lie on one path from u.
  std::vector<char> is_star(k, 0);
  for (int s : stars) is_star[s] = 1;
  std::vector<int> par(k), depth(k);
  for (int u = 0; u < k; ++u) {
    if (t.nodes[u].kind != SplitKind::leaf) continue;
    std::fill(par.begin(), par.end(), -2);
    std::vector<int> stack{u};
    par[u] = -1;
    depth[u] = 0;
    int bad = 0, deepest = -1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      if (is_star[x] && t.nodes[x].centre != par[x]) {
        ++bad;
        if (deepest == -1 || depth[x] > depth[deepest]) deepest = x;
      }
      for (int y : t.nodes[x].adj)
        if (par[y] == -2) {
          par[y] = x;
          depth[y] = depth[x] + 1;
          stack.push_back(y);
        }
    }
    if (bad == 0) return 1;
    int on_path = 0;
    for (int x = deepest; x != -1; x = par[x]) on_path += is_star[x] && t.nodes[x].centre != par[x];
    if (on_path == bad) return 1;
  }
  return 2;
}

}  // namespace tww
