#include "tww/modular.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "json.hpp"
#include "refine.hpp"

namespace tww {

const char* to_string(NodeKind k) {
  switch (k) {
    case NodeKind::leaf: return "leaf";
    case NodeKind::series: return "series";
    case NodeKind::parallel: return "parallel";
    case NodeKind::prime: return "prime";
  }
  return "?";
}

std::vector<int> MDTree::leaves(int node) const {
  std::vector<int> out, stack{node};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    if (nodes[x].kind == NodeKind::leaf) out.push_back(nodes[x].vertex);
    else stack.insert(stack.end(), nodes[x].children.rbegin(), nodes[x].children.rend());
  }
  return out;
}

std::vector<int> MDTree::prime_nodes() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
    if (nodes[i].kind == NodeKind::prime) out.push_back(i);
  return out;
}

bool is_cograph(const MDTree& t) { return t.prime_nodes().empty(); }

namespace {

struct RawNode {
  NodeKind kind;
  int vertex = -1;
  std::vector<int> children;
};

std::uint64_t splitmix(std::uint64_t& s) {
  std::uint64_t z = (s += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Components of the complement, without building it.
std::vector<std::vector<int>> co_components(const Graph& g) {
  int n = g.order();
  std::vector<int> unvisited(n);
  std::iota(unvisited.begin(), unvisited.end(), 0);
  std::vector<char> mark(n, 0);
  std::vector<std::vector<int>> out;
  std::vector<int> queue, keep;
  while (!unvisited.empty()) {
    out.emplace_back();
    queue.assign(1, unvisited.back());
    unvisited.pop_back();
    for (std::size_t h = 0; h < queue.size(); ++h) {
      int u = queue[h];
      out.back().push_back(u);
      for (int w : g.neighbours(u)) mark[w] = 1;
      keep.clear();
      for (int w : unvisited) (mark[w] ? keep : queue).push_back(w);
      unvisited.swap(keep);
      for (int w : g.neighbours(u)) mark[w] = 0;
    }
  }
  return out;
}

// Strongly connected components in reverse topological order (sinks first).
std::vector<std::vector<int>> tarjan(const std::vector<std::vector<int>>& out) {
  int n = static_cast<int>(out.size());
  std::vector<int> index(n, -1), low(n, 0), stack;
  std::vector<char> on(n, 0);
  std::vector<std::vector<int>> comps;
  std::vector<std::pair<int, std::size_t>> call;
  int counter = 0;
  for (int s = 0; s < n; ++s) {
    if (index[s] != -1) continue;
    call.emplace_back(s, 0);
    index[s] = low[s] = counter++;
    stack.push_back(s);
    on[s] = 1;
    while (!call.empty()) {
      auto& [u, i] = call.back();
      if (i < out[u].size()) {
        int w = out[u][i++];
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on[w] = 1;
          call.emplace_back(w, 0);
        } else if (on[w]) {
          low[u] = std::min(low[u], index[w]);
        }
        continue;
      }
      int done = u;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] == index[done]) {
        comps.emplace_back();
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on[w] = 0;
          comps.back().push_back(w);
        } while (w != done);
      }
    }
  }
  return comps;
}

class Decomposer {
 public:
  std::vector<RawNode> nodes;

  int leaf(int v) {
    nodes.push_back({NodeKind::leaf, v, {}});
    return static_cast<int>(nodes.size()) - 1;
  }

  int decompose(const Graph& g, const std::vector<int>& labels) {
    int n = g.order();
    if (n == 1) return leaf(labels[0]);
    int v = static_cast<int>(splitmix(seed_) % static_cast<std::uint64_t>(n));

    detail::Refiner refiner(g, v, detail::SplitRule::unordered);
    refiner.run();
    std::vector<std::vector<int>> classes;
    for (auto& c : refiner.classes())
      if (c.front() != v) classes.push_back(std::move(c));
    int k = static_cast<int>(classes.size());

    // Quotient on v (index 0) and one representative per class.
    std::vector<int> reps{v};
    for (auto& c : classes) reps.push_back(c.front());
    Graph q = induced_graph(g, reps);

    std::vector<char> nv(k + 1, 0);
    for (int y : q.neighbours(0)) nv[y] = 1;
    std::vector<std::vector<int>> forcing(k + 1);
    std::vector<char> nx(k + 1, 0);
    for (int x = 1; x <= k; ++x) {
      for (int y : q.neighbours(x)) nx[y] = 1;
      for (int y : q.neighbours(x))
        if (y != 0 && !nv[y]) forcing[x].push_back(y);
      for (int y : q.neighbours(0))
        if (y != x && !nx[y]) forcing[x].push_back(y);
      for (int y : q.neighbours(x)) nx[y] = 0;
    }
    forcing[0].clear();
    auto comps = tarjan(forcing);
    // comps[0] is {0}; the rest must form a chain, innermost first.
    std::vector<int> comp_of(k + 1, -1);
    std::vector<std::vector<int>> levels;
    for (auto& c : comps) {
      if (c.size() == 1 && c[0] == 0) continue;
      levels.push_back(c);
    }
    for (int i = 0; i < static_cast<int>(levels.size()); ++i)
      for (int x : levels[i]) comp_of[x] = i;
    for (int i = 1; i < static_cast<int>(levels.size()); ++i) {
      bool linked = false;
      for (int x : levels[i])
        for (int y : forcing[x]) linked |= comp_of[y] == i - 1;
      if (!linked) throw std::logic_error("modular decomposition: modules containing the pivot are not nested");
    }

    int cur = leaf(labels[v]);
    for (auto& level : levels) {
      NodeKind kind = NodeKind::prime;
      if (level.size() == 1) kind = q.adjacent(0, level[0]) ? NodeKind::series : NodeKind::parallel;
      std::vector<int> children;
      if (kind != NodeKind::prime && nodes[cur].kind == kind) children = nodes[cur].children;
      else children.push_back(cur);
      std::sort(level.begin(), level.end());
      for (int x : level) {
        const auto& cls = classes[x - 1];
        if (kind == NodeKind::prime) {
          children.push_back(decompose_part(g, cls, labels));
          continue;
        }
        // A degenerate level merges all siblings into one class; split it
        // here so no recursion repeats the whole class.
        Graph sub = induced_graph(g, cls);
        auto parts = kind == NodeKind::parallel ? connected_components(sub) : co_components(sub);
        std::vector<int> sub_labels;
        sub_labels.reserve(cls.size());
        for (int u : cls) sub_labels.push_back(labels[u]);
        for (const auto& part : parts) children.push_back(decompose_part(sub, part, sub_labels));
      }
      nodes.push_back({kind, -1, std::move(children)});
      cur = static_cast<int>(nodes.size()) - 1;
    }
    return cur;
  }

 private:
  int decompose_part(const Graph& g, const std::vector<int>& part, const std::vector<int>& labels) {
    if (part.size() == 1) return leaf(labels[part[0]]);
    std::vector<int> sub_labels;
    sub_labels.reserve(part.size());
    for (int u : part) sub_labels.push_back(labels[u]);
    return decompose(induced_graph(g, part), sub_labels);
  }

  std::uint64_t seed_ = 0x7477770001ull;
};

// Preorder layout with children sorted by minimum leaf; fills quotients.
MDTree canonicalise(const Graph& g, const std::vector<RawNode>& raw, int root) {
  int r = static_cast<int>(raw.size());
  std::vector<int> min_leaf(r, 0), size(r, 1);
  // Raw nodes are created children-first.
  for (int i = 0; i < r; ++i) {
    if (raw[i].kind == NodeKind::leaf) {
      min_leaf[i] = raw[i].vertex;
      continue;
    }
    min_leaf[i] = g.order();
    size[i] = 0;
    for (int c : raw[i].children) {
      min_leaf[i] = std::min(min_leaf[i], min_leaf[c]);
      size[i] += size[c];
    }
  }
  MDTree t;
  t.nodes.reserve(r);
  std::vector<std::pair<int, int>> stack{{root, -1}};  // raw id, parent slot
  while (!stack.empty()) {
    auto [x, parent] = stack.back();
    stack.pop_back();
    int id = static_cast<int>(t.nodes.size());
    MDNode node;
    node.kind = raw[x].kind;
    node.vertex = raw[x].vertex;
    node.min_leaf = min_leaf[x];
    node.size = size[x];
    t.nodes.push_back(std::move(node));
    if (parent >= 0) t.nodes[parent].children.push_back(id);
    auto kids = raw[x].children;
    std::sort(kids.begin(), kids.end(), [&](int a, int b) { return min_leaf[a] < min_leaf[b]; });
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.emplace_back(*it, id);
  }
  t.root = 0;
  for (auto& node : t.nodes) {
    if (node.kind != NodeKind::prime) continue;
    std::vector<int> reps;
    for (int c : node.children) reps.push_back(t.nodes[c].min_leaf);
    node.quotient = induced_graph(g, reps);
  }
  return t;
}

}  // namespace

MDTree modular_decomposition(const Graph& g) {
  if (g.order() < 1) throw PreconditionError("modular decomposition needs at least one vertex");
  Decomposer d;
  std::vector<int> labels(g.order());
  std::iota(labels.begin(), labels.end(), 0);
  int root = d.decompose(g, labels);
  return canonicalise(g, d.nodes, root);
}

Graph quotient(const Graph& g, const std::vector<std::vector<int>>& partition, bool validate) {
  std::vector<int> part_of(g.order(), -1);
  for (int i = 0; i < static_cast<int>(partition.size()); ++i) {
    if (partition[i].empty()) throw PreconditionError("empty part " + std::to_string(i));
    for (int v : partition[i]) {
      if (v < 0 || v >= g.order() || part_of[v] != -1) throw PreconditionError("not a partition of the vertex set");
      part_of[v] = i;
    }
  }
  for (int v = 0; v < g.order(); ++v)
    if (part_of[v] == -1) throw PreconditionError("vertex " + std::to_string(v) + " not covered");
  if (validate) {
    for (int i = 0; i < static_cast<int>(partition.size()); ++i)
      if (int s = find_splitter(g, partition[i]); s != -1) throw NotModularError(s, i);
  }
  std::vector<int> reps;
  for (auto& p : partition) reps.push_back(p.front());
  return induced_graph(g, reps);
}

ContractionSequence assemble_sequence(const MDTree& t, const std::map<int, ContractionSequence>& prime_sequences) {
  ContractionSequence out;
  out.n0 = t.order();
  int next = out.n0;
  std::vector<int> rep(t.nodes.size(), -1);
  for (int x = static_cast<int>(t.nodes.size()) - 1; x >= 0; --x) {
    const auto& node = t.nodes[x];
    if (node.kind == NodeKind::leaf) {
      rep[x] = node.vertex;
      continue;
    }
    if (node.kind == NodeKind::prime) {
      auto it = prime_sequences.find(x);
      if (it == prime_sequences.end()) throw MissingSequenceError(x);
      const auto& seq = it->second;
      int k = static_cast<int>(node.children.size());
      if (seq.n0 != k || !seq.complete())
        throw PreconditionError("sequence for prime node " + std::to_string(x) + " is not complete on its quotient");
      std::vector<int> map(2 * k, -1);
      for (int i = 0; i < k; ++i) map[i] = rep[node.children[i]];
      int fresh = k;
      for (auto [a, b] : seq.steps) {
        out.steps.emplace_back(map[a], map[b]);
        map[fresh++] = next++;
      }
      rep[x] = next - 1;
      out.claimed_width = std::max(out.claimed_width, seq.claimed_width);
      continue;
    }
    std::vector<int> ids;
    for (int c : node.children) ids.push_back(rep[c]);
    std::sort(ids.begin(), ids.end());
    std::deque<int> queue(ids.begin(), ids.end());
    while (queue.size() > 1) {
      int a = queue.front();
      queue.pop_front();
      int b = queue.front();
      queue.pop_front();
      out.steps.emplace_back(a, b);
      queue.push_back(next++);
    }
    rep[x] = queue.front();
  }
  return out;
}

std::string md_to_json(const MDTree& t) {
  nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
  for (int i = 0; i < static_cast<int>(t.nodes.size()); ++i) {
    const auto& node = t.nodes[i];
    nlohmann::ordered_json j;
    j["id"] = i;
    j["kind"] = to_string(node.kind);
    if (node.kind == NodeKind::leaf) j["vertex"] = node.vertex;
    else j["children"] = node.children;
    if (node.quotient) {
      nlohmann::ordered_json edges = nlohmann::ordered_json::array();
      for (auto [a, b] : node.quotient->edges()) edges.push_back({a, b});
      j["quotient_edges"] = edges;
    }
    nodes.push_back(j);
  }
  nlohmann::ordered_json out;
  out["n"] = t.order();
  out["root"] = t.root;
  out["nodes"] = nodes;
  return out.dump(2);
}

}  // namespace tww
