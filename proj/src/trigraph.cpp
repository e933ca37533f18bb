#include "tww/trigraph.hpp"

#include <algorithm>

namespace tww {

Trigraph::Trigraph(const Graph& g)
    : n0_(g.order()), active_count_(g.order()), adj_(g.order()), parts_(g.order()),
      red_deg_(g.order(), 0), active_(g.order(), 1) {
  for (int v = 0; v < n0_; ++v) {
    parts_[v] = {v};
    adj_[v].reserve(g.neighbours(v).size());
    for (int w : g.neighbours(v)) adj_[v].emplace(w, Colour::black);
  }
}

std::vector<int> Trigraph::active_vertices() const {
  std::vector<int> out;
  out.reserve(active_count_);
  for (int x = 0; x < next_id(); ++x)
    if (active_[x]) out.push_back(x);
  return out;
}

std::optional<Colour> Trigraph::edge(int x, int y) const {
  auto it = adj_[x].find(y);
  if (it == adj_[x].end()) return std::nullopt;
  return it->second;
}

int Trigraph::max_red_degree() const {
  int best = 0;
  for (int x = 0; x < next_id(); ++x)
    if (active_[x]) best = std::max(best, red_deg_[x]);
  return best;
}

int Trigraph::contract_in_place(int u, int v, std::vector<int>* changed) {
  if (u == v) throw PreconditionError("cannot contract a vertex with itself");
  if (!active(u) || !active(v))
    throw PreconditionError("contraction of inactive vertex " + std::to_string(active(u) ? v : u));
  int x = next_id();
  adj_.emplace_back();
  red_deg_.push_back(0);
  active_.push_back(1);

  auto drop = [&](int a, int b) {
    auto it = adj_[b].find(a);
    if (it->second == Colour::red) {
      --red_deg_[b];
      --red_edges_;
    }
    adj_[b].erase(it);
  };
  auto& nx = adj_[x];
  nx.reserve(adj_[u].size() + adj_[v].size());
  for (auto [y, c] : adj_[u]) {
    if (y == v) continue;
    auto it = adj_[v].find(y);
    bool black = c == Colour::black && it != adj_[v].end() && it->second == Colour::black;
    nx.emplace(y, black ? Colour::black : Colour::red);
  }
  for (auto [y, c] : adj_[v])
    if (y != u && !nx.count(y)) nx.emplace(y, Colour::red);
  if (adj_[u].count(v) && adj_[u][v] == Colour::red) --red_edges_;

  for (auto [y, c] : adj_[u])
    if (y != v) drop(u, y);
  for (auto [y, c] : adj_[v])
    if (y != u) drop(v, y);
  for (auto [y, c] : nx) {
    adj_[y].emplace(x, c);
    if (c == Colour::red) {
      ++red_deg_[y];
      ++red_deg_[x];
      ++red_edges_;
    }
    if (changed) changed->push_back(y);
  }
  if (changed) changed->push_back(x);

  adj_[u].clear();
  adj_[v].clear();
  red_deg_[u] = red_deg_[v] = 0;
  active_[u] = active_[v] = 0;
  active_count_ -= 1;

  std::vector<int> merged = std::move(parts_[u]);
  std::vector<int> other = std::move(parts_[v]);
  if (merged.size() < other.size()) std::swap(merged, other);
  merged.insert(merged.end(), other.begin(), other.end());
  parts_[u].clear();
  parts_[v].clear();
  parts_.push_back(std::move(merged));
  return x;
}

Trigraph contract(const Trigraph& h, int u, int v) {
  Trigraph copy = h;
  copy.contract_in_place(u, v);
  return copy;
}

std::string sequence_structure_error(const ContractionSequence& seq) {
  if (seq.n0 < 0) return "negative vertex count";
  if (seq.claimed_width < 0) return "negative width";
  std::size_t limit = seq.n0 > 0 ? static_cast<std::size_t>(seq.n0 - 1) : 0;
  if (seq.steps.size() > limit) return "more steps than vertices allow";
  std::vector<char> used(static_cast<std::size_t>(seq.n0) + seq.steps.size(), 0);
  for (std::size_t k = 0; k < seq.steps.size(); ++k) {
    int bound = seq.n0 + static_cast<int>(k);
    auto [u, v] = seq.steps[k];
    std::string at = "step " + std::to_string(k + 1) + ": ";
    if (u == v) return at + "contracts a vertex with itself";
    for (int x : {u, v}) {
      if (x < 0 || x >= bound) return at + "id " + std::to_string(x) + " does not exist yet";
      if (used[x]) return at + "id " + std::to_string(x) + " already contracted";
    }
    used[u] = used[v] = 1;
  }
  return {};
}

ContractionSequence restrict_sequence(const ContractionSequence& seq, std::span<const int> subset) {
  ContractionSequence out;
  out.n0 = static_cast<int>(subset.size());
  out.claimed_width = seq.claimed_width;
  std::vector<int> map(static_cast<std::size_t>(seq.n0) + seq.steps.size(), -1);
  for (std::size_t i = 0; i < subset.size(); ++i) map[subset[i]] = static_cast<int>(i);
  int next = out.n0;
  for (std::size_t k = 0; k < seq.steps.size(); ++k) {
    int a = map[seq.steps[k].first], b = map[seq.steps[k].second];
    int fresh = seq.n0 + static_cast<int>(k);
    if (a >= 0 && b >= 0) {
      out.steps.emplace_back(a, b);
      map[fresh] = next++;
    } else {
      map[fresh] = a >= 0 ? a : b;
    }
  }
  return out;
}

VerifyReport verify_sequence(const Graph& g, const ContractionSequence& seq, int d) {
  VerifyReport rep;
  rep.partial = !seq.complete();
  auto fail_malformed = [&](std::string msg) {
    rep.status = VerifyReport::Status::malformed;
    rep.message = std::move(msg);
    return rep;
  };
  if (seq.n0 != g.order())
    return fail_malformed("sequence is for " + std::to_string(seq.n0) + " vertices, graph has " +
                          std::to_string(g.order()));
  if (auto err = sequence_structure_error(seq); !err.empty()) return fail_malformed(err);

  Trigraph h(g);
  std::vector<int> changed;
  rep.red_edges.reserve(seq.steps.size());
  for (std::size_t k = 0; k < seq.steps.size(); ++k) {
    changed.clear();
    h.contract_in_place(seq.steps[k].first, seq.steps[k].second, &changed);
    rep.red_edges.push_back(h.red_edge_count());
    int worst = -1;
    for (int y : changed)
      if (h.active(y) && (worst == -1 || h.red_degree(y) > h.red_degree(worst) ||
                          (h.red_degree(y) == h.red_degree(worst) && y < worst)))
        worst = y;
    if (worst != -1) rep.max_red_degree = std::max(rep.max_red_degree, h.red_degree(worst));
    if (worst != -1 && h.red_degree(worst) > d && rep.status == VerifyReport::Status::ok) {
      rep.status = VerifyReport::Status::width_exceeded;
      rep.failed_step = static_cast<int>(k + 1);
      rep.offending_vertex = worst;
      rep.message = "step " + std::to_string(k + 1) + ": vertex " + std::to_string(worst) +
                    " has red degree " + std::to_string(h.red_degree(worst)) + " > " + std::to_string(d);
      return rep;
    }
  }
  return rep;
}

}  // namespace tww
