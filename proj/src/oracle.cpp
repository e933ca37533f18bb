#include "tww/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <unordered_map>

namespace tww {
namespace {

using Mask = std::uint32_t;

struct BudgetExhausted {};

// Parts are kept sorted by their minimum vertex, which makes the
// restricted-growth labelling of vertices a canonical key.
struct State {
  int k = 0;
  std::array<Mask, 16> part{};
  std::array<Mask, 16> red{};  // bit j: red edge to part j
  std::array<int, 16> id{};
  Mask touched = 0;
};

Mask drop_bit(Mask m, int j) {
  Mask lo = m & ((Mask{1} << j) - 1);
  Mask hi = (m >> (j + 1)) << j;
  return lo | hi;
}

class Search {
 public:
  Search(const Graph& g, const OracleOptions& opt) : n_(g.order()), opt_(opt) {
    if (n_ > opt.max_n || n_ > 16)
      throw PreconditionError("oracle limited to " + std::to_string(std::min(opt.max_n, 16)) + " vertices");
    for (int v = 0; v < n_; ++v)
      for (int w : g.neighbours(v)) adj_[v] |= Mask{1} << w;
  }

  State initial() const {
    State s;
    s.k = n_;
    for (int v = 0; v < n_; ++v) {
      s.part[v] = Mask{1} << v;
      s.id[v] = v;
    }
    return s;
  }

  // 0: none, 1: black, 2: red
  int relation(Mask x, Mask y) const {
    bool full = false, empty = false;
    for (Mask r = x; r; r &= r - 1) {
      Mask t = adj_[std::countr_zero(r)] & y;
      if (t == 0) empty = true;
      else if (t == y) full = true;
      else return 2;
      if (full && empty) return 2;
    }
    return full ? 1 : 0;
  }

  State merge(const State& s, int i, int j) const {
    State c;
    c.k = s.k - 1;
    c.touched = s.touched;
    for (int a = 0, b = 0; a < s.k; ++a) {
      if (a == j) continue;
      c.part[b] = s.part[a];
      c.red[b] = drop_bit(s.red[a], j);
      c.id[b] = s.id[a];
      ++b;
    }
    c.part[i] |= s.part[j];
    c.id[i] = 2 * n_ - s.k;
    c.red[i] = 0;
    for (int y = 0; y < c.k; ++y) {
      if (y == i) continue;
      bool r = relation(c.part[i], c.part[y]) == 2;
      Mask bit_i = Mask{1} << i, bit_y = Mask{1} << y;
      if (r) {
        c.red[i] |= bit_y;
        c.red[y] |= bit_i;
      } else {
        c.red[y] &= ~bit_i;
      }
    }
    for (int y = 0; y < c.k; ++y)
      if (c.red[y]) c.touched |= c.part[y];
    return c;
  }

  static int max_red(const State& s) {
    int best = 0;
    for (int y = 0; y < s.k; ++y) best = std::max(best, std::popcount(s.red[y]));
    return best;
  }
  static int red_edges(const State& s) {
    int total = 0;
    for (int y = 0; y < s.k; ++y) total += std::popcount(s.red[y]);
    return total / 2;
  }

  std::uint64_t key(const State& s) const {
    std::uint64_t k = 0;
    for (int y = 0; y < s.k; ++y)
      for (Mask r = s.part[y]; r; r &= r - 1) k |= std::uint64_t(y) << (4 * std::countr_zero(r));
    return k;
  }

  void tick() {
    ++expansions_;
    if (opt_.budget && expansions_ > *opt_.budget) throw BudgetExhausted{};
  }

  bool twins(const State& s, int i, int j) const {
    for (int y = 0; y < s.k; ++y) {
      if (y == i || y == j) continue;
      bool ri = (s.red[i] >> y) & 1, rj = (s.red[j] >> y) & 1;
      if (ri != rj) return false;
      if (!ri && relation(s.part[i], s.part[y]) != relation(s.part[j], s.part[y])) return false;
    }
    return true;
  }

  // Whether a d-sequence exists from s. On success `path` gets the steps in reverse.
  bool decide(const State& s, int d) {
    if (s.k <= 1) return true;
    std::uint64_t kk = key(s);
    auto it = failed_.find(kk);
    if (it != failed_.end() && it->second >= d) return false;
    tick();
    for (int i = 0; i < s.k; ++i)
      for (int j = i + 1; j < s.k; ++j)
        if (twins(s, i, j)) {
          State c = merge(s, i, j);
          if (decide(c, d)) {
            path_.emplace_back(s.id[i], s.id[j]);
            return true;
          }
          failed_[kk] = std::max(failed_[kk], d);
          return false;
        }
    struct Child {
      int reds, i, j;
    };
    std::vector<Child> kids;
    std::vector<State> states;
    for (int i = 0; i < s.k; ++i)
      for (int j = i + 1; j < s.k; ++j) {
        State c = merge(s, i, j);
        if (max_red(c) > d) continue;
        kids.push_back({red_edges(c), i, j});
        states.push_back(c);
      }
    std::vector<int> order(kids.size());
    for (std::size_t t = 0; t < order.size(); ++t) order[t] = static_cast<int>(t);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return kids[a].reds < kids[b].reds; });
    for (int t : order)
      if (decide(states[t], d)) {
        path_.emplace_back(s.id[kids[t].i], s.id[kids[t].j]);
        return true;
      }
    failed_[kk] = std::max(failed_[kk], d);
    return false;
  }

  // 1-sequences in which `last`'s part becomes red-incident only when all
  // vertices already are (or never).
  bool decide_last(const State& s, int last) {
    if (s.k <= 1) return true;
    std::uint64_t kk = key(s);
    auto mk = std::make_pair(kk, s.touched);
    if (failed_last_.count(mk)) return false;
    tick();
    Mask all = (Mask{1} << n_) - 1;
    for (int i = 0; i < s.k; ++i)
      for (int j = i + 1; j < s.k; ++j) {
        State c = merge(s, i, j);
        if (max_red(c) > 1) continue;
        if (((c.touched >> last) & 1) && c.touched != all) continue;
        if (decide_last(c, last)) return true;
      }
    failed_last_.emplace(mk, 1);
    return false;
  }

  std::vector<Edge> take_path() {
    std::vector<Edge> p(path_.rbegin(), path_.rend());
    path_.clear();
    return p;
  }
  std::uint64_t expansions() const { return expansions_; }

 private:
  struct PairHash {
    std::size_t operator()(const std::pair<std::uint64_t, Mask>& p) const {
      return std::hash<std::uint64_t>()(p.first * 0x9E3779B97F4A7C15ull ^ p.second);
    }
  };

  int n_;
  OracleOptions opt_;
  std::array<Mask, 16> adj_{};
  std::uint64_t expansions_ = 0;
  std::unordered_map<std::uint64_t, int> failed_;
  std::unordered_map<std::pair<std::uint64_t, Mask>, int, PairHash> failed_last_;
  std::vector<Edge> path_;
};

}  // namespace

OracleResult brute_force_tww(const Graph& g, const OracleOptions& opt) {
  Search search(g, opt);
  OracleResult res;
  State init = search.initial();
  try {
    for (int d = 0;; ++d)
      if (search.decide(init, d)) {
        res.width = d;
        res.witness = ContractionSequence{g.order(), search.take_path(), d};
        break;
      }
  } catch (const BudgetExhausted&) {
    res.width.reset();
  }
  res.expansions = search.expansions();
  return res;
}

std::optional<bool> brute_force_has_1_sequence_with_last(const Graph& g, int s, const OracleOptions& opt) {
  if (s < 0 || s >= g.order()) throw PreconditionError("vertex out of range");
  Search search(g, opt);
  try {
    return search.decide_last(search.initial(), s);
  } catch (const BudgetExhausted&) {
    return std::nullopt;
  }
}

}  // namespace tww
