#include "tww/tww1.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "tww/modular.hpp"

namespace tww {

const char* to_string(RefusalReason r) {
  switch (r) {
    case RefusalReason::not_permutation: return "not-permutation";
    case RefusalReason::prime_node_peel_failed: return "prime-node-peel-failed";
    case RefusalReason::structural: return "structural";
  }
  return "?";
}

namespace {

// Contiguous index range of one of the two realiser orders, read in direction dir.
struct Range {
  int arr = 0;
  int lo = 0, hi = -1;
  int dir = 1;

  bool empty() const { return lo > hi; }
  int size() const { return hi - lo + 1; }
};

struct Level {
  int splitter;
  std::vector<std::pair<int, bool>> peeled;  // vertex, in A
  bool next_in_a = false;  // side of the next level's splitter
};

class Peeler {
 public:
  Peeler(const Realiser& r, const PeelOptions& opt) {
    ord_[0] = order_of(r.sigma);
    ord_[1] = order_of(r.tau);
    pos_[0].resize(r.size());
    pos_[1].resize(r.size());
    for (int a = 0; a < 2; ++a)
      for (int i = 0; i < r.size(); ++i) pos_[a][ord_[a][i]] = i;
    if (opt.tie_break_seed) rng_.emplace(*opt.tie_break_seed);
  }

  std::optional<ContractionSequence> run(int s) {
    int n = static_cast<int>(ord_[0].size());
    Range c, t;
    t.lo = c.lo = 0;
    t.hi = c.hi = n - 1;
    if (ord_[0].front() == s) {
      c = {0, 1, n - 1, 1};
      t = {1, 0, n - 1, 1};
    } else if (ord_[0].back() == s) {
      c = {0, 0, n - 2, -1};
      t = {1, 0, n - 1, -1};
    } else if (ord_[1].front() == s) {
      c = {1, 1, n - 1, 1};
      t = {0, 0, n - 1, 1};
    } else if (ord_[1].back() == s) {
      c = {1, 0, n - 2, -1};
      t = {0, 0, n - 1, -1};
    } else {
      throw PreconditionError("vertex " + std::to_string(s) + " is not extremal");
    }

    std::vector<Level> levels;
    for (;;) {
      // c: the level's vertices except s; t: the same plus s, split at s.
      int ps = pos_[t.arr][s];
      Range a{t.arr, 0, -1, t.dir}, b{t.arr, 0, -1, t.dir};
      if (t.dir > 0) {
        a.lo = t.lo, a.hi = ps - 1, b.lo = ps + 1, b.hi = t.hi;
      } else {
        a.lo = ps + 1, a.hi = t.hi, b.lo = t.lo, b.hi = ps - 1;
      }
      if (a.empty() || b.empty()) return std::nullopt;
      auto in_a = [&](int v) { return t.dir > 0 ? pos_[t.arr][v] < ps : pos_[t.arr][v] > ps; };
      auto at = [&](const Range& r, int i) { return ord_[r.arr][i]; };

      Level level{s, {}};
      while (!c.empty()) {
        int front = at(c, c.dir > 0 ? c.lo : c.hi), back = at(c, c.dir > 0 ? c.hi : c.lo);
        int cands[2], k = 0;
        for (int v : {front, back}) {
          const Range& side = in_a(v) ? a : b;
          if (!side.empty() && (at(side, side.lo) == v || at(side, side.hi) == v)) cands[k++] = v;
        }
        if (k == 0) break;
        int v = cands[0];
        if (rng_ && k == 2) v = cands[std::uniform_int_distribution<int>(0, 1)(*rng_)];
        if (pos_[c.arr][v] == c.lo) ++c.lo;
        else --c.hi;
        Range& side = in_a(v) ? a : b;
        if (at(side, side.lo) == v) ++side.lo;
        else --side.hi;
        level.peeled.emplace_back(v, in_a(v));
      }
      levels.push_back(std::move(level));
      if (a.empty() && b.empty()) break;
      Range next_c, next_t;
      levels.back().next_in_a = a.size() == 1;
      if (a.size() == 1) {
        s = at(a, a.lo);
        next_c = {b.arr, b.lo, b.hi, t.dir};
        next_t = {c.arr, c.lo, c.hi, c.dir};
      } else if (b.size() == 1) {
        s = at(b, b.lo);
        next_c = {a.arr, a.lo, a.hi, -t.dir};
        next_t = {c.arr, c.lo, c.hi, -c.dir};
      } else {
        return std::nullopt;
      }
      c = next_c;
      t = next_t;
    }
    return translate(levels, n);
  }

 private:
  static std::optional<ContractionSequence> translate(const std::vector<Level>& levels, int n) {
    ContractionSequence seq;
    seq.n0 = n;
    seq.claimed_width = 1;
    int next = n;
    auto con = [&](int u, int v) {
      seq.steps.emplace_back(u, v);
      return next++;
    };
    const Level& deepest = levels.back();
    int last_a = -1, last_b = -1;
    for (auto [v, in_a] : deepest.peeled) (in_a ? last_a : last_b) = v;
    if (last_a == -1 || last_b == -1) return std::nullopt;
    int xa = last_a, xb = last_b, y = -1;
    for (int li = static_cast<int>(levels.size()) - 1; li >= 0; --li) {
      const Level& level = levels[li];
      if (li + 1 < static_cast<int>(levels.size())) {
        int sp = levels[li + 1].splitter;
        if (level.next_in_a) xa = sp, xb = y;
        else xa = y, xb = sp;
      }
      for (auto it = level.peeled.rbegin(); it != level.peeled.rend(); ++it) {
        auto [v, in_a] = *it;
        if (li + 1 == static_cast<int>(levels.size()) && (v == last_a || v == last_b)) continue;
        if (in_a) xa = con(xa, v);
        else xb = con(xb, v);
      }
      y = con(xa, xb);
    }
    con(levels.front().splitter, y);
    return seq;
  }

  std::vector<int> ord_[2];
  std::vector<int> pos_[2];
  std::optional<std::mt19937_64> rng_;
};

}  // namespace

std::optional<ContractionSequence> peel_prime(const Graph& h, const Realiser& r, int s, const PeelOptions& opt) {
  if (!realises(r, h)) throw PreconditionError("realiser does not realise the graph");
  auto ext = extremal_vertices(r);
  if (std::find(ext.begin(), ext.end(), s) == ext.end())
    throw PreconditionError("vertex " + std::to_string(s) + " is not extremal");
  return Peeler(r, opt).run(s);
}

namespace {

enum class PrimeResult { ok, not_permutation, peel_failed };

PrimeResult recognize_prime_unchecked(const Graph& h, const PeelOptions& opt, ContractionSequence& out) {
  auto r = prime_realiser(h);
  if (!r) return PrimeResult::not_permutation;
  std::vector<int> guesses;
  auto sig = order_of(r->sigma), tau = order_of(r->tau);
  for (int v : {sig.front(), sig.back(), tau.front(), tau.back()})
    if (std::find(guesses.begin(), guesses.end(), v) == guesses.end()) guesses.push_back(v);
  Peeler peeler(*r, opt);
  for (int s : guesses) {
    auto seq = peeler.run(s);
    if (seq && verify_sequence(h, *seq, 1).ok()) {
      out = std::move(*seq);
      return PrimeResult::ok;
    }
  }
  return PrimeResult::peel_failed;
}

}  // namespace

std::optional<ContractionSequence> recognize_prime(const Graph& h, const PeelOptions& opt) {
  if (h.order() < 4) throw PreconditionError("prime graphs have at least 4 vertices");
  MDTree t = modular_decomposition(h);
  if (t.nodes[t.root].kind != NodeKind::prime || static_cast<int>(t.nodes[t.root].children.size()) != h.order())
    throw PreconditionError("graph is not prime");
  ContractionSequence seq;
  if (recognize_prime_unchecked(h, opt, seq) != PrimeResult::ok) return std::nullopt;
  return seq;
}

RecognitionOutcome recognize(const Graph& g, const PeelOptions& opt) {
  RecognitionOutcome out;
  if (g.order() == 0) {
    out.sequence = ContractionSequence{0, {}, 0};
    return out;
  }
  MDTree t = modular_decomposition(g);
  std::map<int, ContractionSequence> prime_seqs;
  for (int x : t.prime_nodes()) {
    ContractionSequence seq;
    auto res = recognize_prime_unchecked(*t.nodes[x].quotient, opt, seq);
    if (res != PrimeResult::ok) {
      Refusal ref;
      ref.node = x;
      int k = t.nodes[x].quotient->order();
      if (res == PrimeResult::not_permutation) {
        ref.reason = RefusalReason::not_permutation;
        ref.detail = "prime quotient on " + std::to_string(k) + " vertices is not a permutation graph";
      } else {
        ref.reason = RefusalReason::prime_node_peel_failed;
        ref.detail = "no extremal vertex of the prime quotient on " + std::to_string(k) + " vertices admits a peeling";
      }
      out.refusal = ref;
      return out;
    }
    prime_seqs.emplace(x, std::move(seq));
  }
  ContractionSequence seq = assemble_sequence(t, prime_seqs);
  seq.claimed_width = prime_seqs.empty() ? 0 : 1;
  auto rep = verify_sequence(g, seq, 1);
  if (!rep.ok() || !seq.complete()) {
    out.refusal = Refusal{RefusalReason::structural, -1, "assembled sequence failed verification: " + rep.message};
    return out;
  }
  out.sequence = std::move(seq);
  return out;
}

}  // namespace tww
