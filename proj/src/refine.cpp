#include "refine.hpp"

#include <algorithm>

namespace tww::detail {

Refiner::Refiner(const Graph& g, int first, SplitRule rule) : g_(g), rule_(rule) {
  int n = g.order();
  order_.reserve(n);
  order_.push_back(first);
  for (int v = 0; v < n; ++v)
    if (v != first) order_.push_back(v);
  pos_.assign(n, 0);
  cls_.assign(n, 1);
  for (int i = 0; i < n; ++i) pos_[order_[i]] = i;
  cls_[first] = 0;
  start_ = {0, 1};
  end_ = {1, n};
  mark_ = {0, 0};
  back_ = {0, 0};
  classes_ = n > 1 ? 2 : 1;
  if (n <= 1) {
    start_.resize(1);
    end_.resize(1);
  }
  inq_.assign(n, 0);
  enqueue(first);
}

void Refiner::enqueue(int v) {
  if (!inq_[v]) {
    inq_[v] = 1;
    queue_.push_back(v);
  }
}

bool Refiner::pivot(int p) {
  int cp = cls_[p];
  for (int u : g_.neighbours(p)) {
    int c = cls_[u];
    if (c == cp || end_[c] - start_[c] == 1) continue;
    if (mark_[c] == 0) {
      touched_.push_back(c);
      bool right = start_[c] > start_[cp];
      back_[c] = (rule_ == SplitRule::away && right) || (rule_ == SplitRule::toward && !right);
    }
    int target = back_[c] ? end_[c] - 1 - mark_[c] : start_[c] + mark_[c];
    int w = order_[target];
    std::swap(order_[pos_[u]], order_[target]);
    pos_[w] = pos_[u];
    pos_[u] = target;
    ++mark_[c];
  }
  bool split = false;
  for (int c : touched_) {
    int size = end_[c] - start_[c], k = mark_[c];
    mark_[c] = 0;
    if (k == size) continue;
    split = true;
    int nc = static_cast<int>(start_.size());
    if (back_[c]) {
      start_.push_back(end_[c] - k);
      end_.push_back(end_[c]);
      end_[c] -= k;
    } else {
      start_.push_back(start_[c]);
      end_.push_back(start_[c] + k);
      start_[c] += k;
    }
    mark_.push_back(0);
    back_.push_back(0);
    ++classes_;
    for (int i = start_[nc]; i < end_[nc]; ++i) cls_[order_[i]] = nc;
    int small = k <= size - k ? nc : c;
    for (int i = start_[small]; i < end_[small]; ++i) enqueue(order_[i]);
  }
  touched_.clear();
  return split;
}

void Refiner::run() {
  int n = static_cast<int>(order_.size());
  for (;;) {
    while (!queue_.empty()) {
      int p = queue_.back();
      queue_.pop_back();
      inq_[p] = 0;
      pivot(p);
    }
    if (all_singletons()) return;
    bool split = false;
    for (int v = 0; v < n; ++v) split |= pivot(v);
    if (!split && queue_.empty()) return;
  }
}

std::vector<std::vector<int>> Refiner::classes() const {
  std::vector<std::vector<int>> out;
  for (int i = 0; i < static_cast<int>(order_.size());) {
    int c = cls_[order_[i]];
    out.emplace_back(order_.begin() + start_[c], order_.begin() + end_[c]);
    i = end_[c];
  }
  return out;
}

}  // namespace tww::detail
