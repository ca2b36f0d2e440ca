#pragma once

#include <vector>

namespace esat {

// Binary max-heap over variable indices 1..n keyed by an external activity
// array, with reverse indices for decrease/increase-key. Ties break toward
// the smaller variable index so the order is fully deterministic.
class VarHeap {
 public:
  explicit VarHeap(const std::vector<double>& act) : act_(act) {}

  void grow(int n) { pos_.resize(n + 1, -1); }

  bool contains(int v) const { return pos_[v] >= 0; }
  bool empty() const { return heap_.empty(); }

  void insert(int v) {
    if (contains(v)) return;
    pos_[v] = static_cast<int>(heap_.size());
    heap_.push_back(v);
    up(pos_[v]);
  }

  int pop() {
    int top = heap_[0];
    heap_[0] = heap_.back();
    pos_[heap_[0]] = 0;
    heap_.pop_back();
    pos_[top] = -1;
    if (!heap_.empty()) down(0);
    return top;
  }

  void bumped(int v) {
    if (contains(v)) up(pos_[v]);
  }

 private:
  bool before(int a, int b) const {
    if (act_[a] != act_[b]) return act_[a] > act_[b];
    return a < b;
  }

  void up(int i) {
    int v = heap_[i];
    while (i > 0) {
      int p = (i - 1) / 2;
      if (!before(v, heap_[p])) break;
      heap_[i] = heap_[p];
      pos_[heap_[i]] = i;
      i = p;
    }
    heap_[i] = v;
    pos_[v] = i;
  }

  void down(int i) {
    int v = heap_[i];
    size_t n = heap_.size();
    while (true) {
      size_t l = 2 * i + 1, r = 2 * i + 2;
      if (l >= n) break;
      size_t c = (r < n && before(heap_[r], heap_[l])) ? r : l;
      if (!before(heap_[c], v)) break;
      heap_[i] = heap_[c];
      pos_[heap_[i]] = i;
      i = static_cast<int>(c);
    }
    heap_[i] = v;
    pos_[v] = i;
  }

  const std::vector<double>& act_;
  std::vector<int> heap_;
  std::vector<int> pos_;
};

}  // namespace esat
