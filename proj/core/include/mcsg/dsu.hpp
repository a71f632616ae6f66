#pragma once

#include <numeric>
#include <utility>
#include <vector>

namespace mcsg {

// Union-find with union by size. Rollback is supported when path
// compression is off.
class Dsu {
 public:
  explicit Dsu(int n = 0, bool compress = true) { reset(n, compress); }

  void reset(int n, bool compress = true) {
    parent_.resize(n);
    size_.assign(n, 1);
    std::iota(parent_.begin(), parent_.end(), 0);
    compress_ = compress;
    history_.clear();
    sets_ = n;
  }

  int find(int x) {
    int root = x;
    while (parent_[root] != root) root = parent_[root];
    if (compress_) {
      while (parent_[x] != root) {
        int next = parent_[x];
        parent_[x] = root;
        x = next;
      }
    }
    return root;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --sets_;
    if (!compress_) history_.push_back(b);
    return true;
  }

  bool same(int a, int b) { return find(a) == find(b); }
  int sets() const { return sets_; }
  int size() const { return static_cast<int>(parent_.size()); }

  int checkpoint() const { return static_cast<int>(history_.size()); }
  void rollback(int mark) {
    while (static_cast<int>(history_.size()) > mark) {
      int b = history_.back();
      history_.pop_back();
      int a = parent_[b];
      size_[a] -= size_[b];
      parent_[b] = b;
      ++sets_;
    }
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> history_;
  bool compress_ = true;
  int sets_ = 0;
};

}  // namespace mcsg
