#pragma once

#include <numeric>
#include <vector>

namespace pseudoseg::detail {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    return true;
  }

  /// Dense labels 0..k-1 in order of first appearance; returns k.
  int label(std::vector<int>& out) {
    const int n = static_cast<int>(parent_.size());
    std::vector<int> root_label(static_cast<std::size_t>(n), -1);
    out.assign(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int i = 0; i < n; ++i) {
      auto& l = root_label[static_cast<std::size_t>(find(i))];
      if (l < 0) l = next++;
      out[static_cast<std::size_t>(i)] = l;
    }
    return next;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace pseudoseg::detail
