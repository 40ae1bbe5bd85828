#pragma once

#include <numeric>
#include <vector>

namespace biset::detail {

class UnionFind {
  public:
    explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int x) {
        while (parent_[x] != x) { parent_[x] = parent_[parent_[x]]; x = parent_[x]; }
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

    /// Numbers classes 0..k-1 in order of their least member; returns the
    /// class index per element.
    std::vector<int> classes() {
        std::vector<int> idx(parent_.size(), -1);
        int next = 0;
        for (int i = 0; i < static_cast<int>(parent_.size()); ++i)
            if (find(i) == i) idx[i] = next++;
        for (int i = 0; i < static_cast<int>(parent_.size()); ++i) idx[i] = idx[find(i)];
        return idx;
    }

  private:
    std::vector<int> parent_;
};

}  // namespace biset::detail
