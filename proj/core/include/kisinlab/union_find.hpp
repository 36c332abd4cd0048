#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace kisinlab {

// Disjoint sets with path halving and union by size.
class UnionFind {
public:
    explicit UnionFind(std::size_t n = 0) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t size() const noexcept { return parent_.size(); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // Returns false if x and y were already joined.
    bool unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        if (size_[x] < size_[y]) std::swap(x, y);
        parent_[y] = x;
        size_[x] += size_[y];
        return true;
    }

    bool same(std::size_t x, std::size_t y) { return find(x) == find(y); }

    // Label of each element: the smallest element of its set. Independent
    // of the order in which unions happened.
    std::vector<std::size_t> min_labels() {
        std::vector<std::size_t> low(parent_.size());
        std::iota(low.begin(), low.end(), std::size_t{0});
        for (std::size_t x = 0; x < parent_.size(); ++x) {
            const std::size_t root = find(x);
            if (x < low[root]) low[root] = x;
        }
        std::vector<std::size_t> out(parent_.size());
        for (std::size_t x = 0; x < parent_.size(); ++x) out[x] = low[find(x)];
        return out;
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

}  // namespace kisinlab
