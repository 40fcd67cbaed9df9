#ifndef COFIL_UNION_FIND_HPP
#define COFIL_UNION_FIND_HPP

#include <cstddef>
#include <numeric>
#include <vector>

namespace cofil {

/// Disjoint-set forest with path halving and union by size.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    /// Returns false when x and y were already in the same set.
    bool unite(std::size_t x, std::size_t y) {
        std::size_t rx = find(x), ry = find(y);
        if (rx == ry) return false;
        if (size_[rx] < size_[ry]) std::swap(rx, ry);
        parent_[ry] = rx;
        size_[rx] += size_[ry];
        return true;
    }

    bool same(std::size_t x, std::size_t y) { return find(x) == find(y); }

    /// Canonical partition labels: label[i] = smallest member of i's set.
    std::vector<std::size_t> partition_labels() {
        std::vector<std::size_t> label(parent_.size(), parent_.size());
        for (std::size_t i = 0; i < parent_.size(); ++i) {
            std::size_t r = find(i);
            if (label[r] > i) label[r] = i;
        }
        std::vector<std::size_t> out(parent_.size());
        for (std::size_t i = 0; i < parent_.size(); ++i) out[i] = label[find(i)];
        return out;
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

} // namespace cofil

#endif
