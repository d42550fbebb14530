#ifndef ROUTELAB_DETAIL_DISJOINT_SETS_HPP
#define ROUTELAB_DETAIL_DISJOINT_SETS_HPP

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace routelab::detail {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // Returns false if a and b were already joined.
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
        return true;
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<unsigned char> rank_;
};

}  // namespace routelab::detail

#endif  // ROUTELAB_DETAIL_DISJOINT_SETS_HPP
