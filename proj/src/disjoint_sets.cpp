#include "dyntopo/disjoint_sets.hpp"

#include <string>

namespace dyntopo {

DisjointSets::DisjointSets(std::size_t n)
    : parent_(n), rank_(n, 0), label_(n), root_of_label_(n) {
    for (std::size_t i = 0; i < n; ++i) {
        parent_[i] = label_[i] = root_of_label_[i] = static_cast<VertexId>(i);
    }
}

VertexId DisjointSets::add() {
    const auto id = static_cast<VertexId>(parent_.size());
    parent_.push_back(id);
    rank_.push_back(0);
    label_.push_back(id);
    root_of_label_.push_back(id);
    return id;
}

VertexId DisjointSets::root(VertexId x) {
    if (x >= parent_.size()) {
        throw UsageError("unknown element " + std::to_string(x));
    }
    VertexId r = x;
    while (parent_[r] != r) {
        r = parent_[r];
    }
    while (parent_[x] != r) {
        const VertexId next = parent_[x];
        parent_[x] = r;
        x = next;
    }
    return r;
}

VertexId DisjointSets::find(VertexId x) {
    return label_[root(x)];
}

bool DisjointSets::is_canonical(VertexId x) {
    return find(x) == x;
}

void DisjointSets::link(VertexId x, VertexId y) {
    if (x == y || !is_canonical(x) || !is_canonical(y)) {
        throw UsageError("link needs two distinct canonical elements");
    }
    VertexId rx = root_of_label_[x];
    VertexId ry = root_of_label_[y];
    if (rank_[rx] < rank_[ry]) {
        std::swap(rx, ry);
    } else if (rank_[rx] == rank_[ry]) {
        ++rank_[rx];
    }
    parent_[ry] = rx;
    label_[rx] = x;
    root_of_label_[x] = rx;
}

} // namespace dyntopo
