#ifndef DYNTOPO_DISJOINT_SETS_HPP
#define DYNTOPO_DISJOINT_SETS_HPP

#include <cstdint>
#include <vector>

#include "dyntopo/graph_core.hpp"

namespace dyntopo {

/// Disjoint-set forest with path compression and union by rank, where the
/// caller picks which of the two linked canonical elements names the union.
///
/// The tree root is chosen by rank as usual; a per-root label records the
/// designated canonical element, so find() returns that label rather than
/// the root.
class DisjointSets {
public:
    explicit DisjointSets(std::size_t n = 0);

    VertexId add();
    std::size_t size() const { return parent_.size(); }

    VertexId find(VertexId x);
    bool is_canonical(VertexId x);

    /// Unites the sets named by canonical x and y; the result is named x.
    void link(VertexId x, VertexId y);

private:
    VertexId root(VertexId x);

    std::vector<VertexId> parent_;
    std::vector<std::uint8_t> rank_;
    std::vector<VertexId> label_; // valid at roots
    std::vector<VertexId> root_of_label_;
};

} // namespace dyntopo

#endif // DYNTOPO_DISJOINT_SETS_HPP
