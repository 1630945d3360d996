#ifndef DYNTOPO_SCC_SPARSE_HPP
#define DYNTOPO_SCC_SPARSE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "dyntopo/disjoint_sets.hpp"
#include "dyntopo/graph_core.hpp"
#include "dyntopo/pair_matrix.hpp"
#include "dyntopo/sparse_engine.hpp"

namespace dyntopo {

/// Strong-component maintenance on top of the two-way-search algorithm.
///
/// Components are disjoint sets whose canonical vertex holds the level, the
/// index and the incident arc lists. For every arc (x, y), either
/// find(x) == find(y) or the (level, index) of find(x) is below that of
/// find(y). Searches delete arcs inside a component and repeated arcs between
/// the same two components (detected through a pair matrix that is cleared
/// before each insertion returns).
class SccSparseEngine {
public:
    explicit SccSparseEngine(std::size_t n, std::optional<std::size_t> m_hint = std::nullopt,
                             std::size_t matrix_dense_limit = PairMatrix::kDefaultDenseLimit);

    InsertionOutcome insert_arc(VertexId v, VertexId w);

    VertexId find(VertexId v) const;
    /// Components as sorted member lists, ordered by smallest member.
    std::vector<std::vector<VertexId>> components_snapshot() const;
    /// (level, index) of the component containing v.
    std::pair<Level, Index> order_key(VertexId v) const;

    std::size_t vertex_count() const { return level_.size(); }
    std::size_t arc_count() const { return arc_count_; }
    std::size_t delta() const { return delta_.value(); }
    Index index_floor() const { return index_floor_; }
    Level max_level() const { return max_level_; }
    std::size_t last_backward_arcs() const { return last_backward_arcs_; }
    /// Live plus dead components ever formed, starting from n singletons.
    std::size_t components_created() const { return components_created_; }
    /// Bits left set in the pair matrix; zero between insertions.
    std::size_t matrix_bits_set() const { return matrix_.set_count(); }
    const TraversalCounters& counters() const { return counters_; }

private:
    struct StoredArc {
        VertexId tail;
        VertexId head;
        bool removed;
    };
    struct Frame {
        VertexId vertex;
        std::size_t next;
    };
    using ArcId = std::uint32_t;

    void check_vertex(VertexId v) const;
    void raise_level(VertexId c, Level to);
    void mark(VertexId c);
    void set_parent(VertexId c, VertexId p);
    void mark_path(VertexId from, VertexId stop);
    void close_backward_marks();
    void drop_removed(std::vector<ArcId>& list);
    static void absorb(std::vector<ArcId>& into, std::vector<ArcId>& from);

    mutable DisjointSets sets_;
    std::vector<StoredArc> arcs_;
    std::vector<std::vector<ArcId>> out_;   // by canonical vertex
    std::vector<std::vector<ArcId>> in_;    // by canonical vertex, same-level tails only
    std::vector<Level> level_;
    std::vector<Index> index_;
    Index index_floor_ = 0;
    Level max_level_ = 1;
    std::size_t arc_count_ = 0;
    DeltaSchedule delta_;
    PairMatrix matrix_;
    std::size_t components_created_ = 0;

    // Per-insertion scratch.
    std::vector<VertexId> parent_;
    std::vector<VertexId> parent_touched_;
    std::vector<char> marked_;
    std::vector<VertexId> marked_list_;
    std::vector<char> in_backward_;
    std::vector<VertexId> backward_list_;
    std::vector<VertexId> forward_post_;
    std::vector<Frame> stack_;
    std::size_t last_backward_arcs_ = 0;

    TraversalCounters counters_;
};

} // namespace dyntopo

#endif // DYNTOPO_SCC_SPARSE_HPP
