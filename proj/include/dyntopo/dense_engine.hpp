#ifndef DYNTOPO_DENSE_ENGINE_HPP
#define DYNTOPO_DENSE_ENGINE_HPP

#include <deque>
#include <vector>

#include "dyntopo/bucket_heap.hpp"
#include "dyntopo/graph_core.hpp"
#include "dyntopo/order_list.hpp"

namespace dyntopo {

/// Number of bound/count scales for n vertices: floor(lg n) + 1, or 0 when n == 0.
std::size_t dense_scale_count(std::size_t n);

/// Incremental cycle detection by one-way search for dense graphs.
///
/// Maintains a weak topological numbering k with k(v) <= size(v). Each vertex
/// keeps, per scale i, a bound b_i and a count c_i; traversing an arc (x, y)
/// with k(x) < k(y) bumps c_i(y) for i = floor(lg(k(y) - k(x))), and every
/// 3 * 2^(i+1) such traversals may lift k(y) to b_i(y) + 3 * 2^i. Out-arcs live
/// in bucket heaps keyed by the head's level at storage time, so an arc is
/// only re-traversed after its tail's level reaches that priority.
///
/// Pending arcs are processed in FIFO order. Each level increase assigns the
/// vertex a fresh tie-breaking index below all others, so (k, tie_index) is a
/// total topological order.
///
/// Duplicate arcs are stored and traversed like any other arc.
class DenseEngine {
public:
    explicit DenseEngine(std::size_t n);

    InsertionOutcome insert_arc(VertexId v, VertexId w);
    VertexId add_vertex();

    Level level(VertexId v) const;
    Index tie_index(VertexId v) const;
    Level bound(std::size_t scale, VertexId v) const { return bound_.at(scale).at(v); }
    std::int64_t count(std::size_t scale, VertexId v) const { return count_.at(scale).at(v); }
    std::size_t scale_count() const { return bound_.size(); }
    const BucketHeap<VertexId>& out_heap(VertexId v) const { return out_.at(v); }

    /// Vertices sorted by (k, tie_index). Throws UsageError once poisoned.
    std::vector<VertexId> topological_list() const;

    std::size_t vertex_count() const { return level_.size(); }
    std::size_t arc_count() const { return arc_count_; }
    bool poisoned() const { return poisoned_; }
    const TraversalCounters& counters() const { return counters_; }

private:
    void check_vertex(VertexId v) const;
    void ensure_scale(std::size_t scale);
    void set_level(VertexId y, Level to, VertexId parent);
    WitnessCycle witness_to(VertexId v, VertexId x) const;

    std::vector<Level> level_;
    std::vector<Index> tie_;
    std::vector<std::vector<Level>> bound_;          // [scale][vertex]
    std::vector<std::vector<std::int64_t>> count_;   // [scale][vertex]
    std::vector<BucketHeap<VertexId>> out_;
    LevelOrderedList order_;
    Index index_floor_ = 0;
    std::size_t arc_count_ = 0;

    std::deque<Arc> pending_;
    std::vector<VertexId> parent_;
    std::vector<VertexId> parent_touched_;

    TraversalCounters counters_;
    bool poisoned_ = false;
};

} // namespace dyntopo

#endif // DYNTOPO_DENSE_ENGINE_HPP
