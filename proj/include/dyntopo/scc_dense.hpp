#ifndef DYNTOPO_SCC_DENSE_HPP
#define DYNTOPO_SCC_DENSE_HPP

#include <cstdint>
#include <deque>
#include <unordered_map>
#include <vector>

#include "dyntopo/bucket_heap.hpp"
#include "dyntopo/disjoint_sets.hpp"
#include "dyntopo/graph_core.hpp"
#include "dyntopo/pair_matrix.hpp"

namespace dyntopo {

/// Strong-component maintenance on top of the one-way-search algorithm.
///
/// Levels, bounds, counts and out-heaps belong to components and live at the
/// canonical vertex. An insertion that goes against the numbering first
/// searches for cycles (raising levels below k(u) to k(u)), then merges the
/// marked components, then replays the traversed arcs with the counting rules
/// of the plain engine. Arcs inside a component and repeated arcs between two
/// components are dropped during the replay.
class SccDenseEngine {
public:
    explicit SccDenseEngine(std::size_t n,
                            std::size_t matrix_dense_limit = PairMatrix::kDefaultDenseLimit);

    InsertionOutcome insert_arc(VertexId v, VertexId w);

    VertexId find(VertexId v) const;
    std::vector<std::vector<VertexId>> components_snapshot() const;

    /// Level of the component containing v.
    Level level(VertexId v) const;
    Level bound(std::size_t scale, VertexId v) const;
    std::int64_t count(std::size_t scale, VertexId v) const;
    std::size_t scale_count() const { return bound_.size(); }

    std::size_t vertex_count() const { return level_.size(); }
    std::size_t arc_count() const { return arc_count_; }
    /// Arcs currently held in component heaps.
    std::size_t stored_arcs() const;
    /// Heap insertions at or below an already drained priority, summed over live heaps.
    std::size_t watermark_violations() const;
    std::size_t components_created() const { return components_created_; }
    std::size_t matrix_bits_set() const { return matrix_.set_count(); }
    const TraversalCounters& counters() const { return counters_; }

private:
    void check_vertex(VertexId v) const;
    void ensure_scale(std::size_t scale);
    void mark(VertexId c);
    void raise_level(VertexId c, Level to);
    void close_marks();
    void update_traversal(Arc arc);

    mutable DisjointSets sets_;
    std::vector<Level> level_;
    std::vector<std::vector<Level>> bound_;          // [scale][canonical]
    std::vector<std::vector<std::int64_t>> count_;   // [scale][canonical]
    std::vector<BucketHeap<Arc>> out_;
    PairMatrix matrix_;
    std::size_t arc_count_ = 0;
    std::size_t components_created_ = 0;

    // Per-insertion scratch.
    std::deque<Arc> search_;
    std::deque<Arc> update_;
    std::vector<Arc> traversed_;
    std::unordered_map<std::uint64_t, Arc> claimed_;   // pair -> first arc seen
    std::vector<VertexId> parent_;
    std::vector<VertexId> parent_touched_;
    std::vector<char> marked_;
    std::vector<VertexId> marked_list_;

    TraversalCounters counters_;
};

} // namespace dyntopo

#endif // DYNTOPO_SCC_DENSE_HPP
