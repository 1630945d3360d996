#ifndef DYNTOPO_SPARSE_ENGINE_HPP
#define DYNTOPO_SPARSE_ENGINE_HPP

#include <optional>
#include <span>
#include <unordered_set>
#include <utility>
#include <vector>

#include "dyntopo/graph_core.hpp"
#include "dyntopo/order_list.hpp"

namespace dyntopo {

/// min{ceil(sqrt(m)), ceil(n^(2/3))}, at least 1.
std::size_t sparse_delta(std::size_t n, std::size_t m);

/// The backward-search budget. Fixed from (n, m_hint) when m is known up
/// front; otherwise starts at 1 and is recomputed whenever the running vertex
/// or arc count doubles, replacing the old value only if it at least doubles.
class DeltaSchedule {
public:
    DeltaSchedule(std::size_t n, std::optional<std::size_t> m_hint);

    std::size_t value() const { return delta_; }
    bool adaptive() const { return adaptive_; }
    void observe(std::size_t n, std::size_t m);

private:
    std::size_t delta_ = 1;
    bool adaptive_ = false;
    std::size_t n_mark_ = 1;
    std::size_t m_mark_ = 1;
};

/// Incremental cycle detection by two-way search for sparse graphs.
///
/// Every vertex carries a level k(v) >= 1 and a distinct negative index i(v).
/// While the graph is acyclic, (k, i) compared lexicographically is a
/// topological order. Backward searches stay within one level and stop after
/// delta arc traversals; forward searches only enter lower levels and raise
/// them. The cost of all searches is bounded through the level bound.
///
/// Only arcs (u, v) with k(u) == k(v) are kept on in-lists.
///
/// The first detected cycle poisons the engine: the state is left as it was
/// when the cycle was found and further insertions throw UsageError.
class SparseEngine {
public:
    explicit SparseEngine(std::size_t n, std::optional<std::size_t> m_hint = std::nullopt);

    InsertionOutcome insert_arc(VertexId v, VertexId w);
    VertexId add_vertex();

    std::pair<Level, Index> order_key(VertexId v) const;
    Level level(VertexId v) const { return order_key(v).first; }
    Index index(VertexId v) const { return order_key(v).second; }

    /// Vertices in (level, index) order. Throws UsageError once poisoned.
    std::vector<VertexId> topological_list() const;

    std::size_t vertex_count() const { return level_.size(); }
    std::size_t arc_count() const { return arc_count_; }
    std::size_t delta() const { return delta_.value(); }
    Index index_floor() const { return index_floor_; }
    Level max_level() const { return max_level_; }
    bool poisoned() const { return poisoned_; }
    const TraversalCounters& counters() const { return counters_; }

    /// Arc traversals made by the most recent backward search (0 if none ran).
    std::size_t last_backward_arcs() const { return last_backward_arcs_; }

    std::span<const VertexId> out_arcs(VertexId v) const { return out_[v]; }
    /// Tails u of stored arcs (u, v) with k(u) == k(v).
    std::span<const VertexId> same_level_in_arcs(VertexId v) const { return in_[v]; }

private:
    struct Frame {
        VertexId vertex;
        std::size_t next;
    };

    void check_vertex(VertexId v) const;
    void raise_level(VertexId v, Level to);
    InsertionOutcome poison(WitnessCycle witness);
    WitnessCycle witness_from_backward(VertexId v, VertexId w, VertexId y) const;
    WitnessCycle witness_from_forward(VertexId v, VertexId w, VertexId x, VertexId y) const;

    std::vector<Level> level_;
    std::vector<Index> index_;
    std::vector<std::vector<VertexId>> out_;
    std::vector<std::vector<VertexId>> in_;
    std::unordered_set<std::uint64_t> arcs_;
    LevelOrderedList order_;
    Index index_floor_ = 0;
    Level max_level_ = 1;
    std::size_t arc_count_ = 0;

    DeltaSchedule delta_;

    // Per-insertion scratch.
    std::vector<char> marked_;
    std::vector<VertexId> marked_list_;
    std::vector<VertexId> bparent_;
    std::vector<VertexId> fparent_;
    std::vector<Frame> stack_;
    std::vector<VertexId> backward_list_;
    std::vector<VertexId> forward_post_;

    std::size_t last_backward_arcs_ = 0;
    TraversalCounters counters_;
    bool poisoned_ = false;
};

} // namespace dyntopo

#endif // DYNTOPO_SPARSE_ENGINE_HPP
