#ifndef DYNTOPO_ORDER_LIST_HPP
#define DYNTOPO_ORDER_LIST_HPP

#include <vector>

#include "dyntopo/graph_core.hpp"

namespace dyntopo {

/// Doubly-linked list of all vertices sorted by (level, index), with the
/// first and last vertex of every non-empty level indexed by level.
///
/// The owner assigns indices; the list only needs to know that a moved vertex
/// receives an index smaller than every other index on its new level, so it
/// always lands at the front of that level's run.
class LevelOrderedList {
public:
    LevelOrderedList() = default;
    /// n vertices on level 1 in id order.
    explicit LevelOrderedList(std::size_t n);

    /// Adds vertex `v == size()` on level 1 ahead of every other vertex.
    void push_front_new(VertexId v);

    /// Moves v to the front of the run for `new_level` (>= its current level).
    /// Cost is O(1 + new_level - old_level).
    void move_to_level_front(VertexId v, Level new_level);

    Level level(VertexId v) const { return level_[v]; }
    std::size_t size() const { return next_.size(); }
    VertexId front() const { return head_; }
    VertexId next(VertexId v) const { return next_[v]; }

    std::vector<VertexId> to_vector() const;

private:
    void unlink(VertexId v);
    void insert_after(VertexId pos, VertexId v); // pos == kNoVertex: at the head
    void ensure_level(Level level);

    std::vector<VertexId> next_;
    std::vector<VertexId> prev_;
    std::vector<Level> level_;
    std::vector<VertexId> level_first_;
    std::vector<VertexId> level_last_;
    VertexId head_ = kNoVertex;
    VertexId tail_ = kNoVertex;
};

} // namespace dyntopo

#endif // DYNTOPO_ORDER_LIST_HPP
