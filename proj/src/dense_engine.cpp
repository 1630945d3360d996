#include "dyntopo/dense_engine.hpp"

#include <algorithm>
#include <string>

namespace dyntopo {

std::size_t dense_scale_count(std::size_t n) {
    return n == 0 ? 0 : static_cast<std::size_t>(floor_log2(n)) + 1;
}

DenseEngine::DenseEngine(std::size_t n)
    : level_(n, 1), tie_(n), out_(n), order_(n), index_floor_(-static_cast<Index>(n)),
      parent_(n, kNoVertex) {
    for (std::size_t v = 0; v < n; ++v) {
        tie_[v] = static_cast<Index>(v) - static_cast<Index>(n);
    }
    const std::size_t scales = dense_scale_count(n);
    bound_.assign(scales, std::vector<Level>(n, 0));
    count_.assign(scales, std::vector<std::int64_t>(n, 0));
}

void DenseEngine::check_vertex(VertexId v) const {
    if (v >= vertex_count()) {
        throw UsageError("unknown vertex " + std::to_string(v));
    }
}

Level DenseEngine::level(VertexId v) const {
    check_vertex(v);
    return level_[v];
}

Index DenseEngine::tie_index(VertexId v) const {
    check_vertex(v);
    return tie_[v];
}

std::vector<VertexId> DenseEngine::topological_list() const {
    if (poisoned_) {
        throw UsageError("engine is poisoned by a detected cycle");
    }
    return order_.to_vector();
}

void DenseEngine::ensure_scale(std::size_t scale) {
    // Only reachable while a cycle-closing insertion lifts levels past n.
    while (bound_.size() <= scale) {
        bound_.emplace_back(vertex_count(), 0);
        count_.emplace_back(vertex_count(), 0);
    }
}

VertexId DenseEngine::add_vertex() {
    if (poisoned_) {
        throw UsageError("engine is poisoned by a detected cycle");
    }
    const auto id = static_cast<VertexId>(vertex_count());
    level_.push_back(1);
    tie_.push_back(--index_floor_);
    out_.emplace_back();
    parent_.push_back(kNoVertex);
    for (auto& b : bound_) {
        b.push_back(0);
    }
    for (auto& c : count_) {
        c.push_back(0);
    }
    ensure_scale(dense_scale_count(vertex_count()) - 1);
    order_.push_front_new(id);
    return id;
}

void DenseEngine::set_level(VertexId y, Level to, VertexId parent) {
    level_[y] = to;
    tie_[y] = --index_floor_;
    order_.move_to_level_front(y, to);
    if (parent_[y] == kNoVertex) {
        parent_touched_.push_back(y);
    }
    parent_[y] = parent;
    ++counters_.level_increases;
    ++counters_.reindex_moves;
}

WitnessCycle DenseEngine::witness_to(VertexId v, VertexId x) const {
    // Out-tree path v -> w -> ... -> x, closed by the arc (x, v).
    WitnessCycle c;
    for (VertexId t = x; t != kNoVertex; t = parent_[t]) {
        c.vertices.push_back(t);
        if (t == v || c.vertices.size() > vertex_count()) {
            break;
        }
    }
    std::reverse(c.vertices.begin(), c.vertices.end());
    return c;
}

InsertionOutcome DenseEngine::insert_arc(VertexId v, VertexId w) {
    if (poisoned_) {
        throw UsageError("engine is poisoned by a detected cycle");
    }
    check_vertex(v);
    check_vertex(w);
    if (v == w) {
        poisoned_ = true;
        return InsertionOutcome::cycle(WitnessCycle{{v}});
    }

    pending_.clear();
    pending_.push_back(Arc{v, w});
    while (!pending_.empty()) {
        const auto [x, y] = pending_.front();
        pending_.pop_front();
        ++counters_.arc_traversals;
        if (y == v) {
            poisoned_ = true;
            return InsertionOutcome::cycle(witness_to(v, x));
        }
        if (level_[x] >= level_[y]) {
            set_level(y, level_[x] + 1, x);
        } else {
            const auto scale = static_cast<std::size_t>(floor_log2(level_[y] - level_[x]));
            ensure_scale(scale);
            auto& c = count_[scale][y];
            if (++c == (std::int64_t{3} << (scale + 1))) {
                c = 0;
                ++counters_.counter_resets;
                const Level lifted = bound_[scale][y] + (Level{3} << scale);
                if (lifted > level_[y]) {
                    set_level(y, lifted, x);
                }
                bound_[scale][y] = level_[y] - (Level{2} << scale);
            }
        }
        out_[y].extract_upto(level_[y], [this, y](VertexId z) { pending_.push_back(Arc{y, z}); });
        out_[x].insert(level_[y], y);
    }
    ++arc_count_;

    for (VertexId t : parent_touched_) {
        parent_[t] = kNoVertex;
    }
    parent_touched_.clear();
    return InsertionOutcome::accepted();
}

} // namespace dyntopo
