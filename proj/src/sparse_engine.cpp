#include "dyntopo/sparse_engine.hpp"

#include <algorithm>
#include <string>

namespace dyntopo {

std::size_t sparse_delta(std::size_t n, std::size_t m) {
    const auto d = std::min(ceil_sqrt(m), ceil_two_thirds_power(n));
    return std::max<std::size_t>(1, d);
}

DeltaSchedule::DeltaSchedule(std::size_t n, std::optional<std::size_t> m_hint)
    : adaptive_(!m_hint), n_mark_(std::max<std::size_t>(n, 1)) {
    if (m_hint) {
        delta_ = sparse_delta(n, *m_hint);
    }
}

void DeltaSchedule::observe(std::size_t n, std::size_t m) {
    if (!adaptive_) {
        return;
    }
    const bool n_doubled = n >= 2 * n_mark_;
    const bool m_doubled = m >= 2 * m_mark_;
    if (!n_doubled && !m_doubled) {
        return;
    }
    if (n_doubled) {
        n_mark_ = n;
    }
    if (m_doubled) {
        m_mark_ = m;
    }
    const std::size_t candidate = sparse_delta(n, m);
    if (candidate >= 2 * delta_) {
        delta_ = candidate;
    }
}

SparseEngine::SparseEngine(std::size_t n, std::optional<std::size_t> m_hint)
    : level_(n, 1), index_(n), out_(n), in_(n), order_(n),
      index_floor_(-static_cast<Index>(n)), delta_(n, m_hint), marked_(n, 0),
      bparent_(n, kNoVertex), fparent_(n, kNoVertex) {
    for (std::size_t v = 0; v < n; ++v) {
        index_[v] = static_cast<Index>(v) - static_cast<Index>(n);
    }
}

void SparseEngine::check_vertex(VertexId v) const {
    if (v >= vertex_count()) {
        throw UsageError("unknown vertex " + std::to_string(v));
    }
}

std::pair<Level, Index> SparseEngine::order_key(VertexId v) const {
    check_vertex(v);
    return {level_[v], index_[v]};
}

std::vector<VertexId> SparseEngine::topological_list() const {
    if (poisoned_) {
        throw UsageError("engine is poisoned by a detected cycle");
    }
    return order_.to_vector();
}

VertexId SparseEngine::add_vertex() {
    if (poisoned_) {
        throw UsageError("engine is poisoned by a detected cycle");
    }
    const auto id = static_cast<VertexId>(vertex_count());
    level_.push_back(1);
    index_.push_back(--index_floor_);
    out_.emplace_back();
    in_.emplace_back();
    marked_.push_back(0);
    bparent_.push_back(kNoVertex);
    fparent_.push_back(kNoVertex);
    order_.push_front_new(id);
    delta_.observe(vertex_count(), arc_count_);
    return id;
}

void SparseEngine::raise_level(VertexId v, Level to) {
    level_[v] = to;
    max_level_ = std::max(max_level_, to);
    ++counters_.level_increases;
}

InsertionOutcome SparseEngine::poison(WitnessCycle witness) {
    poisoned_ = true;
    stack_.clear();
    return InsertionOutcome::cycle(std::move(witness));
}

WitnessCycle SparseEngine::witness_from_backward(VertexId v, VertexId w, VertexId y) const {
    // (w, y) closes the in-tree path y -> ... -> v, then (v, w).
    WitnessCycle c{{w}};
    for (VertexId t = y; t != kNoVertex; t = bparent_[t]) {
        c.vertices.push_back(t);
        if (t == v) {
            break;
        }
    }
    return c;
}

WitnessCycle SparseEngine::witness_from_forward(VertexId v, VertexId w, VertexId x,
                                                VertexId y) const {
    // w -> ... -> x along the out-tree, (x, y), y -> ... -> v along the in-tree, (v, w).
    WitnessCycle c;
    for (VertexId t = x; t != kNoVertex; t = fparent_[t]) {
        c.vertices.push_back(t);
        if (t == w) {
            break;
        }
    }
    std::reverse(c.vertices.begin(), c.vertices.end());
    for (VertexId t = y; t != kNoVertex; t = bparent_[t]) {
        c.vertices.push_back(t);
        if (t == v) {
            break;
        }
    }
    return c;
}

InsertionOutcome SparseEngine::insert_arc(VertexId v, VertexId w) {
    if (poisoned_) {
        throw UsageError("engine is poisoned by a detected cycle");
    }
    check_vertex(v);
    check_vertex(w);
    if (v == w) {
        return poison(WitnessCycle{{v}});
    }
    const std::uint64_t key = arc_key(v, w);
    if (arcs_.contains(key)) {
        return InsertionOutcome::no_op();
    }
    last_backward_arcs_ = 0;

    // Test order.
    if (std::pair{level_[v], index_[v]} >= std::pair{level_[w], index_[w]}) {
        // Search backward from v within its level.
        backward_list_.clear();
        forward_post_.clear();
        std::size_t arcs = 0;
        bool aborted = false;
        auto mark = [this](VertexId x) {
            marked_[x] = 1;
            marked_list_.push_back(x);
        };
        auto unmark_all = [this] {
            for (VertexId x : marked_list_) {
                marked_[x] = 0;
            }
            marked_list_.clear();
        };

        mark(v);
        bparent_[v] = kNoVertex;
        stack_.assign(1, Frame{v, 0});
        while (!stack_.empty()) {
            Frame& f = stack_.back();
            const VertexId y = f.vertex;
            if (f.next == in_[y].size()) {
                backward_list_.push_back(y);
                stack_.pop_back();
                continue;
            }
            const VertexId x = in_[y][f.next++];
            ++counters_.arc_traversals;
            ++last_backward_arcs_;
            if (x == w) {
                return poison(witness_from_backward(v, w, y));
            }
            if (++arcs >= delta_.value()) {
                aborted = true;
                break;
            }
            if (!marked_[x]) {
                mark(x);
                bparent_[x] = y;
                stack_.push_back(Frame{x, 0});
            }
        }

        bool forward = true;
        if (aborted) {
            ++counters_.backward_aborts;
            stack_.clear();
            raise_level(w, level_[v] + 1);
            in_[w].clear();
            backward_list_.clear();
            unmark_all();
        } else if (level_[w] == level_[v]) {
            forward = false;
        } else {
            raise_level(w, level_[v]);
            in_[w].clear();
        }

        // Search forward from w, pulling lower-level vertices up to k(w).
        if (forward) {
            const Level target = level_[w];
            fparent_[w] = kNoVertex;
            stack_.assign(1, Frame{w, 0});
            while (!stack_.empty()) {
                Frame& f = stack_.back();
                const VertexId x = f.vertex;
                if (f.next == out_[x].size()) {
                    forward_post_.push_back(x);
                    stack_.pop_back();
                    continue;
                }
                const VertexId y = out_[x][f.next++];
                ++counters_.arc_traversals;
                if (y == v || marked_[y]) {
                    return poison(witness_from_forward(v, w, x, y));
                }
                if (level_[y] < target) {
                    raise_level(y, target);
                    in_[y].clear();
                    in_[y].push_back(x);
                    fparent_[y] = x;
                    stack_.push_back(Frame{y, 0});
                } else if (level_[y] == target) {
                    in_[y].push_back(x);
                }
            }
        }

        // Re-index L = B & F from the rear. Forward postorder reversed is F.
        std::vector<VertexId>& order = backward_list_;
        order.insert(order.end(), forward_post_.rbegin(), forward_post_.rend());
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            index_[*it] = --index_floor_;
            order_.move_to_level_front(*it, level_[*it]);
        }
        counters_.reindex_moves += order.size();
        unmark_all();
    }

    // Insert the arc.
    out_[v].push_back(w);
    if (level_[v] == level_[w]) {
        in_[w].push_back(v);
    }
    arcs_.insert(key);
    ++arc_count_;
    delta_.observe(vertex_count(), arc_count_);
    return InsertionOutcome::accepted();
}

} // namespace dyntopo
