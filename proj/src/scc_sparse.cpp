#include "dyntopo/scc_sparse.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace dyntopo {

SccSparseEngine::SccSparseEngine(std::size_t n, std::optional<std::size_t> m_hint,
                                 std::size_t matrix_dense_limit)
    : sets_(n), out_(n), in_(n), level_(n, 1), index_(n),
      index_floor_(-static_cast<Index>(n)), delta_(n, m_hint), matrix_(n, matrix_dense_limit),
      components_created_(n), parent_(n, kNoVertex), marked_(n, 0), in_backward_(n, 0) {
    for (std::size_t v = 0; v < n; ++v) {
        index_[v] = static_cast<Index>(v) - static_cast<Index>(n);
    }
}

void SccSparseEngine::check_vertex(VertexId v) const {
    if (v >= vertex_count()) {
        throw UsageError("unknown vertex " + std::to_string(v));
    }
}

VertexId SccSparseEngine::find(VertexId v) const {
    check_vertex(v);
    return sets_.find(v);
}

std::pair<Level, Index> SccSparseEngine::order_key(VertexId v) const {
    const VertexId c = find(v);
    return {level_[c], index_[c]};
}

std::vector<std::vector<VertexId>> SccSparseEngine::components_snapshot() const {
    std::map<VertexId, std::vector<VertexId>> groups;
    for (VertexId v = 0; v < vertex_count(); ++v) {
        groups[sets_.find(v)].push_back(v);
    }
    std::vector<std::vector<VertexId>> out;
    out.reserve(groups.size());
    for (auto& [canonical, members] : groups) {
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

void SccSparseEngine::raise_level(VertexId c, Level to) {
    level_[c] = to;
    max_level_ = std::max(max_level_, to);
    ++counters_.level_increases;
}

void SccSparseEngine::mark(VertexId c) {
    if (!marked_[c]) {
        marked_[c] = 1;
        marked_list_.push_back(c);
    }
}

void SccSparseEngine::set_parent(VertexId c, VertexId p) {
    if (parent_[c] == kNoVertex) {
        parent_touched_.push_back(c);
    }
    parent_[c] = p;
}

// Marks `from` and its search-tree ancestors until `stop` has been marked or
// an already marked vertex is reached.
void SccSparseEngine::mark_path(VertexId from, VertexId stop) {
    VertexId t = from;
    while (t != kNoVertex && !marked_[t]) {
        mark(t);
        if (t == stop || parent_[t] == t) {
            break;
        }
        t = parent_[t];
    }
}

// Tree-path marking misses a vertex of B whose only route from the new
// component runs through a non-tree arc. B lists tails before heads, so one
// pass marks every B vertex with a live same-level arc from a marked one.
void SccSparseEngine::close_backward_marks() {
    for (VertexId t : backward_list_) {
        if (marked_[t]) {
            continue;
        }
        for (ArcId id : in_[t]) {
            const StoredArc& arc = arcs_[id];
            if (!arc.removed && marked_[sets_.find(arc.tail)]) {
                mark(t);
                break;
            }
        }
    }
}

void SccSparseEngine::drop_removed(std::vector<ArcId>& list) {
    std::erase_if(list, [this](ArcId a) { return arcs_[a].removed; });
}

void SccSparseEngine::absorb(std::vector<ArcId>& into, std::vector<ArcId>& from) {
    if (into.size() < from.size()) {
        into.swap(from);
    }
    into.insert(into.end(), from.begin(), from.end());
    from.clear();
    from.shrink_to_fit();
}

InsertionOutcome SccSparseEngine::insert_arc(VertexId v, VertexId w) {
    check_vertex(v);
    check_vertex(w);
    if (v == w) {
        return InsertionOutcome::no_op();
    }
    ++arc_count_;
    delta_.observe(vertex_count(), arc_count_);
    const VertexId u = sets_.find(v);
    const VertexId z = sets_.find(w);
    if (u == z) {
        return InsertionOutcome::no_op();
    }
    last_backward_arcs_ = 0;
    InsertionOutcome outcome = InsertionOutcome::accepted();

    // Test order.
    if (std::pair{level_[u], index_[u]} > std::pair{level_[z], index_[z]}) {
        // Search backward from u over same-level in-arcs.
        backward_list_.clear();
        forward_post_.clear();
        std::size_t arcs = 0;
        bool aborted = false;
        set_parent(u, u);
        set_parent(z, z);
        stack_.assign(1, Frame{u, 0});
        while (!stack_.empty()) {
            Frame& f = stack_.back();
            const VertexId t = f.vertex;
            if (f.next == in_[t].size()) {
                drop_removed(in_[t]);
                backward_list_.push_back(t);
                in_backward_[t] = 1;
                stack_.pop_back();
                continue;
            }
            StoredArc& arc = arcs_[in_[t][f.next++]];
            if (arc.removed) {
                continue;
            }
            ++counters_.arc_traversals;
            const VertexId fx = sets_.find(arc.tail);
            const VertexId fy = sets_.find(arc.head);
            if (fx == fy || matrix_.test(fx, fy)) {
                arc.removed = true;
                continue;
            }
            matrix_.set(fx, fy);
            ++last_backward_arcs_;
            if (++arcs >= delta_.value()) {
                aborted = true;
                break;
            }
            if (fx == z) {
                mark(z);
            }
            if (marked_[fx]) {
                mark_path(fy, u);
            }
            if (parent_[fx] == kNoVertex) {
                set_parent(fx, fy);
                stack_.push_back(Frame{fx, 0});
            }
        }

        bool forward = true;
        if (aborted) {
            ++counters_.backward_aborts;
            stack_.clear();
            raise_level(z, level_[u] + 1);
            in_[z].clear();
            for (VertexId b : backward_list_) {
                in_backward_[b] = 0;
            }
            backward_list_.clear();
            for (VertexId c : marked_list_) {
                marked_[c] = 0;
            }
            marked_list_.clear();
            for (VertexId c : parent_touched_) {
                if (c != z) {
                    parent_[c] = kNoVertex;
                }
            }
            parent_touched_.assign(1, z);
            matrix_.clear();
        } else if (level_[z] == level_[u]) {
            forward = false;
        } else {
            raise_level(z, level_[u]);
            in_[z].clear();
        }

        // Search forward from z, pulling lower components up to k(z).
        if (forward) {
            const Level target = level_[z];
            stack_.assign(1, Frame{z, 0});
            while (!stack_.empty()) {
                Frame& f = stack_.back();
                const VertexId t = f.vertex;
                if (f.next == out_[t].size()) {
                    drop_removed(out_[t]);
                    forward_post_.push_back(t);
                    stack_.pop_back();
                    continue;
                }
                const ArcId id = out_[t][f.next++];
                StoredArc& arc = arcs_[id];
                if (arc.removed) {
                    continue;
                }
                ++counters_.arc_traversals;
                const VertexId fx = sets_.find(arc.tail);
                const VertexId fy = sets_.find(arc.head);
                if (fx == fy) {
                    arc.removed = true;
                    continue;
                }
                if (fy == u || in_backward_[fy]) {
                    mark_path(fy, u);
                }
                if (marked_[fy]) {
                    mark_path(fx, z);
                }
                if (level_[fy] < target) {
                    set_parent(fy, fx);
                    raise_level(fy, target);
                    in_[fy].clear();
                    in_[fy].push_back(id);
                    stack_.push_back(Frame{fy, 0});
                } else if (level_[fy] == target) {
                    in_[fy].push_back(id);
                }
            }
        }

        // Form the component. L = B & F; the merged component keeps z's slot.
        std::vector<VertexId>& order = backward_list_;
        if (marked_[z]) {
            close_backward_marks();
        }
        order.insert(order.end(), forward_post_.rbegin(), forward_post_.rend());
        if (marked_[z]) {
            std::vector<VertexId> merged = marked_list_;
            std::sort(merged.begin(), merged.end());
            for (VertexId c : merged) {
                if (c == z) {
                    continue;
                }
                sets_.link(z, c);
                absorb(in_[z], in_[c]);
                absorb(out_[z], out_[c]);
            }
            ++components_created_;
            outcome = InsertionOutcome::merge(std::move(merged), z);
            std::erase_if(order, [this, z](VertexId c) { return c != z && marked_[c]; });
        }
        for (VertexId c : marked_list_) {
            marked_[c] = 0;
        }
        marked_list_.clear();

        // Re-index survivors from the rear.
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            index_[*it] = --index_floor_;
        }
        counters_.reindex_moves += order.size();

        for (VertexId b : backward_list_) {
            in_backward_[b] = 0;
        }
        for (VertexId c : parent_touched_) {
            parent_[c] = kNoVertex;
        }
        parent_touched_.clear();
        matrix_.clear();
    }

    // Add the arc if it still joins two components.
    const VertexId fu = sets_.find(v);
    const VertexId fz = sets_.find(w);
    if (fu != fz) {
        const auto id = static_cast<ArcId>(arcs_.size());
        arcs_.push_back(StoredArc{v, w, false});
        out_[fu].push_back(id);
        if (level_[fu] == level_[fz]) {
            in_[fz].push_back(id);
        }
    }
    return outcome;
}

} // namespace dyntopo
