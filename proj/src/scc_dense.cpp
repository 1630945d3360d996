#include "dyntopo/scc_dense.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "dyntopo/dense_engine.hpp"

namespace dyntopo {

SccDenseEngine::SccDenseEngine(std::size_t n, std::size_t matrix_dense_limit)
    : sets_(n), level_(n, 1), out_(n), matrix_(n, matrix_dense_limit), components_created_(n),
      parent_(n, kNoVertex), marked_(n, 0) {
    const std::size_t scales = dense_scale_count(n);
    bound_.assign(scales, std::vector<Level>(n, 0));
    count_.assign(scales, std::vector<std::int64_t>(n, 0));
}

void SccDenseEngine::check_vertex(VertexId v) const {
    if (v >= vertex_count()) {
        throw UsageError("unknown vertex " + std::to_string(v));
    }
}

VertexId SccDenseEngine::find(VertexId v) const {
    check_vertex(v);
    return sets_.find(v);
}

Level SccDenseEngine::level(VertexId v) const {
    return level_[find(v)];
}

Level SccDenseEngine::bound(std::size_t scale, VertexId v) const {
    return bound_.at(scale)[find(v)];
}

std::int64_t SccDenseEngine::count(std::size_t scale, VertexId v) const {
    return count_.at(scale)[find(v)];
}

std::vector<std::vector<VertexId>> SccDenseEngine::components_snapshot() const {
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

std::size_t SccDenseEngine::stored_arcs() const {
    std::size_t total = 0;
    for (const auto& h : out_) {
        total += h.size();
    }
    return total;
}

std::size_t SccDenseEngine::watermark_violations() const {
    std::size_t total = 0;
    for (VertexId v = 0; v < vertex_count(); ++v) {
        if (sets_.find(v) == v) {
            total += out_[v].watermark_violations();
        }
    }
    return total;
}

void SccDenseEngine::ensure_scale(std::size_t scale) {
    while (bound_.size() <= scale) {
        bound_.emplace_back(vertex_count(), 0);
        count_.emplace_back(vertex_count(), 0);
    }
}

void SccDenseEngine::mark(VertexId c) {
    if (!marked_[c]) {
        marked_[c] = 1;
        marked_list_.push_back(c);
    }
}

void SccDenseEngine::raise_level(VertexId c, Level to) {
    level_[c] = to;
    ++counters_.level_increases;
}

// Parent marking alone can miss a component whose only route to u runs
// through a non-tree arc seen before its head was marked. Every tail of a
// traversed arc is reachable from z, so marking all tails that reach a
// marked component over traversed arcs yields exactly the new component.
void SccDenseEngine::close_marks() {
    std::vector<std::pair<VertexId, VertexId>> reverse;  // (head, tail) canonicals
    reverse.reserve(traversed_.size());
    for (const Arc& a : traversed_) {
        const VertexId x = sets_.find(a.tail);
        const VertexId y = sets_.find(a.head);
        if (x != y) {
            reverse.emplace_back(y, x);
        }
    }
    std::sort(reverse.begin(), reverse.end());
    for (std::size_t next = 0; next < marked_list_.size(); ++next) {
        const VertexId c = marked_list_[next];
        auto it = std::lower_bound(reverse.begin(), reverse.end(), std::pair{c, VertexId{0}});
        for (; it != reverse.end() && it->first == c; ++it) {
            mark(it->second);
        }
    }
}

void SccDenseEngine::update_traversal(Arc arc) {
    ++counters_.arc_traversals;
    const VertexId x = sets_.find(arc.tail);
    const VertexId y = sets_.find(arc.head);
    if (x == y) {
        return;
    }
    // A second arc between the same two components is dropped; the same arc
    // coming back after its tail was raised is traversed again.
    if (matrix_.test(x, y)) {
        if (claimed_.at(arc_key(x, y)) != arc) {
            return;
        }
    } else {
        matrix_.set(x, y);
        claimed_.emplace(arc_key(x, y), arc);
    }
    if (level_[x] >= level_[y]) {
        raise_level(y, level_[x] + 1);
    } else {
        const auto scale = static_cast<std::size_t>(floor_log2(level_[y] - level_[x]));
        ensure_scale(scale);
        auto& c = count_[scale][y];
        if (++c == (std::int64_t{3} << (scale + 1))) {
            c = 0;
            ++counters_.counter_resets;
            const Level lifted = bound_[scale][y] + (Level{3} << scale);
            if (lifted > level_[y]) {
                raise_level(y, lifted);
            }
            bound_[scale][y] = level_[y] - (Level{2} << scale);
        }
    }
    out_[y].extract_upto(level_[y], [this](Arc a) { update_.push_back(a); });
    out_[x].insert(level_[y], arc);
}

InsertionOutcome SccDenseEngine::insert_arc(VertexId v, VertexId w) {
    check_vertex(v);
    check_vertex(w);
    if (v == w) {
        return InsertionOutcome::no_op();
    }
    ++arc_count_;
    const VertexId u = sets_.find(v);
    const VertexId z = sets_.find(w);
    if (u == z) {
        return InsertionOutcome::no_op();
    }
    if (level_[u] < level_[z]) {
        out_[u].insert(level_[z], Arc{v, w});
        return InsertionOutcome::accepted();
    }
    InsertionOutcome outcome = InsertionOutcome::accepted();

    // Search for cycles.
    const Level top = level_[u];
    search_.assign(1, Arc{v, w});
    traversed_.clear();
    mark(u);
    while (!search_.empty()) {
        const Arc arc = search_.front();
        search_.pop_front();
        traversed_.push_back(arc);
        ++counters_.arc_traversals;
        const VertexId x = sets_.find(arc.tail);
        const VertexId y = sets_.find(arc.head);
        if (marked_[y]) {
            for (VertexId t = x; t != kNoVertex && !marked_[t]; t = parent_[t]) {
                mark(t);
            }
        }
        if (level_[y] < top) {
            raise_level(y, top);
            parent_[y] = x;
            parent_touched_.push_back(y);
            out_[y].extract_upto(top, [this](Arc a) { search_.push_back(a); });
        }
    }

    // Form the component.
    if (marked_[z]) {
        close_marks();
        std::vector<VertexId> merged = marked_list_;
        std::sort(merged.begin(), merged.end());
        for (VertexId c : merged) {
            if (c == z) {
                continue;
            }
            sets_.link(z, c);
            if (out_[z].size() < out_[c].size()) {
                std::swap(out_[z], out_[c]);
            }
            out_[z].meld(std::move(out_[c]));
        }
        ++components_created_;
        outcome = InsertionOutcome::merge(std::move(merged), z);
    }
    for (VertexId c : marked_list_) {
        marked_[c] = 0;
    }
    marked_list_.clear();
    for (VertexId c : parent_touched_) {
        parent_[c] = kNoVertex;
    }
    parent_touched_.clear();

    // Update levels, bounds and counts.
    update_.assign(traversed_.begin(), traversed_.end());
    while (!update_.empty()) {
        const Arc arc = update_.front();
        update_.pop_front();
        update_traversal(arc);
    }

    matrix_.clear();
    claimed_.clear();
    return outcome;
}

} // namespace dyntopo
