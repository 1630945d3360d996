#include "dyntopo/order_list.hpp"

namespace dyntopo {

LevelOrderedList::LevelOrderedList(std::size_t n)
    : next_(n, kNoVertex), prev_(n, kNoVertex), level_(n, 1) {
    ensure_level(1);
    for (std::size_t v = 0; v < n; ++v) {
        if (v > 0) {
            prev_[v] = static_cast<VertexId>(v - 1);
            next_[v - 1] = static_cast<VertexId>(v);
        }
    }
    if (n > 0) {
        head_ = 0;
        tail_ = static_cast<VertexId>(n - 1);
        level_first_[1] = head_;
        level_last_[1] = tail_;
    }
}

void LevelOrderedList::ensure_level(Level level) {
    if (static_cast<std::size_t>(level) >= level_first_.size()) {
        level_first_.resize(static_cast<std::size_t>(level) + 1, kNoVertex);
        level_last_.resize(static_cast<std::size_t>(level) + 1, kNoVertex);
    }
}

void LevelOrderedList::push_front_new(VertexId v) {
    next_.push_back(kNoVertex);
    prev_.push_back(kNoVertex);
    level_.push_back(1);
    ensure_level(1);
    insert_after(kNoVertex, v);
    level_first_[1] = v;
    if (level_last_[1] == kNoVertex) {
        level_last_[1] = v;
    }
}

void LevelOrderedList::unlink(VertexId v) {
    const Level lv = level_[v];
    const VertexId p = prev_[v];
    const VertexId nx = next_[v];
    if (level_first_[lv] == v) {
        level_first_[lv] = (nx != kNoVertex && level_[nx] == lv) ? nx : kNoVertex;
    }
    if (level_last_[lv] == v) {
        level_last_[lv] = (p != kNoVertex && level_[p] == lv) ? p : kNoVertex;
    }
    (p != kNoVertex ? next_[p] : head_) = nx;
    (nx != kNoVertex ? prev_[nx] : tail_) = p;
    prev_[v] = next_[v] = kNoVertex;
}

void LevelOrderedList::insert_after(VertexId pos, VertexId v) {
    const VertexId nx = pos == kNoVertex ? head_ : next_[pos];
    prev_[v] = pos;
    next_[v] = nx;
    (pos != kNoVertex ? next_[pos] : head_) = v;
    (nx != kNoVertex ? prev_[nx] : tail_) = v;
}

void LevelOrderedList::move_to_level_front(VertexId v, Level new_level) {
    const Level old_level = level_[v];
    ensure_level(new_level);
    const VertexId old_prev = prev_[v];
    unlink(v);
    level_[v] = new_level;

    if (level_first_[new_level] != kNoVertex) {
        insert_after(prev_[level_first_[new_level]], v);
    } else {
        // New level is empty: go after the closest non-empty level below it.
        // Everything between old_prev and that level's end is on a level in
        // (old_level, new_level), so the scan stops at old_level.
        VertexId anchor = old_prev;
        for (Level l = new_level - 1; l >= old_level; --l) {
            if (level_last_[l] != kNoVertex) {
                anchor = level_last_[l];
                break;
            }
        }
        insert_after(anchor, v);
        level_last_[new_level] = v;
    }
    level_first_[new_level] = v;
}

std::vector<VertexId> LevelOrderedList::to_vector() const {
    std::vector<VertexId> out;
    out.reserve(size());
    for (VertexId v = head_; v != kNoVertex; v = next_[v]) {
        out.push_back(v);
    }
    return out;
}

} // namespace dyntopo
