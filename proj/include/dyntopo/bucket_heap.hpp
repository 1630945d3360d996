#ifndef DYNTOPO_BUCKET_HEAP_HPP
#define DYNTOPO_BUCKET_HEAP_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dyntopo/graph_core.hpp"

namespace dyntopo {

/// Monotone priority buckets for the out-arcs of one vertex (or component).
///
/// Buckets are keyed by integer priority and stored sparsely, so the heap
/// never needs to know the vertex count. Extraction drains every bucket up to
/// a threshold. The owner guarantees that later insertions use priorities
/// above every threshold passed so far; an insertion that does not is still
/// stored but counted in watermark_violations().
template <class Payload>
class BucketHeap {
public:
    void insert(Level priority, Payload item) {
        if (priority <= drained_through_) {
            ++watermark_violations_;
        }
        buckets_[priority].push_back(std::move(item));
        ++size_;
    }

    /// Removes every item with priority <= threshold, passing each to sink in
    /// (priority, insertion) order.
    template <class Sink>
    void extract_upto(Level threshold, Sink&& sink) {
        drained_through_ = std::max(drained_through_, threshold);
        auto it = buckets_.begin();
        while (it != buckets_.end() && it->first <= threshold) {
            for (auto& item : it->second) {
                sink(std::move(item));
            }
            size_ -= it->second.size();
            it = buckets_.erase(it);
        }
    }

    std::vector<Payload> extract_upto(Level threshold) {
        std::vector<Payload> out;
        extract_upto(threshold, [&out](Payload&& p) { out.push_back(std::move(p)); });
        return out;
    }

    /// Smallest priority of a non-empty bucket.
    std::optional<Level> low() const {
        if (buckets_.empty()) {
            return std::nullopt;
        }
        return buckets_.begin()->first;
    }

    /// Moves every item of `other` into this heap; `other` is left empty.
    /// The caller passes the smaller heap as `other`.
    void meld(BucketHeap&& other) {
        for (auto& [priority, items] : other.buckets_) {
            auto& dst = buckets_[priority];
            if (dst.empty()) {
                dst = std::move(items);
            } else {
                dst.insert(dst.end(), std::make_move_iterator(items.begin()),
                           std::make_move_iterator(items.end()));
            }
        }
        size_ += other.size_;
        drained_through_ = std::max(drained_through_, other.drained_through_);
        watermark_violations_ += other.watermark_violations_;
        other.buckets_.clear();
        other.size_ = 0;
    }

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }
    std::size_t watermark_violations() const { return watermark_violations_; }

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (const auto& [priority, items] : buckets_) {
            for (const auto& item : items) {
                fn(priority, item);
            }
        }
    }

private:
    std::map<Level, std::vector<Payload>> buckets_;
    std::size_t size_ = 0;
    Level drained_through_ = 0;
    std::size_t watermark_violations_ = 0;
};

} // namespace dyntopo

#endif // DYNTOPO_BUCKET_HEAP_HPP
