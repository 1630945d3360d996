#include "dyntopo/pair_matrix.hpp"

namespace dyntopo {

PairMatrix::PairMatrix(std::size_t n, std::size_t dense_limit)
    : n_(n), packed_(n <= dense_limit) {
    if (packed_) {
        bits_.assign((n * n + 63) / 64, 0);
    }
}

bool PairMatrix::test(VertexId a, VertexId b) const {
    if (packed_) {
        const std::size_t pos = static_cast<std::size_t>(a) * n_ + b;
        return (bits_[pos / 64] >> (pos % 64)) & 1U;
    }
    return pairs_.contains(arc_key(a, b));
}

void PairMatrix::set(VertexId a, VertexId b) {
    if (test(a, b)) {
        return;
    }
    if (packed_) {
        const std::size_t pos = static_cast<std::size_t>(a) * n_ + b;
        bits_[pos / 64] |= std::uint64_t{1} << (pos % 64);
        journal_.push_back(pos);
    } else {
        pairs_.insert(arc_key(a, b));
        journal_.push_back(arc_key(a, b));
    }
}

void PairMatrix::clear() {
    if (packed_) {
        for (std::uint64_t pos : journal_) {
            bits_[pos / 64] &= ~(std::uint64_t{1} << (pos % 64));
        }
    } else {
        pairs_.clear();
    }
    journal_.clear();
}

} // namespace dyntopo
