#ifndef DYNTOPO_PAIR_MATRIX_HPP
#define DYNTOPO_PAIR_MATRIX_HPP

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "dyntopo/graph_core.hpp"

namespace dyntopo {

/// One bit per ordered vertex pair, with a journal of set positions so that
/// clear() costs O(bits set) rather than O(n^2).
///
/// Packed n*n bitset up to `dense_limit` vertices, hashed pair set above.
class PairMatrix {
public:
    static constexpr std::size_t kDefaultDenseLimit = 8192;

    explicit PairMatrix(std::size_t n, std::size_t dense_limit = kDefaultDenseLimit);

    bool test(VertexId a, VertexId b) const;
    void set(VertexId a, VertexId b);
    void clear();

    std::size_t set_count() const { return journal_.size(); }
    bool hashed() const { return !packed_; }

private:
    std::size_t n_;
    bool packed_;
    std::vector<std::uint64_t> bits_;
    std::unordered_set<std::uint64_t> pairs_;
    std::vector<std::uint64_t> journal_;
};

} // namespace dyntopo

#endif // DYNTOPO_PAIR_MATRIX_HPP
