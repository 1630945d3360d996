#ifndef DYNTOPO_WORKLOADS_HPP
#define DYNTOPO_WORKLOADS_HPP

#include <cstdint>
#include <vector>

#include "dyntopo/graph_core.hpp"

namespace dyntopo {

/// SplitMix64. Fixed arithmetic, so a seed yields the same sequence everywhere.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    /// Uniform in [0, bound) by rejection, bound > 0.
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

/// Layout of the sparse adversary, for tests and benchmarks.
struct SparseAdversaryShape {
    std::size_t main_clique = 0;    // r1
    std::size_t anchor_size = 0;    // r2
    std::size_t anchor_count = 0;   // k
    std::size_t delta = 0;          // the budget the anchor cliques are sized for
};

/// floor(sqrt(m) / 2).
std::size_t sparse_main_clique_size(std::size_t m);
SparseAdversaryShape sparse_adversary_shape(std::size_t n, std::size_t m);

/// Requires n >= 64 and 2n <= m <= n(n-1)/2.
ArcStream gen_sparse_adversary(std::size_t n, std::size_t m);

/// Vertex count of the dense adversary: chain, counter sets, targets.
std::size_t dense_adversary_vertices(std::size_t r);

/// Requires r a power of two, r >= 8. Vertices: u_1..u_r are 0..r-1, then
/// S_0, S_1, ... in order, then T.
ArcStream gen_dense_adversary(std::size_t r);

/// m distinct arcs, each forward in a random permutation. m <= n(n-1)/2.
ArcStream gen_random_dag_stream(std::size_t n, std::size_t m, std::uint64_t seed);

/// m distinct loop-free arcs in random order. m <= n(n-1).
ArcStream gen_random_stream(std::size_t n, std::size_t m, std::uint64_t seed);

} // namespace dyntopo

#endif // DYNTOPO_WORKLOADS_HPP
