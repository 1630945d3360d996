#include "dyntopo/workloads.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <unordered_set>

#include "dyntopo/sparse_engine.hpp"

namespace dyntopo {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    if (bound == 0) {
        throw UsageError("empty range");
    }
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t x = next();
        if (x >= threshold) {
            return x % bound;
        }
    }
}

namespace {

template <class T>
void shuffle(std::vector<T>& items, SplitMix64& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::swap(items[i - 1], items[rng.below(i)]);
    }
}

void add_clique(std::vector<Arc>& out, std::size_t first, std::size_t size) {
    for (std::size_t i = first; i < first + size; ++i) {
        for (std::size_t j = i + 1; j < first + size; ++j) {
            out.push_back(Arc{static_cast<VertexId>(i), static_cast<VertexId>(j)});
        }
    }
}

std::size_t clique_arcs(std::size_t r) {
    return r * (r - 1) / 2;
}

// Samples m distinct pairs from a population of `total`, decoded by `pair`.
template <class Decode>
std::vector<Arc> sample_pairs(std::uint64_t total, std::size_t m, SplitMix64& rng, Decode pair) {
    std::vector<Arc> out;
    out.reserve(m);
    if (2 * static_cast<std::uint64_t>(m) <= total) {
        std::unordered_set<std::uint64_t> seen;
        seen.reserve(2 * m);
        while (out.size() < m) {
            const std::uint64_t code = rng.below(total);
            if (seen.insert(code).second) {
                out.push_back(pair(code));
            }
        }
        return out;
    }
    std::vector<std::uint64_t> codes(total);
    std::iota(codes.begin(), codes.end(), 0);
    for (std::size_t i = 0; i < m; ++i) {
        std::swap(codes[i], codes[i + rng.below(total - i)]);
        out.push_back(pair(codes[i]));
    }
    return out;
}

} // namespace

std::size_t sparse_main_clique_size(std::size_t m) {
    const std::size_t root = ceil_sqrt(m);
    return (root * root == m ? root : root - 1) / 2;
}

SparseAdversaryShape sparse_adversary_shape(std::size_t n, std::size_t m) {
    if (n < 64) {
        throw UsageError("sparse adversary needs n >= 64");
    }
    if (m < 2 * n || m > n * (n - 1) / 2) {
        throw UsageError("sparse adversary needs 2n <= m <= n(n-1)/2");
    }
    SparseAdversaryShape s;
    s.delta = sparse_delta(n, m);
    s.main_clique = sparse_main_clique_size(m);
    s.anchor_size = ceil_sqrt(2 * s.delta) + 1;
    const std::size_t main_arcs = clique_arcs(s.main_clique);
    const std::size_t anchor_arcs = clique_arcs(s.anchor_size);
    std::size_t k = (n - s.main_clique) / s.anchor_size;
    if (main_arcs + k * anchor_arcs > m / 2) {
        k = main_arcs > m / 2 ? 0 : (m / 2 - main_arcs) / anchor_arcs;
    }
    auto total = [&](std::size_t kk) {
        const std::size_t fans = kk > 0 ? (kk - 1) * s.anchor_size : 0;
        const std::size_t finals = kk > 2 ? kk - 2 : 0;
        return main_arcs + kk * anchor_arcs + fans + finals;
    };
    while (k > 0 && total(k) > m) {
        --k;
    }
    s.anchor_count = k;
    return s;
}

ArcStream gen_sparse_adversary(std::size_t n, std::size_t m) {
    const SparseAdversaryShape s = sparse_adversary_shape(n, m);
    ArcStream stream;
    stream.declared_n = n;
    auto& ev = stream.events;
    add_clique(ev, 0, s.main_clique);
    auto anchor_first = [&](std::size_t j) {  // j is 1-based
        return s.main_clique + (j - 1) * s.anchor_size;
    };
    for (std::size_t j = 1; j <= s.anchor_count; ++j) {
        add_clique(ev, anchor_first(j), s.anchor_size);
    }
    for (std::size_t j = s.anchor_count; j-- > 1;) {
        const auto tail = static_cast<VertexId>(anchor_first(j + 1) + s.anchor_size - 1);
        for (std::size_t x = anchor_first(j) + s.anchor_size; x-- > anchor_first(j);) {
            ev.push_back(Arc{tail, static_cast<VertexId>(x)});
        }
    }
    for (std::size_t j = s.anchor_count >= 2 ? s.anchor_count - 2 : 0; j >= 1; --j) {
        ev.push_back(Arc{static_cast<VertexId>(anchor_first(j)), 0});
    }
    stream.declared_m = ev.size();
    return stream;
}

std::size_t dense_adversary_vertices(std::size_t r) {
    if (r < 8 || !std::has_single_bit(r)) {
        throw UsageError("dense adversary needs r a power of two, r >= 8");
    }
    return 5 * r - 6;
}

ArcStream gen_dense_adversary(std::size_t r) {
    const std::size_t n = dense_adversary_vertices(r);
    const int top_scale = std::bit_width(r) - 1 - 2;  // lg r - 2
    auto u = [](std::size_t i) { return static_cast<VertexId>(i - 1); };  // 1-based
    std::vector<std::size_t> set_first;
    std::size_t next = r;
    for (int j = 0; j <= top_scale; ++j) {
        set_first.push_back(next);
        next += std::size_t{3} << (j + 1);
    }
    const std::size_t t_first = next;

    ArcStream stream;
    stream.declared_n = n;
    auto& ev = stream.events;
    for (std::size_t i = 1; i < r; ++i) {
        ev.push_back(Arc{u(i), u(i + 1)});
    }
    for (std::size_t i = 2; i <= r; ++i) {
        for (std::size_t t = t_first; t < t_first + r; ++t) {
            ev.push_back(Arc{u(i - 1), static_cast<VertexId>(t)});
        }
        for (int j = 0; j <= top_scale; ++j) {
            const std::size_t step = std::size_t{1} << j;
            if (i % step != 0 || i / step < 3) {
                continue;
            }
            const std::size_t first = set_first[j];
            const std::size_t size = std::size_t{3} << (j + 1);
            if (i / step == 3) {
                for (std::size_t s = first; s < first + size; ++s) {
                    ev.push_back(Arc{u(2 * step - 1), static_cast<VertexId>(s)});
                }
                for (std::size_t s = first; s < first + size; ++s) {
                    for (std::size_t t = t_first; t < t_first + r; ++t) {
                        ev.push_back(Arc{static_cast<VertexId>(s), static_cast<VertexId>(t)});
                    }
                }
            } else {
                for (std::size_t s = first; s < first + size; ++s) {
                    ev.push_back(Arc{u(i - step - 1), static_cast<VertexId>(s)});
                }
            }
        }
    }
    stream.declared_m = ev.size();
    return stream;
}

ArcStream gen_random_dag_stream(std::size_t n, std::size_t m, std::uint64_t seed) {
    const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n > 0 ? n - 1 : 0) / 2;
    if (m > pairs) {
        throw UsageError("random DAG needs m <= n(n-1)/2");
    }
    SplitMix64 rng(seed);
    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    shuffle(perm, rng);
    // Pair code c enumerates positions a < b row by row: c = b(b-1)/2 + a.
    auto decode = [&perm](std::uint64_t c) {
        std::uint64_t b = ceil_sqrt(2 * c + 2);
        while (b * (b - 1) / 2 > c) {
            --b;
        }
        while ((b + 1) * b / 2 <= c) {
            ++b;
        }
        const std::uint64_t a = c - b * (b - 1) / 2;
        return Arc{perm[a], perm[b]};
    };
    ArcStream stream;
    stream.declared_n = n;
    stream.events = sample_pairs(pairs, m, rng, decode);
    stream.declared_m = m;
    return stream;
}

ArcStream gen_random_stream(std::size_t n, std::size_t m, std::uint64_t seed) {
    const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n > 0 ? n - 1 : 0);
    if (m > pairs) {
        throw UsageError("random stream needs m <= n(n-1)");
    }
    SplitMix64 rng(seed);
    // Code c = tail * (n-1) + offset, head skips the tail.
    auto decode = [n](std::uint64_t c) {
        const auto tail = static_cast<VertexId>(c / (n - 1));
        auto head = static_cast<VertexId>(c % (n - 1));
        if (head >= tail) {
            ++head;
        }
        return Arc{tail, head};
    };
    ArcStream stream;
    stream.declared_n = n;
    stream.events = sample_pairs(pairs, m, rng, decode);
    stream.declared_m = m;
    return stream;
}

} // namespace dyntopo
