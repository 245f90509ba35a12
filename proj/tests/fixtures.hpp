#ifndef PCW_TESTS_FIXTURES_HPP
#define PCW_TESTS_FIXTURES_HPP

#include <random>
#include <vector>

#include "pcw/gf2.hpp"
#include "pcw/tanner.hpp"

namespace fixtures {

// 6x7 parity-check matrix whose normal graph is a dumbbell: two triangles
// (edges 1-3 on checks 1-3, edges 5-7 on checks 4-6) joined by bridge edge 4
// between checks 2 and 4.  Every column has weight 2, so this is a cycle
// code; its four codewords are the empty set, either triangle, and both.
inline pcw::BinaryMatrix dumbbell() {
    return pcw::BinaryMatrix{{1, 1, 0, 0, 0, 0, 0},
                             {0, 1, 1, 1, 0, 0, 0},
                             {1, 0, 1, 0, 0, 0, 0},
                             {0, 0, 0, 1, 1, 0, 1},
                             {0, 0, 0, 0, 1, 1, 0},
                             {0, 0, 0, 0, 0, 1, 1}};
}

inline std::vector<pcw::BitVector> dumbbell_codewords() {
    return {pcw::bitvector_from_string("0000000"), pcw::bitvector_from_string("0000111"),
            pcw::bitvector_from_string("1110000"), pcw::bitvector_from_string("1110111")};
}

inline std::uint64_t pick(std::mt19937_64& rng, std::uint64_t n) {
    return rng() % n; // deterministic; slight bias is irrelevant for tests
}

// Random matrix with column weights drawn from [wmin, wmax] (clamped to r),
// rows distinct per column.  No zero columns.
inline pcw::BinaryMatrix random_ldpc(std::mt19937_64& rng, int r, int n, int wmin = 2,
                                     int wmax = 3) {
    pcw::BinaryMatrix h(r, n);
    for (int i = 0; i < n; ++i) {
        int w = wmin + static_cast<int>(pick(rng, wmax - wmin + 1));
        if (w > r) w = r;
        std::vector<int> rows(r);
        for (int j = 0; j < r; ++j) rows[j] = j;
        for (int k = 0; k < w; ++k) {
            int j = k + static_cast<int>(pick(rng, rows.size() - k));
            std::swap(rows[k], rows[j]);
            h.set(rows[k], i, 1);
        }
    }
    return h;
}

// Connected loop-free multigraph: a random spanning tree plus random extra
// edges, possibly parallel.
inline pcw::MultiGraph random_connected_multigraph(std::mt19937_64& rng, int n_vertices,
                                                   int n_edges) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n_vertices; ++v)
        edges.emplace_back(static_cast<int>(pick(rng, v)), v);
    while (static_cast<int>(edges.size()) < n_edges) {
        int a = static_cast<int>(pick(rng, n_vertices));
        int b = static_cast<int>(pick(rng, n_vertices));
        if (a == b) continue;
        edges.emplace_back(a, b);
    }
    return pcw::MultiGraph::make(n_vertices, std::move(edges));
}

// Parity-check matrix of the cycle code on g: the vertex-edge incidence
// matrix, one weight-2 column per edge.
inline pcw::BinaryMatrix incidence_matrix(const pcw::MultiGraph& g) {
    pcw::BinaryMatrix h(g.n_vertices, static_cast<int>(g.edges.size()));
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        h.set(g.edges[e].first, static_cast<int>(e), 1);
        h.set(g.edges[e].second, static_cast<int>(e), 1);
    }
    return h;
}

// Random bit-even matrix: duplicate the checks of a random one.
inline pcw::BinaryMatrix random_bit_even(std::mt19937_64& rng, int r, int n) {
    return pcw::duplicate_checks(random_ldpc(rng, r, n));
}

} // namespace fixtures

#endif
