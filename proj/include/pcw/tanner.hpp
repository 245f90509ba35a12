#ifndef PCW_TANNER_HPP
#define PCW_TANNER_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "pcw/gf2.hpp"

namespace pcw {

// Bipartite graph of a parity-check matrix: one bit node per column, one
// check node per row, an edge wherever the entry is 1.  Indices are 0-based
// internally; serialized forms are 1-based.
struct TannerGraph {
    int n_bits = 0;
    int n_checks = 0;
    // (bit, check) pairs, sorted lexicographically, no duplicates.
    std::vector<std::pair<int, int>> edges;

    std::vector<std::vector<int>> bit_adj;   // checks at each bit
    std::vector<std::vector<int>> check_adj; // bits at each check

    int bit_degree(int i) const { return static_cast<int>(bit_adj[i].size()); }
    int check_degree(int j) const { return static_cast<int>(check_adj[j].size()); }
    // Position of edge (bit,check) in `edges`, or -1.
    int edge_index(int bit, int check) const;
};

TannerGraph from_parity_matrix(const BinaryMatrix& h);
BinaryMatrix to_parity_matrix(const TannerGraph& t);

// True when every bit node has even degree.
bool is_bit_even(const TannerGraph& t);

// Each row of h repeated twice, consecutively.  Preserves the code and the
// fundamental cone while making every bit degree even.
BinaryMatrix duplicate_checks(const BinaryMatrix& h);

// Undirected multigraph without loops.  Parallel edges are distinct entries
// of `edges`; backtracking below is about edge identity, not endpoints.
struct MultiGraph {
    int n_vertices = 0;
    std::vector<std::pair<int, int>> edges; // endpoints, loops rejected

    static MultiGraph make(int n_vertices, std::vector<std::pair<int, int>> edges);
    int degree(int v) const;
    bool connected() const; // edgeless single vertex counts as connected
};

// Normal graph of a cycle code: one vertex per check, and bit i of degree 2
// becomes edge i joining its two checks.  Throws DomainError naming the first
// bit whose degree is not 2.
MultiGraph normal_graph(const TannerGraph& t);

// Walk through a graph, stored as a sequence of edge indices.
struct EdgeWalk {
    enum class Kind { path, cycle };
    std::vector<int> edges;
    Kind kind = Kind::path;
};

// A walk is valid when consecutive edges share endpoints under a consistent
// orientation (and it closes up if kind == cycle).
bool is_valid_walk(const MultiGraph& g, const EdgeWalk& w);
// No two consecutive edges (cyclically, for cycles) are the same edge.
bool is_backtrackless(const EdgeWalk& w);
// First and last edges differ (cycles only; paths are vacuously tailless).
bool is_tailless(const EdgeWalk& w);

inline constexpr int kDefaultSimpleCycleEdgeBound = 20;

// Characteristic vectors (length |E|) of all simple cycles, deduplicated up
// to rotation and reversal, in lexicographic order.  Exhaustive over edge
// subsets, hence the bound on |E|.
std::vector<BitVector> simple_cycle_characteristic_vectors(
    const MultiGraph& g, int max_edges = kDefaultSimpleCycleEdgeBound);

inline constexpr int kDefaultWalkEdgeBound = 16;

// Primitive backtrackless tailless closed walks with at most max_len edges,
// one representative per cyclic-shift equivalence class.
std::vector<EdgeWalk> primitive_bt_cycles(const MultiGraph& g, int max_len);

// Edge-usage vectors of all finite unions of backtrackless tailless closed
// walks with at most max_total_edges edges in total, each mapped to the
// number of distinct unions realizing it (multisets of primitive classes).
// The empty union contributes usage 0 with multiplicity 1.
std::map<std::vector<int>, unsigned long long> backtrackless_tailless_closed_walks(
    const MultiGraph& g, int max_total_edges, int hard_cap = kDefaultWalkEdgeBound);

// Splits the subgraph of T induced by the support of codeword c (bits with
// c_i = 1, all their edges, and the touched checks) into edge-disjoint
// cycles.  Walk entries are indices into t.edges.  Throws DomainError if T is
// not bit-even or c is not a codeword.
std::vector<EdgeWalk> euler_cycle_decomposition(const TannerGraph& t, const BitVector& c);

} // namespace pcw

#endif
