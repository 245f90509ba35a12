#ifndef PCW_ZETA_HPP
#define PCW_ZETA_HPP

#include <cstdint>
#include <vector>

#include "pcw/gf2.hpp"
#include "pcw/poly.hpp"
#include "pcw/tanner.hpp"

namespace pcw {

// Directed double cover of the edge set: slot e runs edge e from its lower
// to its higher endpoint, slot e + |E| the reverse.  feeds(s,t) is 1 when
// slot s can be followed by slot t without backtracking, i.e. head(s) ==
// tail(t) and t is not the reversal of s (same-edge check, so a parallel
// edge back is allowed).
struct DirectedEdgeMatrix {
    int n_edges = 0;
    std::vector<int> tail, head; // per slot
    std::vector<std::uint8_t> adj; // row-major, slots() x slots()

    int slots() const { return 2 * n_edges; }
    int var(int slot) const { return slot % n_edges; } // u-variable of a slot
    int reverse(int slot) const { return (slot + n_edges) % (2 * n_edges); }
    std::uint8_t feeds(int s, int t) const {
        return adj[static_cast<std::size_t>(s) * slots() + t];
    }
};

DirectedEdgeMatrix directed_edge_matrix(const MultiGraph& g);
// Same, with edge e reversed when flip[e] is set (the zeta function must not
// care; exercised by tests).
DirectedEdgeMatrix directed_edge_matrix(const MultiGraph& g,
                                        const std::vector<std::uint8_t>& flip);

inline constexpr int kDefaultZetaSlotBound = 24;

struct ZetaOptions {
    // Largest allowed directed edge matrix (2|E|); raise explicitly, or via
    // --det-bound on the command line.
    int max_slots = kDefaultZetaSlotBound;
    // Discard determinant monomials above this total degree (-1: keep all).
    // Sound whenever only a series expansion to the same degree is consumed.
    int truncate_degree = -1;
    // Which of the two equal determinant forms to evaluate.
    enum class Form { variables_on_rows, variables_on_columns };
    Form form = Form::variables_on_rows;
    // Evaluate both forms and insist they agree (rationality cross-check).
#ifdef NDEBUG
    bool check_dual = false;
#else
    bool check_dual = true;
#endif
};

// Reciprocal of the edge zeta function: det(I - UM) with M the directed edge
// matrix and U the diagonal of edge variables, one u per undirected edge.
SparsePolynomial zeta_reciprocal(const MultiGraph& g, const ZetaOptions& opts = {});

// Exponent vectors of the monomials with nonzero coefficient in the zeta
// series of the normal graph, up to total degree `degree`: exactly the
// unscaled pseudo-codewords of a cycle code in that range.  Requires every
// column weight of h to be 2.
std::vector<ExponentVector> enumerate_cycle_pcw(const BinaryMatrix& h, int degree,
                                                const ZetaOptions& opts = {});

// Pseudo-codeword enumeration for bit-even codes that are not cycle codes:
// zeta of the Tanner graph viewed as a plain graph, restricted to monomials
// constant on each bit's edge block, projected to one exponent per bit.
// `degree` bounds the total degree over all Tanner-edge variables.
std::vector<ExponentVector> bit_even_pcw(const BinaryMatrix& h, int degree,
                                         const ZetaOptions& opts = {});

// The Tanner graph as an ordinary multigraph: bit node i becomes vertex i,
// check node j becomes vertex n_bits + j, edges keep their order.
MultiGraph as_plain_graph(const TannerGraph& t);

} // namespace pcw

#endif
