#ifndef PCW_COVERS_HPP
#define PCW_COVERS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pcw/gf2.hpp"
#include "pcw/rational.hpp"
#include "pcw/tanner.hpp"

namespace pcw {

// Identifier recorded wherever seeded randomness is used.
inline constexpr const char* kRngAlgorithm = "mt19937_64/fisher-yates";

// An M-cover of a Tanner graph: one permutation of {1..M} per base edge.
// perms[e][l-1] = k (0-based storage of 1-based fibers) means check fiber
// (j,l) of edge e = (bit i, check j) connects to bit fiber (i,k).
struct CoverSpec {
    TannerGraph base;
    int m = 1;
    std::vector<std::vector<int>> perms; // parallel to base.edges, 0-based images

    int degree() const { return m; }
};

// Throws unless every edge carries a bijection of {0..M-1} and the shape
// matches the base graph.
void validate_cover(const CoverSpec& cov);

// Uniformly random permutations, Fisher-Yates driven by a seeded mt19937_64
// so covers are reproducible across platforms.
CoverSpec random_cover(const TannerGraph& t, int m, std::uint64_t seed);

// The all-identity cover of degree m.
CoverSpec trivial_cover(const TannerGraph& t, int m);

// Parity-check matrix of the cover: every 1 of the base matrix becomes the
// permutation matrix of its edge, every 0 an MxM zero block.  Row block j
// holds check fibers (j,1..M); column block i holds bit fibers (i,1..M).
BinaryMatrix lifted_parity_matrix(const CoverSpec& cov);

// Words on the cover, blocked by bit: word[(i-1)*M + (k-1)] is fiber (i,k).
using CoverWord = BitVector;

// Repeats each coordinate of c across its fiber, giving a codeword of every
// M-cover whenever c is a codeword.
CoverWord lift_codeword(const BitVector& c, int m);

bool is_cover_codeword(const CoverSpec& cov, const CoverWord& w);

struct PseudoCodeword {
    std::vector<long long> unscaled; // per-bit count of nonzero fiber entries
    RationalVector normalized;       // unscaled / M, exact
};

PseudoCodeword pseudo_codeword(const CoverWord& w, int n_bits, int m);

// Hamming distance divided by M, exact.
Rational scaled_cover_distance(const CoverWord& a, const CoverWord& b, int m);

// JSON with 1-based indices:
//   {"M": 2, "edges": [{"check": j, "bit": i, "perm": [images of 1..M]}, ...]}
std::string cover_to_json(const CoverSpec& cov);
CoverSpec cover_from_json(const TannerGraph& base, const std::string& json_text);

} // namespace pcw

#endif
