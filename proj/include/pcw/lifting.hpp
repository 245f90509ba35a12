#ifndef PCW_LIFTING_HPP
#define PCW_LIFTING_HPP

#include <string>
#include <vector>

#include "pcw/covers.hpp"
#include "pcw/gf2.hpp"
#include "pcw/tanner.hpp"

namespace pcw {

// Per-bit multiplicities m_e = p_i are realizable as a cover codeword when
// every check total N_f = sum of adjacent multiplicities is even and no
// single bit exceeds the rest of its check.
struct HypothesisFailure {
    enum class Kind {
        odd_check_total, // N_f odd at `check`
        dominant_bit     // p[bit] > sum of the other multiplicities at `check`
    };
    Kind kind;
    int check = 0; // 0-based
    int bit = -1;  // only for dominant_bit
    bool operator==(const HypothesisFailure&) const = default;
};

struct HypothesesReport {
    bool ok = false;
    std::vector<HypothesisFailure> failures;
    std::vector<long long> check_totals; // N_f per check
};

HypothesesReport check_hypotheses(const TannerGraph& t, const std::vector<long long>& p);

struct RealizeOptions {
    // Re-check the greedy invariants after every step and throw InternalError
    // with a state dump if one fails.  Production trusts them.
#ifdef NDEBUG
    bool check_invariants = false;
#else
    bool check_invariants = true;
#endif
};

// A cover together with the codeword realizing a pseudo-codeword on it.
// Paths live on the cover graph; edge id e*M + l is the fiber edge of base
// edge e attached to check slot l (its bit fiber is perms[e][l]).
struct Realization {
    CoverSpec cover;
    CoverWord word;
    std::vector<EdgeWalk> paths;
    int m = 1;
};

// Constructs an M-cover and codeword whose pseudo-codeword is exactly p, by
// greedy backtrackless path building over bit/check fibers.  M is
// max({p_i} u {N_f/2} u {1}).  Throws DomainError naming every failed
// hypothesis when p is not realizable.
Realization realize(const TannerGraph& t, const std::vector<long long>& p,
                    const RealizeOptions& opts = {});

// Structural audit of a realization: every check fiber used at most once,
// every fiber edge at most once, all-or-none edge usage at each bit fiber,
// and per-base-edge usage counts equal to p.  On failure, `why` (if given)
// names the first broken conclusion.
bool verify_conclusions(const CoverSpec& cov, const std::vector<EdgeWalk>& paths,
                        const std::vector<long long>& p, std::string* why = nullptr);

} // namespace pcw

#endif
