#ifndef PCW_CONE_HPP
#define PCW_CONE_HPP

#include <vector>

#include "pcw/gf2.hpp"
#include "pcw/rational.hpp"

namespace pcw {

// One failed cone constraint.  row >= 0 names the check of a violated
// inequality  sum_{i' != i} h_{j,i'} v_{i'} >= h_{j,i} v_i ;  row == -1 marks
// a negative coordinate.  Indices are 0-based here, 1-based when serialized.
struct ConeViolation {
    int row = 0;
    int bit = 0;
    bool operator==(const ConeViolation&) const = default;
};

struct ConeResult {
    bool member = false;
    std::vector<ConeViolation> violated; // every failing pair, sorted
};

// Exact membership test for the fundamental cone of h.  All arithmetic is
// rational; there is deliberately no tolerance parameter.
ConeResult cone_membership(const BinaryMatrix& h, const RationalVector& v);

// Integer points of the cone whose mod-2 reduction is a codeword are exactly
// the unscaled pseudo-codewords.  Entries must be nonnegative.
bool is_unscaled_pcw(const BinaryMatrix& h, const std::vector<long long>& p);

struct DenseRayWitness {
    std::vector<Integer> p; // even unscaled pseudo-codeword near the ray of v
    Rational alpha;         // scale with ||alpha*p - v||_2 < eps, exactly
    Rational beta;          // p_i = 2*ceil(beta*v_i)
};

// Constructive density of pseudo-codeword rays in the cone: for v in the
// cone and eps > 0 returns an even unscaled pseudo-codeword p and exact
// alpha with ||alpha*p - v|| < eps (squared norms compared exactly).
DenseRayWitness dense_ray_witness(const BinaryMatrix& h, const RationalVector& v,
                                  const Rational& eps);

} // namespace pcw

#endif
