#include "pcw/cone.hpp"

#include <string>

#include "pcw/errors.hpp"

namespace pcw {

ConeResult cone_membership(const BinaryMatrix& h, const RationalVector& v) {
    if (static_cast<int>(v.size()) != h.cols())
        throw DimensionError("cone vector length " + std::to_string(v.size()) +
                             " does not match " + std::to_string(h.cols()) + " columns");
    ConeResult res;
    for (int i = 0; i < h.cols(); ++i)
        if (v[i] < 0) res.violated.push_back({-1, i});

    for (int j = 0; j < h.rows(); ++j) {
        Rational row_sum = 0;
        for (int i = 0; i < h.cols(); ++i)
            if (h.at(j, i)) row_sum += v[i];
        // sum_{i' != i} h v >= h_{j,i} v_i  reads  row_sum >= 2 v_i  on the
        // support of row j and  row_sum >= 0  off it.
        for (int i = 0; i < h.cols(); ++i) {
            bool ok = h.at(j, i) ? (row_sum >= 2 * v[i]) : (row_sum >= 0);
            if (!ok) res.violated.push_back({j, i});
        }
    }
    res.member = res.violated.empty();
    return res;
}

bool is_unscaled_pcw(const BinaryMatrix& h, const std::vector<long long>& p) {
    if (static_cast<int>(p.size()) != h.cols())
        throw DimensionError("vector length " + std::to_string(p.size()) +
                             " does not match " + std::to_string(h.cols()) + " columns");
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] < 0)
            throw DomainError("unscaled pseudo-codeword entries must be nonnegative; "
                              "entry " + std::to_string(i + 1) + " is " +
                              std::to_string(p[i]));
    // Exact in 64-bit arithmetic since entries are nonnegative integers.
    for (int j = 0; j < h.rows(); ++j) {
        long long row_sum = 0;
        for (int i = 0; i < h.cols(); ++i)
            if (h.at(j, i)) row_sum += p[i];
        if (row_sum % 2 != 0) return false; // mod-2 reduction not a codeword
        for (int i = 0; i < h.cols(); ++i)
            if (h.at(j, i) && row_sum < 2 * p[i]) return false;
    }
    return true;
}

DenseRayWitness dense_ray_witness(const BinaryMatrix& h, const RationalVector& v,
                                  const Rational& eps) {
    if (eps <= 0) throw DomainError("eps must be positive");
    ConeResult inside = cone_membership(h, v);
    if (!inside.member)
        throw DomainError("dense_ray_witness needs a cone member; " +
                          std::to_string(inside.violated.size()) +
                          " constraint(s) failed");

    DenseRayWitness w;
    w.p.assign(v.size(), Integer(0));
    bool zero = true;
    for (const auto& vi : v)
        if (vi != 0) { zero = false; break; }
    if (zero) {
        w.alpha = 1;
        w.beta = 1;
        return w;
    }

    int n = h.cols();
    Rational target = Rational(n) / eps;
    Rational beta = 1;
    while (beta < target) beta *= 2;

    Rational eps_sq = eps * eps;
    for (int attempt = 0; attempt < 64; ++attempt, beta *= 2) {
        Rational pp = 0, pv = 0;
        for (int i = 0; i < n; ++i) {
            Integer pi = 2 * ceil_rational(beta * v[i]);
            w.p[i] = pi;
            Rational rp(pi);
            pp += rp * rp;
            pv += rp * v[i];
        }
        auto dist_sq = [&](const Rational& alpha) {
            Rational acc = 0;
            for (int i = 0; i < n; ++i) {
                Rational d = alpha * Rational(w.p[i]) - v[i];
                acc += d * d;
            }
            return acc;
        };
        // Coarse scale first, then the exact least-squares optimum.
        Rational alpha = Rational(1) / (2 * beta);
        if (pp > 0) {
            Rational opt = pv / pp;
            if (dist_sq(opt) <= dist_sq(alpha)) alpha = opt;
        }
        if (dist_sq(alpha) < eps_sq) {
            w.alpha = alpha;
            w.beta = beta;
            return w;
        }
    }
    throw InternalError("dense_ray_witness failed to converge; this contradicts the "
                        "ceiling bound and indicates a bug");
}

} // namespace pcw
