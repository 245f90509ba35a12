#include "pcw/covers.hpp"

#include <algorithm>
#include <random>

#include <json.hpp>

#include "pcw/errors.hpp"

namespace pcw {

void validate_cover(const CoverSpec& cov) {
    if (cov.m < 1) throw DomainError("cover degree must be at least 1");
    if (cov.perms.size() != cov.base.edges.size())
        throw DimensionError("cover has " + std::to_string(cov.perms.size()) +
                             " permutations for " + std::to_string(cov.base.edges.size()) +
                             " base edges");
    for (std::size_t e = 0; e < cov.perms.size(); ++e) {
        const auto& p = cov.perms[e];
        if (static_cast<int>(p.size()) != cov.m)
            throw DimensionError("permutation on edge " + std::to_string(e + 1) +
                                 " has length " + std::to_string(p.size()));
        std::vector<std::uint8_t> seen(cov.m, 0);
        for (int img : p) {
            if (img < 0 || img >= cov.m || seen[img])
                throw DomainError("edge " + std::to_string(e + 1) +
                                  " does not carry a bijection of {1.." +
                                  std::to_string(cov.m) + "}");
            seen[img] = 1;
        }
    }
}

namespace {

// Uniform draw from {0..n-1} by rejection; std::uniform_int_distribution is
// not pinned down by the standard, this is.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    std::uint64_t threshold = (0 - n) % n; // 2^64 mod n
    std::uint64_t v;
    do { v = rng(); } while (v < threshold);
    return v % n;
}

} // namespace

CoverSpec random_cover(const TannerGraph& t, int m, std::uint64_t seed) {
    if (m < 1) throw DomainError("cover degree must be at least 1");
    CoverSpec cov;
    cov.base = t;
    cov.m = m;
    std::mt19937_64 rng(seed);
    cov.perms.reserve(t.edges.size());
    for (std::size_t e = 0; e < t.edges.size(); ++e) {
        std::vector<int> p(m);
        for (int k = 0; k < m; ++k) p[k] = k;
        for (int k = m - 1; k > 0; --k)
            std::swap(p[k], p[bounded(rng, static_cast<std::uint64_t>(k) + 1)]);
        cov.perms.push_back(std::move(p));
    }
    return cov;
}

CoverSpec trivial_cover(const TannerGraph& t, int m) {
    if (m < 1) throw DomainError("cover degree must be at least 1");
    CoverSpec cov;
    cov.base = t;
    cov.m = m;
    std::vector<int> identity(m);
    for (int k = 0; k < m; ++k) identity[k] = k;
    cov.perms.assign(t.edges.size(), identity);
    return cov;
}

BinaryMatrix lifted_parity_matrix(const CoverSpec& cov) {
    validate_cover(cov);
    const int m = cov.m;
    BinaryMatrix h(cov.base.n_checks * m, cov.base.n_bits * m);
    for (std::size_t e = 0; e < cov.base.edges.size(); ++e) {
        auto [i, j] = cov.base.edges[e];
        for (int l = 0; l < m; ++l) h.set(j * m + l, i * m + cov.perms[e][l], 1);
    }
    return h;
}

CoverWord lift_codeword(const BitVector& c, int m) {
    if (m < 1) throw DomainError("cover degree must be at least 1");
    CoverWord w;
    w.reserve(c.size() * m);
    for (auto b : c) w.insert(w.end(), m, b);
    return w;
}

bool is_cover_codeword(const CoverSpec& cov, const CoverWord& w) {
    validate_cover(cov);
    if (w.size() != static_cast<std::size_t>(cov.base.n_bits) * cov.m)
        throw DimensionError("cover word length " + std::to_string(w.size()) +
                             " does not match " +
                             std::to_string(cov.base.n_bits * cov.m));
    // Parity at check fiber (j,l) sums the fiber bits its edges select.
    for (int j = 0; j < cov.base.n_checks; ++j)
        for (int l = 0; l < cov.m; ++l) {
            std::uint8_t acc = 0;
            for (int i : cov.base.check_adj[j]) {
                int e = cov.base.edge_index(i, j);
                acc ^= w[static_cast<std::size_t>(i) * cov.m + cov.perms[e][l]];
            }
            if (acc) return false;
        }
    return true;
}

PseudoCodeword pseudo_codeword(const CoverWord& w, int n_bits, int m) {
    if (m < 1) throw DomainError("cover degree must be at least 1");
    if (w.size() != static_cast<std::size_t>(n_bits) * m)
        throw DimensionError("cover word length " + std::to_string(w.size()) +
                             " is not " + std::to_string(n_bits) + " blocks of " +
                             std::to_string(m));
    PseudoCodeword p;
    p.unscaled.resize(n_bits, 0);
    p.normalized.resize(n_bits);
    for (int i = 0; i < n_bits; ++i) {
        long long cnt = 0;
        for (int k = 0; k < m; ++k) cnt += w[static_cast<std::size_t>(i) * m + k];
        p.unscaled[i] = cnt;
        p.normalized[i] = Rational(cnt, m);
    }
    return p;
}

Rational scaled_cover_distance(const CoverWord& a, const CoverWord& b, int m) {
    if (m < 1) throw DomainError("cover degree must be at least 1");
    return Rational(weight(xor_vectors(a, b)), m);
}

std::string cover_to_json(const CoverSpec& cov) {
    nlohmann::ordered_json out;
    out["M"] = cov.m;
    out["edges"] = nlohmann::ordered_json::array();
    for (std::size_t e = 0; e < cov.base.edges.size(); ++e) {
        auto [i, j] = cov.base.edges[e];
        nlohmann::ordered_json entry;
        entry["check"] = j + 1;
        entry["bit"] = i + 1;
        std::vector<int> images;
        images.reserve(cov.m);
        for (int img : cov.perms[e]) images.push_back(img + 1);
        entry["perm"] = images;
        out["edges"].push_back(std::move(entry));
    }
    return out.dump(2);
}

CoverSpec cover_from_json(const TannerGraph& base, const std::string& json_text) {
    nlohmann::json in;
    try {
        in = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("cover JSON: ") + e.what(), 1);
    }
    CoverSpec cov;
    cov.base = base;
    if (!in.contains("M") || !in["M"].is_number_integer())
        throw DomainError("cover JSON needs an integer field 'M'");
    cov.m = in["M"].get<int>();
    if (cov.m < 1) throw DomainError("cover degree must be at least 1");
    cov.perms.assign(base.edges.size(), {});
    std::vector<std::uint8_t> filled(base.edges.size(), 0);
    if (!in.contains("edges") || !in["edges"].is_array())
        throw DomainError("cover JSON needs an 'edges' array");
    for (const auto& entry : in["edges"]) {
        int j = entry.at("check").get<int>() - 1;
        int i = entry.at("bit").get<int>() - 1;
        int e = (i >= 0 && i < base.n_bits && j >= 0 && j < base.n_checks)
                    ? base.edge_index(i, j)
                    : -1;
        if (e < 0)
            throw DomainError("cover JSON names edge (check " + std::to_string(j + 1) +
                              ", bit " + std::to_string(i + 1) +
                              ") absent from the base graph");
        if (filled[e])
            throw DomainError("cover JSON repeats edge (check " + std::to_string(j + 1) +
                              ", bit " + std::to_string(i + 1) + ")");
        filled[e] = 1;
        std::vector<int> p;
        for (int img : entry.at("perm").get<std::vector<int>>()) p.push_back(img - 1);
        cov.perms[e] = std::move(p);
    }
    for (std::size_t e = 0; e < filled.size(); ++e)
        if (!filled[e])
            throw DomainError("cover JSON is missing edge " + std::to_string(e + 1));
    validate_cover(cov);
    return cov;
}

} // namespace pcw
