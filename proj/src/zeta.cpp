#include "pcw/zeta.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <unordered_map>

#include "pcw/errors.hpp"

namespace pcw {

DirectedEdgeMatrix directed_edge_matrix(const MultiGraph& g) {
    return directed_edge_matrix(g, std::vector<std::uint8_t>(g.edges.size(), 0));
}

DirectedEdgeMatrix directed_edge_matrix(const MultiGraph& g,
                                        const std::vector<std::uint8_t>& flip) {
    if (flip.size() != g.edges.size())
        throw DimensionError("orientation flags do not match the edge count");
    DirectedEdgeMatrix m;
    m.n_edges = static_cast<int>(g.edges.size());
    int s2 = m.slots();
    m.tail.resize(s2);
    m.head.resize(s2);
    for (int e = 0; e < m.n_edges; ++e) {
        auto [a, b] = g.edges[e];
        if (flip[e]) std::swap(a, b);
        m.tail[e] = a;
        m.head[e] = b;
        m.tail[e + m.n_edges] = b;
        m.head[e + m.n_edges] = a;
    }
    m.adj.assign(static_cast<std::size_t>(s2) * s2, 0);
    for (int s = 0; s < s2; ++s)
        for (int t = 0; t < s2; ++t)
            if (m.head[s] == m.tail[t] && t != m.reverse(s))
                m.adj[static_cast<std::size_t>(s) * s2 + t] = 1;
    return m;
}

namespace {

// det(I - UM) (or det(I - MU)) by expanding rows in a fixed order with
// memoization on the set of consumed columns.  Entries are 1 on the diagonal
// and -u_v where slot s feeds slot t, so each partial product is tracked as
// a sparse polynomial; truncation prunes states that can no longer
// contribute.
SparsePolynomial det_identity_minus(const DirectedEdgeMatrix& dem, ZetaOptions::Form form,
                                    int truncate_degree) {
    const int n = dem.slots();
    const int nvars = dem.n_edges;
    if (n == 0) return SparsePolynomial::constant(0, 1);

    struct Cell {
        int col;
        int var; // -1: the diagonal 1
    };
    std::vector<std::vector<Cell>> row_cells(n);
    for (int s = 0; s < n; ++s) {
        for (int t = 0; t < n; ++t) {
            if (s == t) {
                row_cells[s].push_back({t, -1});
            } else if (dem.feeds(s, t)) {
                int v = form == ZetaOptions::Form::variables_on_rows ? dem.var(s)
                                                                     : dem.var(t);
                row_cells[s].push_back({t, v});
            }
        }
    }

    // Sparsest rows first; the parity of this permutation scales the result.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return row_cells[a].size() < row_cells[b].size();
    });
    std::vector<std::uint8_t> seen(n, 0);
    int swaps = 0;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = order[j]) {
            seen[j] = 1;
            ++len;
        }
        swaps += len - 1;
    }
    const bool order_flips_sign = swaps % 2 != 0;

    std::unordered_map<std::uint32_t, SparsePolynomial> cur;
    cur.emplace(0u, SparsePolynomial::constant(nvars, 1));
    for (int level = 0; level < n; ++level) {
        const auto& cells = row_cells[order[level]];
        std::unordered_map<std::uint32_t, SparsePolynomial> next;
        next.reserve(cur.size() * cells.size());
        for (const auto& [mask, poly] : cur) {
            for (const Cell& cell : cells) {
                std::uint32_t bit = std::uint32_t{1} << cell.col;
                if (mask & bit) continue;
                // Parity of already-picked columns to the right of this one.
                bool negate = std::popcount(mask >> (cell.col + 1)) % 2 != 0;
                auto it = next.find(mask | bit);
                if (it == next.end())
                    it = next.emplace(mask | bit, SparsePolynomial(nvars)).first;
                SparsePolynomial& acc = it->second;
                if (cell.var < 0) {
                    for (const auto& [e, c] : poly.terms())
                        acc.add_term(e, negate ? -c : c);
                } else {
                    // Multiply by -u_var.
                    for (const auto& [e, c] : poly.terms()) {
                        if (truncate_degree >= 0 &&
                            total_degree(e) + 1 > truncate_degree)
                            break;
                        ExponentVector e2 = e;
                        ++e2[cell.var];
                        acc.add_term(e2, negate ? c : -c);
                    }
                }
            }
        }
        // Dead states only waste work on later levels.
        for (auto it = next.begin(); it != next.end();)
            it = it->second.is_zero() ? next.erase(it) : std::next(it);
        cur = std::move(next);
    }

    std::uint32_t full = n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
    auto it = cur.find(full);
    if (it == cur.end()) return SparsePolynomial(nvars);
    if (!order_flips_sign) return std::move(it->second);
    SparsePolynomial out(nvars);
    for (const auto& [e, c] : it->second.terms()) out.add_term(e, -c);
    return out;
}

} // namespace

SparsePolynomial zeta_reciprocal(const MultiGraph& g, const ZetaOptions& opts) {
    int slots = 2 * static_cast<int>(g.edges.size());
    if (slots > opts.max_slots)
        throw CapacityError("directed edge matrix needs " + std::to_string(slots) +
                            " slots, above the bound " + std::to_string(opts.max_slots) +
                            " (raise max_slots; --det-bound on the command line)");
    if (slots > 31)
        throw CapacityError("directed edge matrix needs " + std::to_string(slots) +
                            " slots; the determinant engine handles at most 31");
    DirectedEdgeMatrix dem = directed_edge_matrix(g);
    SparsePolynomial out = det_identity_minus(dem, opts.form, opts.truncate_degree);
    if (opts.check_dual) {
        auto other = opts.form == ZetaOptions::Form::variables_on_rows
                         ? ZetaOptions::Form::variables_on_columns
                         : ZetaOptions::Form::variables_on_rows;
        if (!(out == det_identity_minus(dem, other, opts.truncate_degree)))
            throw InternalError("the two determinant forms of the zeta reciprocal "
                                "disagree");
    }
    return out;
}

std::vector<ExponentVector> enumerate_cycle_pcw(const BinaryMatrix& h, int degree,
                                                const ZetaOptions& opts) {
    if (degree < 0) throw DomainError("degree must be nonnegative");
    TannerGraph t = from_parity_matrix(h);
    MultiGraph normal = normal_graph(t); // rejects non-cycle codes
    ZetaOptions local = opts;
    if (local.truncate_degree < 0 || local.truncate_degree > degree)
        local.truncate_degree = degree;
    SparsePolynomial rec = zeta_reciprocal(normal, local);
    TruncatedSeries series = series_expand(rec, degree);
    std::vector<ExponentVector> out;
    out.reserve(series.poly.terms().size());
    for (const auto& [e, c] : series.poly.terms()) out.push_back(e);
    return out; // already graded-lex
}

MultiGraph as_plain_graph(const TannerGraph& t) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(t.edges.size());
    for (auto [i, j] : t.edges) edges.emplace_back(i, t.n_bits + j);
    return MultiGraph::make(t.n_bits + t.n_checks, std::move(edges));
}

std::vector<ExponentVector> bit_even_pcw(const BinaryMatrix& h, int degree,
                                         const ZetaOptions& opts) {
    if (degree < 0) throw DomainError("degree must be nonnegative");
    TannerGraph t = from_parity_matrix(h);
    if (!is_bit_even(t))
        throw DomainError("parity-check matrix is not bit-even; duplicate_checks "
                          "makes it so without changing the code");
    ZetaOptions local = opts;
    if (local.truncate_degree < 0 || local.truncate_degree > degree)
        local.truncate_degree = degree;
    SparsePolynomial rec = zeta_reciprocal(as_plain_graph(t), local);
    TruncatedSeries series = series_expand(rec, degree);

    // Keep monomials constant on each bit's block of edges; the projection
    // reads that constant off the bit's first edge.  t.edges is sorted by
    // bit, so blocks are contiguous.
    std::vector<ExponentVector> out;
    for (const auto& [e, c] : series.poly.terms()) {
        ExponentVector p(t.n_bits, 0);
        bool constant_on_blocks = true;
        std::size_t pos = 0;
        for (int i = 0; i < t.n_bits && constant_on_blocks; ++i) {
            int d = t.bit_degree(i);
            for (int a = 0; a < d; ++a)
                if (e[pos + a] != e[pos]) {
                    constant_on_blocks = false;
                    break;
                }
            p[i] = d > 0 ? e[pos] : 0;
            pos += d;
        }
        if (constant_on_blocks) out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(), GradedLex{});
    return out;
}

} // namespace pcw
