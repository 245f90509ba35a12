#include "pcw/lifting.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pcw/errors.hpp"

namespace pcw {

HypothesesReport check_hypotheses(const TannerGraph& t, const std::vector<long long>& p) {
    if (static_cast<int>(p.size()) != t.n_bits)
        throw DimensionError("multiplicity vector length " + std::to_string(p.size()) +
                             " does not match " + std::to_string(t.n_bits) + " bits");
    for (int i = 0; i < t.n_bits; ++i)
        if (p[i] < 0)
            throw DomainError("multiplicities must be nonnegative; bit " +
                              std::to_string(i + 1) + " is " + std::to_string(p[i]));
    HypothesesReport rep;
    rep.check_totals.resize(t.n_checks, 0);
    for (int j = 0; j < t.n_checks; ++j) {
        long long total = 0;
        for (int i : t.check_adj[j]) total += p[i];
        rep.check_totals[j] = total;
        if (total % 2 != 0)
            rep.failures.push_back({HypothesisFailure::Kind::odd_check_total, j, -1});
        for (int i : t.check_adj[j])
            if (total - p[i] < p[i])
                rep.failures.push_back({HypothesisFailure::Kind::dominant_bit, j, i});
    }
    rep.ok = rep.failures.empty();
    return rep;
}

namespace {

std::string describe(const HypothesesReport& rep) {
    std::ostringstream os;
    for (const auto& f : rep.failures) {
        if (&f != &rep.failures.front()) os << "; ";
        if (f.kind == HypothesisFailure::Kind::odd_check_total)
            os << "check " << f.check + 1 << " has odd multiplicity total "
               << rep.check_totals[f.check];
        else
            os << "bit " << f.bit + 1 << " outweighs the rest of check " << f.check + 1
               << " (" << rep.check_totals[f.check] << " total)";
    }
    return os.str();
}

// Greedy work state.  A bit fiber (i,k) holds the checks it still has to
// reach; a check j holds the multiset of fibers that still have to reach it,
// tracked as per-bit counts plus the per-fiber flags.
struct WorkState {
    const TannerGraph& t;
    int m_cover;
    std::vector<long long> p;

    // remaining[i][k][a]: fiber k of bit i still owes the a-th check of
    // bit_adj[i].  w_bit[i][k] is its count.
    std::vector<std::vector<std::vector<std::uint8_t>>> remaining;
    std::vector<std::vector<int>> w_bit;
    std::vector<std::vector<long long>> mf; // mf[j][a]: fibers of a-th bit of check j
    std::vector<long long> w_check;
    std::vector<int> used_slots; // junctions consumed at each check

    explicit WorkState(const TannerGraph& tg, const std::vector<long long>& mult)
        : t(tg), p(mult) {
        remaining.resize(t.n_bits);
        w_bit.resize(t.n_bits);
        for (int i = 0; i < t.n_bits; ++i) {
            remaining[i].assign(static_cast<std::size_t>(p[i]),
                                std::vector<std::uint8_t>(t.bit_adj[i].size(), 1));
            w_bit[i].assign(static_cast<std::size_t>(p[i]),
                            static_cast<int>(t.bit_adj[i].size()));
        }
        mf.resize(t.n_checks);
        w_check.assign(t.n_checks, 0);
        used_slots.assign(t.n_checks, 0);
        for (int j = 0; j < t.n_checks; ++j) {
            mf[j].resize(t.check_adj[j].size());
            for (std::size_t a = 0; a < t.check_adj[j].size(); ++a) {
                mf[j][a] = p[t.check_adj[j][a]];
                w_check[j] += mf[j][a];
            }
        }
    }

    int check_pos(int j, int i) const {
        const auto& adj = t.check_adj[j];
        return static_cast<int>(std::find(adj.begin(), adj.end(), i) - adj.begin());
    }
    int bit_pos(int i, int j) const {
        const auto& adj = t.bit_adj[i];
        return static_cast<int>(std::find(adj.begin(), adj.end(), j) - adj.begin());
    }

    std::string dump(int focus_check) const {
        std::ostringstream os;
        os << "check " << focus_check + 1 << " state:";
        for (std::size_t a = 0; a < t.check_adj[focus_check].size(); ++a)
            os << " bit" << t.check_adj[focus_check][a] + 1 << "=" << mf[focus_check][a];
        os << " weight=" << w_check[focus_check]
           << " slots_used=" << used_slots[focus_check];
        return os.str();
    }

    // Claim: while any list is nonempty, no bit can outweigh the rest of its
    // check.  Verified after every junction when requested.
    void assert_balanced(int j) const {
        for (std::size_t a = 0; a < mf[j].size(); ++a)
            if (w_check[j] - mf[j][a] < mf[j][a])
                throw InternalError("greedy balance invariant failed: " + dump(j));
    }
};

} // namespace

Realization realize(const TannerGraph& t, const std::vector<long long>& p,
                    const RealizeOptions& opts) {
    HypothesesReport rep = check_hypotheses(t, p);
    if (!rep.ok) throw DomainError("not realizable: " + describe(rep));

    long long m_ll = 1;
    for (long long pi : p) m_ll = std::max(m_ll, pi);
    for (long long nf : rep.check_totals) m_ll = std::max(m_ll, nf / 2);
    if (m_ll > 1 << 20)
        throw CapacityError("cover degree " + std::to_string(m_ll) +
                            " exceeds the desk bound 2^20");
    const int m = static_cast<int>(m_ll);

    WorkState st(t, p);
    std::vector<EdgeWalk> paths;
    // Slot assignments per base edge: (slot l, bit fiber k) pairs from the
    // walk, completed below to full permutations.
    std::vector<std::vector<std::pair<int, int>>> assigned(t.edges.size());

    auto pick_start = [&]() -> std::pair<int, int> {
        int bi = -1, bk = -1, bw = 0;
        for (int i = 0; i < t.n_bits; ++i)
            for (int k = 0; k < static_cast<int>(st.w_bit[i].size()); ++k)
                if (st.w_bit[i][k] > bw) {
                    bw = st.w_bit[i][k];
                    bi = i;
                    bk = k;
                }
        return {bi, bk};
    };

    while (true) {
        auto [i, k] = pick_start();
        if (i < 0) break;
        EdgeWalk path;
        path.kind = EdgeWalk::Kind::path;
        while (true) {
            // Heaviest check still owed by fiber (i,k); ties to the lowest
            // check index.
            int best_a = -1;
            for (std::size_t a = 0; a < t.bit_adj[i].size(); ++a) {
                if (!st.remaining[i][k][a]) continue;
                if (best_a < 0 || st.w_check[t.bit_adj[i][a]] >
                                      st.w_check[t.bit_adj[i][best_a]])
                    best_a = static_cast<int>(a);
            }
            if (best_a < 0)
                throw InternalError("fiber with positive weight has no remaining check");
            int j = t.bit_adj[i][best_a];
            int slot = st.used_slots[j]++;
            if (slot >= m)
                throw InternalError("check " + std::to_string(j + 1) +
                                    " ran out of fiber slots: " + st.dump(j));
            st.remaining[i][k][best_a] = 0;
            --st.w_bit[i][k];
            --st.mf[j][st.check_pos(j, i)];
            --st.w_check[j];
            int e_in = t.edge_index(i, j);
            assigned[e_in].emplace_back(slot, k);
            path.edges.push_back(e_in * m + slot);

            // Partner fiber at check j: a different bit with the largest
            // remaining count, then its heaviest fiber, then lowest
            // (bit, fiber).
            int py = -1, pl = -1;
            long long best_mf = -1;
            int best_w = -1;
            for (std::size_t a = 0; a < t.check_adj[j].size(); ++a) {
                int y = t.check_adj[j][a];
                if (y == i || st.mf[j][a] == 0) continue;
                int jb = st.bit_pos(y, j);
                int cand = -1;
                for (int l = 0; l < static_cast<int>(st.w_bit[y].size()); ++l)
                    if (st.remaining[y][l][jb] &&
                        (cand < 0 || st.w_bit[y][l] > st.w_bit[y][cand]))
                        cand = l;
                if (cand < 0)
                    throw InternalError("count/flag mismatch at check " +
                                        std::to_string(j + 1) + ": " + st.dump(j));
                // check_adj is ascending, so strict comparisons keep the
                // lowest (y, cand) among ties.
                if (st.mf[j][a] > best_mf ||
                    (st.mf[j][a] == best_mf && st.w_bit[y][cand] > best_w)) {
                    py = y;
                    pl = cand;
                    best_mf = st.mf[j][a];
                    best_w = st.w_bit[y][cand];
                }
            }
            if (py < 0)
                throw InternalError("no partner fiber available: " + st.dump(j));

            int jb = st.bit_pos(py, j);
            st.remaining[py][pl][jb] = 0;
            --st.w_bit[py][pl];
            --st.mf[j][st.check_pos(j, py)];
            --st.w_check[j];
            int e_out = t.edge_index(py, j);
            assigned[e_out].emplace_back(slot, pl);
            path.edges.push_back(e_out * m + slot);

            if (opts.check_invariants) st.assert_balanced(j);

            if (st.w_bit[py][pl] == 0) break; // path ends at an exhausted fiber
            i = py;
            k = pl;
        }
        paths.push_back(std::move(path));
    }

    // Permutations: walk assignments first, then leftover slots paired with
    // leftover fibers in increasing order.
    Realization out;
    out.m = m;
    out.cover.base = t;
    out.cover.m = m;
    out.cover.perms.resize(t.edges.size());
    for (std::size_t e = 0; e < t.edges.size(); ++e) {
        int i = t.edges[e].first;
        std::vector<int> perm(m, -1);
        std::vector<std::uint8_t> fiber_used(m, 0);
        for (auto [slot, k] : assigned[e]) {
            if (perm[slot] != -1)
                throw InternalError("slot " + std::to_string(slot + 1) +
                                    " of edge " + std::to_string(e + 1) + " used twice");
            perm[slot] = k;
            fiber_used[k] = 1;
        }
        int next = static_cast<int>(p[i]);
        for (int l = 0; l < m; ++l) {
            if (perm[l] != -1) continue;
            while (next < m && fiber_used[next]) ++next;
            if (next >= m)
                throw InternalError("ran out of spare fibers on edge " +
                                    std::to_string(e + 1));
            perm[l] = next;
            fiber_used[next] = 1;
        }
        out.cover.perms[e] = std::move(perm);
    }
    validate_cover(out.cover);

    out.word.assign(static_cast<std::size_t>(t.n_bits) * m, 0);
    for (int i = 0; i < t.n_bits; ++i)
        for (int k = 0; k < p[i]; ++k) out.word[static_cast<std::size_t>(i) * m + k] = 1;
    out.paths = std::move(paths);

    if (opts.check_invariants) {
        std::string why;
        if (!verify_conclusions(out.cover, out.paths, p, &why))
            throw InternalError("realization audit failed: " + why);
    }
    return out;
}

bool verify_conclusions(const CoverSpec& cov, const std::vector<EdgeWalk>& paths,
                        const std::vector<long long>& p, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    validate_cover(cov);
    const TannerGraph& t = cov.base;
    const int m = cov.m;
    if (static_cast<int>(p.size()) != t.n_bits)
        throw DimensionError("multiplicity vector length mismatch");

    std::vector<std::uint8_t> edge_used(t.edges.size() * static_cast<std::size_t>(m), 0);
    std::vector<std::uint8_t> junction_used(t.n_checks * static_cast<std::size_t>(m), 0);
    std::vector<long long> fiber_incidence(t.n_bits * static_cast<std::size_t>(m), 0);
    std::vector<long long> base_usage(t.edges.size(), 0);

    for (std::size_t pi = 0; pi < paths.size(); ++pi) {
        const auto& edges = paths[pi].edges;
        auto name = [&](std::size_t s) {
            return "path " + std::to_string(pi + 1) + ", step " + std::to_string(s + 1);
        };
        if (edges.empty() || edges.size() % 2 != 0)
            return fail("path " + std::to_string(pi + 1) +
                        " does not alternate bit/check fibers (odd length)");
        for (std::size_t s = 0; s < edges.size(); ++s) {
            int id = edges[s];
            if (id < 0 || id >= static_cast<int>(edge_used.size()))
                return fail(name(s) + ": fiber edge id out of range");
            if (s > 0 && edges[s] == edges[s - 1])
                return fail(name(s) + ": backtracks");
            int e = id / m, slot = id % m;
            auto [i, j] = t.edges[e];
            if (edge_used[id]) return fail(name(s) + ": fiber edge used twice");
            edge_used[id] = 1;
            ++base_usage[e];
            ++fiber_incidence[static_cast<std::size_t>(i) * m + cov.perms[e][slot]];
            if (s % 2 == 0) {
                // First half of a junction; the next edge must share it.
                if (s + 1 >= edges.size()) return fail(name(s) + ": dangling junction");
                int id2 = edges[s + 1];
                int e2 = id2 / m, slot2 = id2 % m;
                if (t.edges[e2].second != j || slot2 != slot)
                    return fail(name(s) + ": consecutive edges do not meet at one "
                                          "check fiber");
                std::size_t jslot = static_cast<std::size_t>(j) * m + slot;
                if (junction_used[jslot])
                    return fail(name(s) + ": check fiber " + std::to_string(j + 1) + "," +
                                std::to_string(slot + 1) + " used twice");
                junction_used[jslot] = 1;
            } else if (s + 1 < edges.size()) {
                // Between junctions the walk pivots on one bit fiber.
                int id2 = edges[s + 1];
                int e2 = id2 / m, slot2 = id2 % m;
                if (t.edges[e2].first != i ||
                    cov.perms[e2][slot2] != cov.perms[e][slot])
                    return fail(name(s) + ": consecutive junctions do not share a bit "
                                          "fiber");
            }
        }
    }

    for (int i = 0; i < t.n_bits; ++i)
        for (int k = 0; k < m; ++k) {
            long long inc = fiber_incidence[static_cast<std::size_t>(i) * m + k];
            if (inc != 0 && inc != t.bit_degree(i))
                return fail("bit fiber " + std::to_string(i + 1) + "," +
                            std::to_string(k + 1) + " uses " + std::to_string(inc) +
                            " of " + std::to_string(t.bit_degree(i)) + " edges");
        }
    for (std::size_t e = 0; e < t.edges.size(); ++e)
        if (base_usage[e] != p[t.edges[e].first])
            return fail("base edge " + std::to_string(e + 1) + " used " +
                        std::to_string(base_usage[e]) + " times, expected " +
                        std::to_string(p[t.edges[e].first]));
    return true;
}

} // namespace pcw
