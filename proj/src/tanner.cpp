#include "pcw/tanner.hpp"

#include <algorithm>
#include <string>

#include "pcw/errors.hpp"

namespace pcw {

int TannerGraph::edge_index(int bit, int check) const {
    auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(bit, check));
    if (it == edges.end() || *it != std::make_pair(bit, check)) return -1;
    return static_cast<int>(it - edges.begin());
}

TannerGraph from_parity_matrix(const BinaryMatrix& h) {
    TannerGraph t;
    t.n_bits = h.cols();
    t.n_checks = h.rows();
    t.bit_adj.assign(t.n_bits, {});
    t.check_adj.assign(t.n_checks, {});
    for (int i = 0; i < h.cols(); ++i)
        for (int j = 0; j < h.rows(); ++j)
            if (h.at(j, i)) {
                t.edges.emplace_back(i, j);
                t.bit_adj[i].push_back(j);
                t.check_adj[j].push_back(i);
            }
    return t;
}

BinaryMatrix to_parity_matrix(const TannerGraph& t) {
    BinaryMatrix h(t.n_checks, t.n_bits);
    for (auto [i, j] : t.edges) h.set(j, i, 1);
    return h;
}

bool is_bit_even(const TannerGraph& t) {
    for (int i = 0; i < t.n_bits; ++i)
        if (t.bit_degree(i) % 2 != 0) return false;
    return true;
}

BinaryMatrix duplicate_checks(const BinaryMatrix& h) {
    BinaryMatrix out(2 * h.rows(), h.cols());
    for (int r = 0; r < h.rows(); ++r)
        for (int c = 0; c < h.cols(); ++c)
            if (h.at(r, c)) {
                out.set(2 * r, c, 1);
                out.set(2 * r + 1, c, 1);
            }
    return out;
}

MultiGraph MultiGraph::make(int n_vertices, std::vector<std::pair<int, int>> edges) {
    MultiGraph g;
    g.n_vertices = n_vertices;
    for (auto& [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n_vertices || b >= n_vertices)
            throw DimensionError("edge endpoint out of range");
        if (a == b) throw DomainError("loops are not allowed in a multigraph here");
        if (a > b) std::swap(a, b);
    }
    g.edges = std::move(edges);
    return g;
}

int MultiGraph::degree(int v) const {
    int d = 0;
    for (auto [a, b] : edges) d += (a == v) + (b == v);
    return d;
}

bool MultiGraph::connected() const {
    if (n_vertices <= 1) return true;
    std::vector<std::vector<int>> adj(n_vertices);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<std::uint8_t> seen(n_vertices, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](std::uint8_t s) { return s == 1; });
}

MultiGraph normal_graph(const TannerGraph& t) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(t.n_bits);
    for (int i = 0; i < t.n_bits; ++i) {
        if (t.bit_degree(i) != 2)
            throw DomainError("bit " + std::to_string(i + 1) + " has degree " +
                              std::to_string(t.bit_degree(i)) +
                              "; the normal graph needs every bit degree equal to 2");
        edges.emplace_back(t.bit_adj[i][0], t.bit_adj[i][1]);
    }
    return MultiGraph::make(t.n_checks, std::move(edges));
}

bool is_valid_walk(const MultiGraph& g, const EdgeWalk& w) {
    if (w.edges.empty()) return true;
    for (int e : w.edges)
        if (e < 0 || e >= static_cast<int>(g.edges.size())) return false;
    // Try both orientations of the first edge and propagate.
    auto ends = [&](int e) { return g.edges[e]; };
    for (int flip = 0; flip < 2; ++flip) {
        auto [a, b] = ends(w.edges[0]);
        int start = flip ? b : a;
        int at = flip ? a : b;
        bool ok = true;
        for (std::size_t s = 1; s < w.edges.size(); ++s) {
            auto [c, d] = ends(w.edges[s]);
            if (c == at) at = d;
            else if (d == at) at = c;
            else { ok = false; break; }
        }
        if (ok && (w.kind != EdgeWalk::Kind::cycle || at == start)) return true;
    }
    return false;
}

bool is_backtrackless(const EdgeWalk& w) {
    const auto& e = w.edges;
    for (std::size_t s = 0; s + 1 < e.size(); ++s)
        if (e[s] == e[s + 1]) return false;
    if (w.kind == EdgeWalk::Kind::cycle && e.size() > 1 && e.front() == e.back()) return false;
    return true;
}

bool is_tailless(const EdgeWalk& w) {
    if (w.kind != EdgeWalk::Kind::cycle || w.edges.size() <= 1) return true;
    return w.edges.front() != w.edges.back();
}

std::vector<BitVector> simple_cycle_characteristic_vectors(const MultiGraph& g,
                                                           int max_edges) {
    int m = static_cast<int>(g.edges.size());
    if (m > max_edges)
        throw CapacityError("simple cycle enumeration over " + std::to_string(m) +
                            " edges exceeds the bound " + std::to_string(max_edges) +
                            " (raise max_edges to override)");
    // A nonempty edge subset is a simple cycle iff every vertex meets 0 or 2
    // of its edges and the used edges are connected.
    std::vector<BitVector> out;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << m); ++mask) {
        std::vector<int> deg(g.n_vertices, 0);
        bool ok = true;
        for (int e = 0; e < m && ok; ++e)
            if (mask & (std::uint32_t{1} << e)) {
                if (++deg[g.edges[e].first] > 2) ok = false;
                if (++deg[g.edges[e].second] > 2) ok = false;
            }
        if (!ok) continue;
        for (int v = 0; v < g.n_vertices; ++v)
            if (deg[v] == 1) { ok = false; break; }
        if (!ok) continue;
        // Connectivity of the chosen edges.
        int seed = -1;
        std::vector<std::vector<std::pair<int, int>>> adj(g.n_vertices);
        for (int e = 0; e < m; ++e)
            if (mask & (std::uint32_t{1} << e)) {
                adj[g.edges[e].first].emplace_back(g.edges[e].second, e);
                adj[g.edges[e].second].emplace_back(g.edges[e].first, e);
                seed = g.edges[e].first;
            }
        std::vector<std::uint8_t> seen(g.n_vertices, 0);
        std::vector<int> stack{seed};
        seen[seed] = 1;
        int reached_edges = 0;
        std::vector<std::uint8_t> edge_seen(m, 0);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [w, e] : adj[v]) {
                if (!edge_seen[e]) {
                    edge_seen[e] = 1;
                    ++reached_edges;
                }
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        int total = 0;
        for (int e = 0; e < m; ++e) total += (mask >> e) & 1;
        if (reached_edges != total) continue;
        BitVector chi(m, 0);
        for (int e = 0; e < m; ++e) chi[e] = (mask >> e) & 1;
        out.push_back(std::move(chi));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Directed edge slots: slot e (0 <= e < m) runs lower->higher endpoint of
// edge e, slot e + m the reverse.
struct DirectedView {
    int m;
    std::vector<int> tail, head;
    std::vector<std::vector<int>> out; // successor slots, excluding same edge

    explicit DirectedView(const MultiGraph& g) : m(static_cast<int>(g.edges.size())) {
        tail.resize(2 * m);
        head.resize(2 * m);
        for (int e = 0; e < m; ++e) {
            tail[e] = g.edges[e].first;
            head[e] = g.edges[e].second;
            tail[e + m] = g.edges[e].second;
            head[e + m] = g.edges[e].first;
        }
        out.resize(2 * m);
        for (int s = 0; s < 2 * m; ++s)
            for (int t = 0; t < 2 * m; ++t)
                if (head[s] == tail[t] && t % m != s % m) out[s].push_back(t);
    }
};

std::vector<int> least_rotation(const std::vector<int>& seq) {
    std::vector<int> best = seq;
    std::vector<int> cur = seq;
    for (std::size_t r = 1; r < seq.size(); ++r) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best) best = cur;
    }
    return best;
}

bool is_primitive_word(const std::vector<int>& seq) {
    std::size_t n = seq.size();
    for (std::size_t period = 1; period < n; ++period) {
        if (n % period != 0) continue;
        bool repeats = true;
        for (std::size_t i = period; i < n && repeats; ++i)
            repeats = (seq[i] == seq[i - period]);
        if (repeats) return false;
    }
    return true;
}

} // namespace

std::vector<EdgeWalk> primitive_bt_cycles(const MultiGraph& g, int max_len) {
    DirectedView dv(g);
    // Closed walks in the directed-edge graph are exactly the backtrackless
    // tailless closed walks of g; cyclic shifts are rotations of the slot
    // sequence.  Enumerate with the smallest slot first, canonicalize, then
    // keep the primitive classes.
    std::vector<std::vector<int>> canon;
    std::vector<int> seq;
    auto dfs = [&](auto&& self, int slot) -> void {
        seq.push_back(slot);
        if (static_cast<int>(seq.size()) >= 2 && dv.head[slot] == dv.tail[seq[0]] &&
            slot % dv.m != seq[0] % dv.m) {
            canon.push_back(least_rotation(seq));
        }
        if (static_cast<int>(seq.size()) < max_len)
            for (int nxt : dv.out[slot])
                if (nxt >= seq[0]) self(self, nxt);
        seq.pop_back();
    };
    for (int s = 0; s < 2 * dv.m; ++s) dfs(dfs, s);

    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

    std::vector<EdgeWalk> cycles;
    for (const auto& word : canon) {
        if (!is_primitive_word(word)) continue;
        EdgeWalk w;
        w.kind = EdgeWalk::Kind::cycle;
        for (int slot : word) w.edges.push_back(slot % dv.m);
        cycles.push_back(std::move(w));
    }
    return cycles;
}

std::map<std::vector<int>, unsigned long long> backtrackless_tailless_closed_walks(
    const MultiGraph& g, int max_total_edges, int hard_cap) {
    if (max_total_edges > hard_cap)
        throw CapacityError("walk budget " + std::to_string(max_total_edges) +
                            " exceeds the bound " + std::to_string(hard_cap) +
                            " (raise hard_cap to override)");
    if (max_total_edges < 0) throw DomainError("negative walk budget");
    int m = static_cast<int>(g.edges.size());

    auto cycles = primitive_bt_cycles(g, max_total_edges);

    // Classes with the same edge-usage vector are interchangeable in a
    // union, so group them: choosing a multiset of reps classes from a group
    // of k has multichoose(k, reps) ways.  Grouping keeps the pass count at
    // the number of distinct usage vectors, not the (much larger) number of
    // classes.
    std::map<std::vector<int>, unsigned long long> groups;
    for (const auto& cyc : cycles) {
        std::vector<int> usage(m, 0);
        for (int e : cyc.edges) ++usage[e];
        ++groups[usage];
    }

    auto multichoose = [](unsigned long long k, int reps) {
        unsigned long long ways = 1;
        for (int i = 1; i <= reps; ++i) ways = ways * (k + i - 1) / i; // exact stepwise
        return ways;
    };

    std::map<std::vector<int>, unsigned long long> counts;
    counts[std::vector<int>(m, 0)] = 1;
    for (const auto& [usage, k] : groups) {
        int len = 0;
        for (int x : usage) len += x;
        std::map<std::vector<int>, unsigned long long> next;
        for (const auto& [vec, ways] : counts) {
            int used = 0;
            for (int x : vec) used += x;
            std::vector<int> cur = vec;
            for (int reps = 0; used + reps * len <= max_total_edges; ++reps) {
                if (reps > 0)
                    for (int e = 0; e < m; ++e) cur[e] = vec[e] + reps * usage[e];
                next[cur] += ways * multichoose(k, reps);
            }
        }
        counts = std::move(next);
    }
    return counts;
}

std::vector<EdgeWalk> euler_cycle_decomposition(const TannerGraph& t, const BitVector& c) {
    if (!is_bit_even(t)) throw DomainError("graph is not bit-even");
    if (static_cast<int>(c.size()) != t.n_bits)
        throw DimensionError("codeword length does not match bit count");
    BitVector s = syndrome(to_parity_matrix(t), c);
    if (weight(s) != 0) throw DomainError("vector is not a codeword");

    // Remaining edge multiset of the support subgraph, as adjacency with edge
    // indices.  Vertices: bits 0..n-1, then checks n..n+r-1.
    int m = static_cast<int>(t.edges.size());
    std::vector<std::uint8_t> alive(m, 0);
    std::vector<std::vector<std::pair<int, int>>> adj(t.n_bits + t.n_checks);
    for (int e = 0; e < m; ++e) {
        auto [i, j] = t.edges[e];
        if (!c[i]) continue;
        alive[e] = 1;
        adj[i].emplace_back(t.n_bits + j, e);
        adj[t.n_bits + j].emplace_back(i, e);
    }
    std::vector<std::size_t> cursor(adj.size(), 0);
    auto next_edge = [&](int v) -> std::pair<int, int> {
        while (cursor[v] < adj[v].size() && !alive[adj[v][cursor[v]].second]) ++cursor[v];
        if (cursor[v] == adj[v].size()) return {-1, -1};
        return adj[v][cursor[v]];
    };

    // Every vertex of the support subgraph has even degree, so tracing from
    // any live vertex must return to it; each trace is peeled off as one
    // cycle, splitting at the first repeated vertex.
    std::vector<EdgeWalk> cycles;
    for (int v0 = 0; v0 < static_cast<int>(adj.size()); ++v0) {
        while (next_edge(v0).first >= 0) {
            std::vector<int> vertex_trail{v0};
            std::vector<int> edge_trail;
            std::vector<int> pos(adj.size(), -1);
            pos[v0] = 0;
            int at = v0;
            while (true) {
                auto [to, e] = next_edge(at);
                if (e < 0)
                    throw InternalError("euler trace stalled at vertex " + std::to_string(at));
                alive[e] = 0;
                edge_trail.push_back(e);
                if (pos[to] >= 0) {
                    // Closed a cycle: emit the tail from the first visit of `to`.
                    EdgeWalk w;
                    w.kind = EdgeWalk::Kind::cycle;
                    w.edges.assign(edge_trail.begin() + pos[to], edge_trail.end());
                    cycles.push_back(std::move(w));
                    for (std::size_t k = pos[to] + 1; k < vertex_trail.size(); ++k)
                        pos[vertex_trail[k]] = -1;
                    vertex_trail.resize(pos[to] + 1);
                    edge_trail.resize(pos[to]);
                    at = to;
                    if (at == v0 && edge_trail.empty()) break;
                } else {
                    pos[to] = static_cast<int>(vertex_trail.size());
                    vertex_trail.push_back(to);
                    at = to;
                }
            }
        }
    }
    return cycles;
}

} // namespace pcw
