#include "cyclepart/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace cyclepart {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 0) throw InvalidInput("negative vertex count");
    words_ = static_cast<size_t>((n + 63) / 64);
    rows_.assign(static_cast<size_t>(n) * words_, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InvalidInput("edge endpoint out of range");
        if (u == v) throw InvalidInput("self-loop");
        if (has_edge(u, v)) throw InvalidInput("duplicate edge");
        rows_[static_cast<size_t>(u) * words_ + static_cast<size_t>(v >> 6)] |= 1ull << (v & 63);
        rows_[static_cast<size_t>(v) * words_ + static_cast<size_t>(u >> 6)] |= 1ull << (u & 63);
        ++m_;
    }
    offs_.assign(n + 1, 0);
    for (auto [u, v] : edges) {
        ++offs_[u + 1];
        ++offs_[v + 1];
    }
    for (int v = 0; v < n; ++v) offs_[v + 1] += offs_[v];
    flat_.resize(2 * static_cast<size_t>(m_));
    std::vector<int> cursor(offs_.begin(), offs_.end() - 1);
    for (auto [u, v] : edges) {
        flat_[cursor[u]++] = v;
        flat_[cursor[v]++] = u;
    }
    for (int v = 0; v < n; ++v)
        std::sort(flat_.begin() + offs_[v], flat_.begin() + offs_[v + 1]);
}

Graph Graph::complete(int n) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, edges);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    std::vector<int> newid(g.order(), -1);
    for (size_t i = 0; i < s.size(); ++i) {
        g.check_vertex(s[i]);
        if (i > 0 && s[i] <= s[i - 1]) throw InvalidInput("vertex set not sorted/unique");
        newid[s[i]] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> edges;
    for (int v : s)
        for (int u : g.neighbours(v))
            if (u > v && newid[u] >= 0) edges.push_back({newid[v], newid[u]});
    InducedSubgraph out;
    out.graph = Graph(static_cast<int>(s.size()), edges);
    out.orig_ids = s;
    return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    std::vector<char> seen(g.order(), 0);
    for (int s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        VertexSet comp;
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int u : g.neighbours(v))
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

DegreeBound max_degree(const Graph& g) {
    if (g.order() == 0) return DegreeBound{-1};
    int best = 0;
    for (int v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
    return DegreeBound{2 * best};
}

bool validate_path(const Graph& g, const Path& p) {
    std::vector<char> seen(g.order(), 0);
    for (size_t i = 0; i < p.size(); ++i) {
        int v = p[i];
        if (v < 0 || v >= g.order()) return false;
        if (seen[v]) return false;
        seen[v] = 1;
        if (i > 0 && !g.has_edge(p[i - 1], v)) return false;
    }
    return true;
}

bool validate_cycle(const Graph& g, const Cycle& c) {
    switch (c.kind()) {
        case Cycle::Kind::Empty:
            return true;
        case Cycle::Kind::Vertex:
            return c.seq[0] >= 0 && c.seq[0] < g.order();
        case Cycle::Kind::Edge:
            return c.seq[0] >= 0 && c.seq[0] < g.order() && c.seq[1] >= 0 &&
                   c.seq[1] < g.order() && g.has_edge(c.seq[0], c.seq[1]);
        case Cycle::Kind::Proper: {
            if (!validate_path(g, c.seq)) return false;
            return g.has_edge(c.seq.back(), c.seq.front());
        }
    }
    return false;
}

namespace {

// Unit-capacity max flow on the vertex-split graph, capped at `cap`.
// Vertices are split into in-node 2v and out-node 2v+1.
struct VertexFlow {
    const Graph& g;
    int s, t;
    std::vector<std::vector<int>> to;      // adjacency of residual arcs
    std::vector<std::vector<int>> cap_;    // residual capacities
    std::vector<std::vector<int>> rev;     // index of the reverse arc

    VertexFlow(const Graph& graph, int source, int target) : g(graph), s(source), t(target) {
        int N = 2 * g.order();
        to.assign(N, {});
        cap_.assign(N, {});
        rev.assign(N, {});
        for (int v = 0; v < g.order(); ++v) add_arc(2 * v, 2 * v + 1, v == s || v == t ? 1 << 20 : 1);
        for (int v = 0; v < g.order(); ++v)
            for (int u : g.neighbours(v)) add_arc(2 * v + 1, 2 * u, 1 << 20);
    }

    void add_arc(int a, int b, int c) {
        to[a].push_back(b);
        cap_[a].push_back(c);
        rev[a].push_back(static_cast<int>(to[b].size()));
        to[b].push_back(a);
        cap_[b].push_back(0);
        rev[b].push_back(static_cast<int>(to[a].size()) - 1);
    }

    // One augmenting path via BFS; returns true if found.
    bool augment() {
        int N = static_cast<int>(to.size());
        std::vector<int> pre_node(N, -1), pre_arc(N, -1);
        std::queue<int> q;
        q.push(2 * s + 1);
        pre_node[2 * s + 1] = 2 * s + 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            if (v == 2 * t) break;
            for (size_t i = 0; i < to[v].size(); ++i) {
                int u = to[v][i];
                if (cap_[v][i] > 0 && pre_node[u] < 0) {
                    pre_node[u] = v;
                    pre_arc[u] = static_cast<int>(i);
                    q.push(u);
                }
            }
        }
        if (pre_node[2 * t] < 0) return false;
        for (int v = 2 * t; v != 2 * s + 1; v = pre_node[v]) {
            int p = pre_node[v], i = pre_arc[v];
            cap_[p][i] -= 1;
            cap_[to[p][i]][rev[p][i]] += 1;
        }
        return true;
    }

    int max_flow_capped(int cap) {
        int f = 0;
        while (f < cap && augment()) ++f;
        return f;
    }

    // After a capped run that did NOT reach the cap, extract the vertex cut:
    // split-arcs (2v -> 2v+1) saturated with 2v reachable and 2v+1 not.
    VertexSet min_cut() {
        int N = static_cast<int>(to.size());
        std::vector<char> reach(N, 0);
        std::queue<int> q;
        q.push(2 * s + 1);
        reach[2 * s + 1] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (size_t i = 0; i < to[v].size(); ++i)
                if (cap_[v][i] > 0 && !reach[to[v][i]]) {
                    reach[to[v][i]] = 1;
                    q.push(to[v][i]);
                }
        }
        VertexSet cut;
        for (int v = 0; v < g.order(); ++v)
            if (v != s && v != t && reach[2 * v] && !reach[2 * v + 1]) cut.push_back(v);
        return cut;
    }
};

int st_cut_capped(const Graph& g, int s, int t, int cap, VertexSet* cut_out) {
    VertexFlow f(g, s, t);
    int fl = f.max_flow_capped(cap);
    if (fl < cap && cut_out) *cut_out = f.min_cut();
    return fl;
}

bool is_complete(const Graph& g) {
    return static_cast<long long>(g.edge_count()) * 2 ==
           static_cast<long long>(g.order()) * (g.order() - 1);
}

}  // namespace

bool is_k_connected(const Graph& g, int k) {
    if (k <= 0) return true;
    int n = g.order();
    if (is_complete(g)) return n - 1 >= k;
    if (n <= k) return false;  // non-complete with kappa <= n-2 < k
    // Any cut of size < k misses at least one of k+1 fixed vertices, so flows
    // from those sources against all their non-neighbours cover every cut.
    int sources = std::min(n, k + 1);
    for (int s = 0; s < sources; ++s) {
        for (int t = 0; t < n; ++t) {
            if (t == s || g.has_edge(s, t)) continue;
            if (st_cut_capped(g, s, t, k, nullptr) < k) return false;
        }
    }
    return true;
}

bool find_cut_below(const Graph& g, int k, VertexSet& cut_out) {
    int n = g.order();
    if (is_complete(g)) return false;  // complete graphs have no cutset at all
    if (n <= k) {
        // Small non-complete: everything except a non-adjacent pair cuts.
        for (int s = 0; s < n; ++s)
            for (int t = s + 1; t < n; ++t) {
                if (g.has_edge(s, t)) continue;
                cut_out.clear();
                for (int v = 0; v < n; ++v)
                    if (v != s && v != t) cut_out.push_back(v);
                return true;
            }
        return false;
    }
    int sources = std::min(n, k + 1);
    for (int s = 0; s < sources; ++s)
        for (int t = 0; t < n; ++t) {
            if (t == s || g.has_edge(s, t)) continue;
            VertexSet cut;
            if (st_cut_capped(g, s, t, k, &cut) < k) {
                cut_out = cut;
                return true;
            }
        }
    return false;
}

int vertex_connectivity(const Graph& g) {
    int n = g.order();
    if (n == 0) return 0;
    if (is_complete(g)) return n - 1;
    int best = n - 1;
    // kappa = min over non-adjacent pairs; any minimum cut misses one of the
    // first best+1 sources, so scanning sources until the index passes the
    // current minimum is exhaustive.
    for (int s = 0; s <= best && s < n; ++s)
        for (int t = 0; t < n; ++t) {
            if (t == s || g.has_edge(s, t)) continue;
            best = std::min(best, st_cut_capped(g, s, t, best, nullptr));
        }
    return best;
}

}  // namespace cyclepart
