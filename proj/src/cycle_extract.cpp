#include "cyclepart/cycle_extract.hpp"

#include <algorithm>

#include "cyclepart/path_extract.hpp"

namespace cyclepart {

namespace {

// Close an A-to-A path through the hub vertex v (path endpoints both lie in
// N(v)). A single-vertex path yields an edge cycle.
Cycle close_through(const Path& p, int v) {
    if (p.size() == 1) return Cycle::edge(v, p[0]);
    Cycle c;
    c.seq = p;
    c.seq.push_back(v);
    return c;
}

VertexSet others_than(int n, int v) {
    VertexSet s;
    for (int w = 0; w < n; ++w)
        if (w != v) s.push_back(w);
    return s;
}

}  // namespace

Cycle cycle_simple(const Graph& g) {
    int n = g.order();
    if (max_degree(g).doubled <= n) return Cycle::empty_cycle();
    int v = -1;
    for (int w = 0; w < n; ++w)
        if (2 * g.degree(w) > n) {
            v = w;
            break;
        }
    auto sub = induced_subgraph(g, others_than(n, v));
    std::vector<int> newid(n, -1);
    for (size_t i = 0; i < sub.orig_ids.size(); ++i) newid[sub.orig_ids[i]] = static_cast<int>(i);
    VertexSet nv;
    for (int u : g.neighbours(v)) nv.push_back(newid[u]);
    std::sort(nv.begin(), nv.end());
    Path p = path_simple(sub.graph, nv, nv);
    for (int& x : p) x = sub.orig_ids[x];
    Cycle c = close_through(p, v);
    if (!validate_cycle(g, c) || !remainder_bound_holds(g, c, BoundKind::half()))
        throw InternalInvariant("cycle_simple failed its certificate");
    return c;
}

Cycle cycle_sparse(const Graph& g) {
    int n = g.order();
    if (max_degree(g).doubled <= n - 1) return Cycle::empty_cycle();
    int v = -1;
    for (int w = 0; w < n; ++w)
        if (2 * g.degree(w) >= n) {
            v = w;
            break;
        }
    auto sub = induced_subgraph(g, others_than(n, v));
    Cycle c;
    if (has_balanced_components(sub.graph)) {
        c = Cycle::vertex(v);
    } else {
        std::vector<int> newid(n, -1);
        for (size_t i = 0; i < sub.orig_ids.size(); ++i)
            newid[sub.orig_ids[i]] = static_cast<int>(i);
        VertexSet nv;
        for (int u : g.neighbours(v)) nv.push_back(newid[u]);
        std::sort(nv.begin(), nv.end());
        Path p = path_main(sub.graph, nv, nv);
        for (int& x : p) x = sub.orig_ids[x];
        c = close_through(p, v);
    }
    if (!validate_cycle(g, c) || !remainder_bound_holds(g, c, BoundKind::half_minus_one()))
        throw InternalInvariant("cycle_sparse failed its certificate");
    return c;
}

}  // namespace cyclepart
