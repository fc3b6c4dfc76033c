#include "cyclepart/path_extract.hpp"

#include <algorithm>
#include <optional>

namespace cyclepart {

namespace {

using detail::SubgraphView;
using Mask = std::vector<char>;

int count_mask(const SubgraphView& vw, const Mask& m) {
    int c = 0;
    for (int v = 0; v < vw.host().order(); ++v)
        if (vw.alive(v) && m[v]) ++c;
    return c;
}

int smallest_in(const SubgraphView& vw, const Mask& m) {
    for (int v = 0; v < vw.host().order(); ++v)
        if (vw.alive(v) && m[v]) return v;
    return -1;
}

Mask neighbour_mask(const SubgraphView& vw, int v) {
    Mask m(vw.host().order(), 0);
    for (int u : vw.host().neighbours(v))
        if (vw.alive(u)) m[u] = 1;
    return m;
}

Mask intersect(const Mask& a, const Mask& b) {
    Mask m(a.size());
    for (size_t i = 0; i < a.size(); ++i) m[i] = a[i] && b[i];
    return m;
}

// Connected components of the alive subgraph, as sorted vertex lists.
std::vector<std::vector<int>> view_components(const SubgraphView& vw) {
    int n = vw.host().order();
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (!vw.alive(s) || seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int u : vw.host().neighbours(v))
                if (vw.alive(u) && !seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

// Balanced split of the alive subgraph, if one exists.
std::optional<std::pair<std::vector<int>, std::vector<int>>> view_balanced(
    const SubgraphView& vw) {
    auto comps = view_components(vw);
    int n = vw.order();
    int target = n / 2;
    std::vector<int> from(target + 1, -1);
    std::vector<char> reach(target + 1, 0);
    reach[0] = 1;
    for (size_t i = 0; i < comps.size(); ++i) {
        int sz = static_cast<int>(comps[i].size());
        for (int s = target - sz; s >= 0; --s)
            if (reach[s] && !reach[s + sz]) {
                reach[s + sz] = 1;
                from[s + sz] = static_cast<int>(i);
            }
    }
    if (!reach[target]) return std::nullopt;
    std::vector<char> inx(comps.size(), 0);
    for (int s = target; s > 0;) {
        int i = from[s];
        inx[i] = 1;
        s -= static_cast<int>(comps[i].size());
    }
    std::vector<int> x, y;
    for (size_t i = 0; i < comps.size(); ++i) {
        auto& dst = inx[i] ? x : y;
        dst.insert(dst.end(), comps[i].begin(), comps[i].end());
    }
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return std::make_pair(std::move(x), std::move(y));
}

// 2*Delta of the alive subgraph minus the vertices of p.
int delta2_without_path(const SubgraphView& vw, const Path& p) {
    const Graph& g = vw.host();
    std::vector<char> off(g.order(), 0);
    for (int v : p) off[v] = 1;
    int best = -1;
    for (int v = 0; v < g.order(); ++v) {
        if (!vw.alive(v) || off[v]) continue;
        int d = 0;
        for (int u : g.neighbours(v)) d += vw.alive(u) && !off[u];
        best = std::max(best, 2 * d);
    }
    return best;
}

// Valid path in the alive subgraph, front in A, back in B, remainder bound
// 2*Delta <= |rem| - 1.
bool leaf_ok(const SubgraphView& vw, const Path& p, const Mask& a, const Mask& b) {
    if (p.empty()) return false;
    std::vector<char> seen(vw.host().order(), 0);
    for (size_t i = 0; i < p.size(); ++i) {
        int v = p[i];
        if (v < 0 || v >= vw.host().order() || !vw.alive(v) || seen[v]) return false;
        seen[v] = 1;
        if (i > 0 && !vw.host().has_edge(p[i - 1], v)) return false;
    }
    if (!a[p.front()] || !b[p.back()]) return false;
    int rem = vw.order() - static_cast<int>(p.size());
    return delta2_without_path(vw, p) <= rem - 1;
}

// First prescribed candidate that forms a valid certified path.
Path first_leaf(const SubgraphView& vw, const std::vector<Path>& candidates, const Mask& a,
                const Mask& b, const char* where) {
    for (const Path& p : candidates)
        if (leaf_ok(vw, p, a, b)) return p;
    throw InternalInvariant(std::string("no prescribed sequence certifies at ") + where);
}

// Variants of prefix+middles+suffix where `middles` may be contracted by
// coincidences: all order-preserving sublists of middles, longest first.
std::vector<Path> contractions(const std::vector<int>& prefix, const std::vector<int>& middles,
                               const std::vector<int>& suffix) {
    std::vector<Path> out;
    int k = static_cast<int>(middles.size());
    std::vector<std::pair<int, uint32_t>> masks;
    for (uint32_t m = 0; m < (1u << k); ++m)
        masks.push_back({-__builtin_popcount(m), m});
    std::sort(masks.begin(), masks.end());
    for (auto [negpop, m] : masks) {
        Path p = prefix;
        for (int i = 0; i < k; ++i)
            if (m >> i & 1) p.push_back(middles[i]);
        p.insert(p.end(), suffix.begin(), suffix.end());
        // Drop exact duplicates produced by coincident vertices.
        Path q;
        for (int v : p)
            if (std::find(q.begin(), q.end(), v) == q.end()) q.push_back(v);
        if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(std::move(q));
    }
    return out;
}

Path reversed(Path p) {
    std::reverse(p.begin(), p.end());
    return p;
}

int max_degree2_view(const SubgraphView& vw) { return vw.max_degree2(); }

int induced_delta2(const SubgraphView& vw, const std::vector<int>& set) {
    if (set.empty()) return -1;
    std::vector<char> in(vw.host().order(), 0);
    for (int v : set) in[v] = 1;
    int best = 0;
    for (int v : set) {
        int d = 0;
        for (int u : vw.host().neighbours(v)) d += vw.alive(u) && in[u];
        best = std::max(best, d);
    }
    return 2 * best;
}

Path one_special_rec(SubgraphView& vw, int v, const Mask& a, const Mask& b);
Path two_special_rec(SubgraphView& vw, int u, int v, Mask a, Mask b);

// ------------------------------------------------------------------
// A-B path leaving 2*Delta(G\P) <= |G\P| (the easy bound).
Path simple_rec(SubgraphView& vw, const Mask& a, const Mask& b) {
    int n = vw.order();
    if (n <= 0) throw InternalInvariant("simple_rec on empty view");
    Mask ab = intersect(a, b);
    if (n <= 2 || max_degree2_view(vw) <= n - 1) {
        int w = smallest_in(vw, ab);
        if (w < 0) throw InternalInvariant("A and B do not intersect in simple base case");
        return {w};
    }
    int v = -1;
    for (int x = 0; x < vw.host().order(); ++x)
        if (vw.alive(x) && 2 * vw.degree(x) >= n) {
            v = x;
            break;
        }
    if (v < 0) throw InternalInvariant("no high-degree vertex in simple_rec");

    if (a[v]) {
        Mask a2 = b;
        a2[v] = 0;
        Mask b2 = neighbour_mask(vw, v);
        vw.remove(v);
        Path p = simple_rec(vw, a2, b2);
        vw.restore(v);
        p.push_back(v);  // ends adjacent to v; now B ... v
        return reversed(p);
    }
    if (b[v]) {
        Mask b2 = neighbour_mask(vw, v);
        vw.remove(v);
        Path p = simple_rec(vw, a, b2);
        vw.restore(v);
        p.push_back(v);
        return p;
    }
    Mask na = intersect(neighbour_mask(vw, v), a);
    int u = smallest_in(vw, na);
    if (u < 0) throw InternalInvariant("N(v) misses A in simple_rec case (iii)");
    Mask a2 = neighbour_mask(vw, v);
    a2[u] = 0;
    Mask b2 = b;
    b2[u] = 0;
    vw.remove(v);
    vw.remove(u);
    Path p = simple_rec(vw, a2, b2);
    vw.restore(u);
    vw.restore(v);
    Path out{u, v};
    out.insert(out.end(), p.begin(), p.end());
    return out;
}

// ------------------------------------------------------------------
// Main recursion: A-B path leaving 2*Delta(G\P) <= |G\P|-1, assuming the
// alive subgraph has no balanced components.
Path main_rec(SubgraphView& vw, const Mask& a, const Mask& b) {
    int n = vw.order();
    const Graph& g = vw.host();

    auto certified = [&](Path p) {
        int rem = vw.order() - static_cast<int>(p.size());
        if (delta2_without_path(vw, p) > rem - 1)
            throw InternalInvariant("main_rec produced uncertified path");
        return p;
    };

    if (n < 2) throw InternalInvariant("main_rec needs |G| >= 2");
    if (n <= 3) {
        Mask ab = intersect(a, b);
        for (int w = 0; w < g.order(); ++w)
            if (vw.alive(w) && ab[w] && leaf_ok(vw, {w}, a, b)) return {w};
        for (int x = 0; x < g.order(); ++x) {
            if (!vw.alive(x) || !a[x]) continue;
            for (int y : g.neighbours(x))
                if (vw.alive(y) && b[y] && leaf_ok(vw, {x, y}, a, b)) return {x, y};
        }
        // A three-vertex graph may need the full path (e.g. a path whose A
        // endpoint is its only A vertex).
        if (n == 3) {
            auto alive = vw.alive_vertices();
            std::sort(alive.begin(), alive.end());
            do {
                Path cand(alive.begin(), alive.end());
                if (leaf_ok(vw, cand, a, b)) return cand;
            } while (std::next_permutation(alive.begin(), alive.end()));
        }
        throw InternalInvariant("main_rec base case has no qualifying path");
    }

    int x = -1;
    for (int w = 0; w < g.order(); ++w)
        if (vw.alive(w) && 2 * vw.degree(w) >= n - 1) {
            x = w;
            break;
        }

    if (x >= 0) {
        // Case 1: a vertex of degree >= (n-1)/2 exists.
        if (a[x]) {
            Mask a2 = b;
            a2[x] = 0;
            Mask b2 = neighbour_mask(vw, x);
            vw.remove(x);
            bool balanced = view_balanced(vw).has_value();
            if (balanced) {
                vw.restore(x);
                return certified(one_special_rec(vw, x, a, b));
            }
            Path p = main_rec(vw, a2, b2);
            vw.restore(x);
            p.push_back(x);
            return certified(reversed(p));
        }
        if (b[x]) {
            Mask b2 = neighbour_mask(vw, x);
            vw.remove(x);
            bool balanced = view_balanced(vw).has_value();
            if (balanced) {
                vw.restore(x);
                return certified(reversed(one_special_rec(vw, x, b, a)));
            }
            Path p = main_rec(vw, a, b2);
            vw.restore(x);
            p.push_back(x);
            return certified(p);
        }
        // x outside A and B.
        Mask nx = neighbour_mask(vw, x);
        int y = smallest_in(vw, intersect(nx, a));
        if (y >= 0) {
            Mask a2 = nx;
            a2[y] = 0;
            Mask b2 = b;
            b2[y] = 0;
            vw.remove(x);
            vw.remove(y);
            bool balanced = view_balanced(vw).has_value();
            vw.restore(y);
            vw.restore(x);
            if (balanced) return certified(two_special_rec(vw, y, x, a, b));
            vw.remove(x);
            vw.remove(y);
            Path p = main_rec(vw, a2, b2);
            vw.restore(y);
            vw.restore(x);
            Path out{y, x};
            out.insert(out.end(), p.begin(), p.end());
            return certified(out);
        }
        int z = smallest_in(vw, intersect(nx, b));
        if (z < 0) throw InternalInvariant("N(x) misses both A and B in main_rec");
        Mask a2 = nx;
        a2[z] = 0;
        vw.remove(x);
        vw.remove(z);
        bool balanced = view_balanced(vw).has_value();
        vw.restore(z);
        vw.restore(x);
        if (balanced) return certified(reversed(two_special_rec(vw, z, x, b, a)));
        vw.remove(x);
        vw.remove(z);
        Path p = main_rec(vw, a2, a);
        vw.restore(z);
        vw.restore(x);
        Path out{z, x};
        out.insert(out.end(), p.begin(), p.end());
        return certified(reversed(out));
    }

    // Case 2: Delta(G) < (n-1)/2.
    Mask ab = intersect(a, b);
    int w = smallest_in(vw, ab);
    if (w >= 0) return certified({w});

    int xd = -1;
    for (int v = 0; v < g.order(); ++v)
        if (vw.alive(v) && 2 * vw.degree(v) == n - 2) {
            xd = v;
            break;
        }
    if (xd >= 0) {
        Mask a2 = neighbour_mask(vw, xd);
        bool x_in_b = b[xd];
        const Mask& b2 = x_in_b ? a : b;
        vw.remove(xd);
        bool balanced = view_balanced(vw).has_value();
        if (balanced) {
            vw.restore(xd);
            Path p = x_in_b ? one_special_rec(vw, xd, b, a) : one_special_rec(vw, xd, a, b);
            return certified(x_in_b ? reversed(p) : p);
        }
        Path p = main_rec(vw, a2, b2);
        vw.restore(xd);
        Path out{xd};
        out.insert(out.end(), p.begin(), p.end());
        return certified(x_in_b ? reversed(out) : out);
    }

    for (int v = 0; v < g.order(); ++v) {
        if (!vw.alive(v) || !a[v]) continue;
        for (int u : g.neighbours(v))
            if (vw.alive(u) && b[u]) return certified({v, u});
    }
    throw InternalInvariant("no A-B edge in sparse case of main_rec");
}

// ------------------------------------------------------------------
// One-vertex special case: G-v has balanced components.
Path one_special_rec(SubgraphView& vw, int v, const Mask& a, const Mask& b) {
    const Graph& g = vw.host();
    int n = vw.order();
    const char* where = "one_special";

    if (b[v]) return first_leaf(vw, {{v}}, a, b, where);

    vw.remove(v);
    auto split = view_balanced(vw);
    vw.restore(v);
    if (!split) throw InternalInvariant("one_special: G-v not balanced");
    std::vector<int> X = split->first, Y = split->second;  // |X| <= |Y|

    Mask nv = neighbour_mask(vw, v);
    auto in_set = [&](const std::vector<int>& s, const Mask& m) {
        std::vector<int> out;
        for (int w : s)
            if (m[w]) out.push_back(w);
        return out;
    };
    auto pick = [&](const std::vector<int>& s) { return s.empty() ? -1 : s[0]; };

    if (n % 2 == 1) {
        // |X| = |Y| = (n-1)/2.
        if (in_set(X, nv).empty() || in_set(Y, nv).empty())
            throw InternalInvariant("one_special odd: v must see both halves");
        int vb = pick(in_set(X, intersect(nv, b)));
        if (vb < 0) vb = pick(in_set(Y, intersect(nv, b)));
        if (vb >= 0) return first_leaf(vw, {{v, vb}}, a, b, where);

        // Case 2: B and N(v)+v partition the graph.
        auto find_edge_within = [&](const std::vector<int>& side) -> std::pair<int, int> {
            std::vector<char> in_b_side(g.order(), 0);
            for (int w : side)
                if (b[w]) in_b_side[w] = 1;
            for (int ux : side) {
                if (!nv[ux]) continue;
                for (int w : g.neighbours(ux))
                    if (vw.alive(w) && in_b_side[w]) return {ux, w};
            }
            return {-1, -1};
        };
        auto [ux, bx] = find_edge_within(X);
        if (ux < 0) {
            std::swap(X, Y);
            std::tie(ux, bx) = find_edge_within(X);
        }
        if (ux < 0) throw InternalInvariant("one_special odd case 2: no N(v)-B edge inside a half");

        int dX2 = induced_delta2(vw, X), dY2 = induced_delta2(vw, Y);
        int szX = static_cast<int>(X.size()), szY = static_cast<int>(Y.size());
        if (dY2 < 2 * (szY - 1)) return first_leaf(vw, {{v, ux, bx}}, a, b, where);
        // Y has a universal vertex, hence is connected; find its N(v)-B edge.
        auto [uy, by] = find_edge_within(Y);
        if (uy < 0) throw InternalInvariant("one_special odd 2.x: connected half has no edge");
        if (dX2 < 2 * (szX - 1)) return first_leaf(vw, {{v, uy, by}}, a, b, where);

        // Case 2.2: both halves have a universal vertex.
        auto universal_in = [&](const std::vector<int>& side) {
            std::vector<char> in(g.order(), 0);
            for (int w : side) in[w] = 1;
            for (int w : side) {
                int d = 0;
                for (int u2 : g.neighbours(w)) d += vw.alive(u2) && in[u2];
                if (d == static_cast<int>(side.size()) - 1) return w;
            }
            return -1;
        };
        int ax = pick(in_set(X, a));
        if (ax >= 0) {
            int xx = universal_in(X);
            int vx = pick(in_set(X, nv));
            return first_leaf(vw, contractions({ax}, {xx, vx}, {v, uy, by}), a, b, where);
        }
        int ay = pick(in_set(Y, a));
        if (ay < 0) throw InternalInvariant("one_special odd 2.2: A misses both halves");
        int yy = universal_in(Y);
        int vy = pick(in_set(Y, nv));
        return first_leaf(vw, contractions({ay}, {yy, vy}, {v, ux, bx}), a, b, where);
    }

    // Even order: |X| = n/2 - 1, |Y| = n/2.
    int vy = pick(in_set(Y, nv));
    if (vy < 0) throw InternalInvariant("one_special even: v must see the larger half");
    int szY = static_cast<int>(Y.size());
    int dY2 = induced_delta2(vw, Y);

    int c1 = pick(in_set(Y, intersect(nv, b)));
    if (c1 >= 0) return first_leaf(vw, {{v, c1}}, a, b, where);

    int vb = pick(in_set(X, intersect(nv, b)));
    if (vb >= 0) {
        if (dY2 < 2 * (szY - 1)) return first_leaf(vw, {{v, vb}}, a, b, where);
        auto universal_in = [&](const std::vector<int>& side) {
            std::vector<char> in(g.order(), 0);
            for (int w : side) in[w] = 1;
            for (int w : side) {
                int d = 0;
                for (int u2 : g.neighbours(w)) d += vw.alive(u2) && in[u2];
                if (d == static_cast<int>(side.size()) - 1) return w;
            }
            return -1;
        };
        int yy = universal_in(Y);
        int ay = pick(in_set(Y, a));
        if (ay >= 0) return first_leaf(vw, contractions({ay}, {yy, vy}, {v, vb}), a, b, where);
        int by = pick(in_set(Y, b));
        if (by < 0) throw InternalInvariant("one_special even 2.2.2: B misses Y");
        return first_leaf(vw, contractions({vb, v}, {vy, yy}, {by}), a, b, where);
    }

    // Case 3: N(v) and B are disjoint.
    std::vector<char> in_nv(g.order(), 0);
    for (int w = 0; w < g.order(); ++w) in_nv[w] = nv[w];
    auto find_nv_b_edge = [&](const std::vector<int>& bside) -> std::pair<int, int> {
        for (int bw : bside) {
            if (!b[bw]) continue;
            for (int u2 : g.neighbours(bw))
                if (vw.alive(u2) && in_nv[u2]) return {u2, bw};
        }
        return {-1, -1};
    };
    auto [vp, by] = find_nv_b_edge(Y);
    if (vp >= 0) return first_leaf(vw, {{v, vp, by}}, a, b, where);
    // Prefer an X-side witness for the structure-(ii) shape.
    auto [vx2, bx2] = find_nv_b_edge(X);
    if (vx2 < 0) throw InternalInvariant("one_special even case 3: no N(v)-B edge at all");
    return first_leaf(vw, {{v, vx2, bx2}}, a, b, where);
}

// ------------------------------------------------------------------
// Two-vertex special case: G-{u,v} has balanced components, uv an edge.
Path two_special_rec(SubgraphView& vw, int u, int v, Mask a, Mask b) {
    const Graph& g = vw.host();
    const char* where = "two_special";
    bool output_reversed = false;

    for (int attempt = 0; attempt < 2; ++attempt) {
        int n = vw.order();
        vw.remove(u);
        vw.remove(v);
        auto split = view_balanced(vw);
        vw.restore(v);
        vw.restore(u);
        if (!split) throw InternalInvariant("two_special: G-{u,v} not balanced");
        std::vector<int> X = split->first, Y = split->second;  // |X| <= |Y|

        Mask nv = neighbour_mask(vw, v);
        Mask nu = neighbour_mask(vw, u);
        auto in_set = [&](const std::vector<int>& s, const Mask& m) {
            std::vector<int> out;
            for (int w : s)
                if (m[w]) out.push_back(w);
            return out;
        };
        auto pick = [&](const std::vector<int>& s) { return s.empty() ? -1 : s[0]; };
        auto maybe_rev = [&](Path p) { return output_reversed ? reversed(p) : p; };

        if (n % 2 == 0) {
            Mask nvmu = nv;
            nvmu[u] = 0;
            int vb = smallest_in(vw, intersect(nvmu, b));
            if (vb >= 0) return maybe_rev(first_leaf(vw, {{u, v, vb}}, a, b, where));
            return maybe_rev(first_leaf(vw, {{u}}, a, b, where));
        }

        // Odd order: |X| = (n-3)/2, |Y| = (n-1)/2.
        int by_nv = pick(in_set(Y, intersect(nv, b)));
        if (by_nv >= 0) return maybe_rev(first_leaf(vw, {{u, v, by_nv}}, a, b, where));

        int bx = pick(in_set(X, intersect(nv, b)));
        if (bx >= 0) {
            // Case 2.
            int szY = static_cast<int>(Y.size());
            int dY2 = induced_delta2(vw, Y);
            if (dY2 < 2 * (szY - 1))
                return maybe_rev(first_leaf(vw, {{u, v, bx}}, a, b, where));
            auto universal_in = [&](const std::vector<int>& side) {
                std::vector<char> in(g.order(), 0);
                for (int w : side) in[w] = 1;
                for (int w : side) {
                    int d = 0;
                    for (int u2 : g.neighbours(w)) d += vw.alive(u2) && in[u2];
                    if (d == static_cast<int>(side.size()) - 1) return w;
                }
                return -1;
            };
            int y = universal_in(Y);

            int uy = pick(in_set(Y, nu));
            if (uy >= 0) {
                // Case 2.1.
                int ay = pick(in_set(Y, a));
                if (ay >= 0)
                    return maybe_rev(
                        first_leaf(vw, contractions({ay}, {y, uy}, {u, v, bx}), a, b, where));
                // 2.1.2: exchange the roles of A and B; b_x lands in A.
                int ay2 = pick(in_set(Y, b));
                if (ay2 < 0) throw InternalInvariant("two_special 2.1.2: B misses Y");
                return maybe_rev(reversed(
                    first_leaf(vw, contractions({ay2}, {y, uy}, {u, v, bx}), b, a, where)));
            }

            // Case 2.2: N(u) misses Y.
            int vy = pick(in_set(Y, nv));
            if (vy < 0) throw InternalInvariant("two_special 2.2: N(v) misses Y");

            // Work with star-roles so the A<->B, u<->b_x exchange is uniform.
            const Mask* A_star = &a;
            const Mask* B_star = &b;
            int u_star = u, bx_star = bx;
            bool swapped = false;
            if (in_set(Y, b).empty()) {
                A_star = &b;
                B_star = &a;
                u_star = bx;
                bx_star = u;
                swapped = true;
                if (in_set(Y, *B_star).empty())
                    throw InternalInvariant("two_special 2.2: both A and B miss Y");
            }
            auto finish = [&](Path p) { return maybe_rev(swapped ? reversed(p) : p); };
            int b_y = pick(in_set(Y, *B_star));

            int szX = static_cast<int>(X.size());
            int dX2 = induced_delta2(vw, X);
            if (dX2 < 2 * (szX - 1))
                return finish(
                    first_leaf(vw, contractions({u_star, v}, {vy, y}, {b_y}), *A_star, *B_star,
                               where));

            // Delta(X) = |X|-1: X is connected.
            int x = -1;
            for (int w : X)
                if (w != bx_star && g.has_edge(bx_star, w)) {
                    x = w;
                    break;
                }
            int ay = pick(in_set(Y, *A_star));
            if (ay < 0) {
                // 2.2.1: A fills X + u.
                std::vector<Path> cands;
                if (x >= 0)
                    for (auto& c : contractions({x, bx_star, v}, {vy, y}, {b_y})) cands.push_back(c);
                for (auto& c : contractions({bx_star, v}, {vy, y}, {b_y})) cands.push_back(c);
                return finish(first_leaf(vw, cands, *A_star, *B_star, where));
            }
            // 2.2.2.
            if (ay == vy || ay == y || vy == y) {
                return finish(first_leaf(vw, {{ay, vy, v, bx_star}, {ay, v, bx_star}}, *A_star,
                                         *B_star, where));
            }
            std::vector<int> x_trans;  // X - b_x + u
            for (int w : X)
                if (w != bx_star) x_trans.push_back(w);
            x_trans.push_back(u_star);
            int dT2 = induced_delta2(vw, x_trans);
            if (dT2 < 2 * (static_cast<int>(x_trans.size()) - 1))
                return finish(first_leaf(vw, {{ay, y, vy, v, bx_star}}, *A_star, *B_star, where));
            // u has a neighbour u_x in X among N(x)+x-b_x.
            std::vector<Path> cands;
            for (int ux2 : X) {
                if (ux2 == bx_star) continue;
                if (!g.has_edge(u_star, ux2)) continue;
                bool near_x = x >= 0 && (ux2 == x || g.has_edge(ux2, x));
                if (!near_x) continue;
                if (ux2 == x)
                    cands.push_back({ay, y, vy, v, u_star, ux2, bx_star});
                else
                    cands.push_back({ay, y, vy, v, u_star, ux2, x, bx_star});
            }
            // Prescribed shorter shapes as fallback.
            for (auto& c : contractions({ay}, {y, vy}, {v, bx_star})) cands.push_back(c);
            return finish(first_leaf(vw, cands, *A_star, *B_star, where));
        }

        // Case 3: N(v) ∩ B ⊆ {u}.
        int cb = count_mask(vw, b);
        if (b[u] && 2 * cb == n - 1) {
            std::swap(a, b);
            output_reversed = !output_reversed;
            continue;  // restart with roles exchanged
        }
        std::vector<char> b_minus_u(g.order(), 0);
        for (int w = 0; w < g.order(); ++w) b_minus_u[w] = b[w] && w != u && vw.alive(w);
        // Edge between B-u and N(v), preferring B ∩ Y.
        auto find_edge_to_nv = [&](const std::vector<int>& side) -> std::pair<int, int> {
            for (int bw : side) {
                if (!b_minus_u[bw]) continue;
                for (int u2 : g.neighbours(bw))
                    if (vw.alive(u2) && nv[u2]) return {u2, bw};
            }
            return {-1, -1};
        };
        auto [vp, byy] = find_edge_to_nv(Y);
        if (vp >= 0) {
            if (vp != u) return maybe_rev(first_leaf(vw, {{u, v, vp, byy}}, a, b, where));
            return maybe_rev(first_leaf(vw, {{u, byy}}, a, b, where));
        }
        auto [vp2, bxx] = find_edge_to_nv(X);
        if (vp2 < 0) throw InternalInvariant("two_special case 3: no B-N(v) edge");
        if (vp2 != u) return maybe_rev(first_leaf(vw, {{u, v, vp2, bxx}}, a, b, where));
        return maybe_rev(first_leaf(vw, {{u, bxx}}, a, b, where));
    }
    throw InternalInvariant("two_special: role exchange did not terminate");
}

Mask to_mask(const Graph& g, const VertexSet& s) {
    Mask m(g.order(), 0);
    for (int v : s) {
        g.check_vertex(v);
        m[v] = 1;
    }
    return m;
}

void require(bool cond, const char* msg) {
    if (!cond) throw InvalidInput(msg);
}

}  // namespace

Path path_simple(const Graph& g, const VertexSet& a, const VertexSet& b) {
    int n = g.order();
    require(n >= 1, "path_simple: empty graph");
    require(2 * static_cast<int>(a.size()) >= n, "path_simple: |A| < |G|/2");
    require(2 * static_cast<int>(b.size()) > n, "path_simple: |B| <= |G|/2");
    SubgraphView vw(g);
    Mask ma = to_mask(g, a), mb = to_mask(g, b);
    Path p = simple_rec(vw, ma, mb);
    if (!validate_path(g, p) || p.empty() || !ma[p.front()] || !mb[p.back()])
        throw InternalInvariant("path_simple output malformed");
    int rem = n - static_cast<int>(p.size());
    if (delta2_without_path(vw, p) > rem)
        throw InternalInvariant("path_simple bound violated");
    return p;
}

Path path_main(const Graph& g, const VertexSet& a, const VertexSet& b) {
    int n = g.order();
    require(n >= 2, "path_main: |G| < 2");
    require(!has_balanced_components(g).has_value(), "path_main: G has balanced components");
    require(2 * static_cast<int>(a.size()) >= n - 1, "path_main: |A| < (|G|-1)/2");
    require(2 * static_cast<int>(b.size()) >= n, "path_main: |B| < |G|/2");
    SubgraphView vw(g);
    Mask ma = to_mask(g, a), mb = to_mask(g, b);
    Path p = main_rec(vw, ma, mb);
    if (!validate_path(g, p) || p.empty() || !ma[p.front()] || !mb[p.back()])
        throw InternalInvariant("path_main output malformed");
    return p;
}

Path path_one_special(const Graph& g, int v, const VertexSet& a, const VertexSet& b) {
    int n = g.order();
    g.check_vertex(v);
    require(n >= 4, "path_one_special: |G| < 4");
    require(!has_balanced_components(g).has_value(), "path_one_special: G balanced");
    require(2 * g.degree(v) >= n - 2, "path_one_special: d(v) too small");
    require(2 * static_cast<int>(a.size()) >= n - 1, "path_one_special: |A| too small");
    require(2 * static_cast<int>(b.size()) >= n - 1, "path_one_special: |B| too small");
    Mask ma = to_mask(g, a), mb = to_mask(g, b);
    require(ma[v], "path_one_special: v not in A");
    {
        VertexSet others;
        for (int w = 0; w < n; ++w)
            if (w != v) others.push_back(w);
        auto sub = induced_subgraph(g, others);
        require(has_balanced_components(sub.graph).has_value(),
                "path_one_special: G-v not balanced");
    }
    SubgraphView vw(g);
    Path p = one_special_rec(vw, v, ma, mb);
    if (!validate_path(g, p) || p.empty() || !ma[p.front()] || !mb[p.back()])
        throw InternalInvariant("path_one_special output malformed");
    return p;
}

Path path_two_special(const Graph& g, int u, int v, const VertexSet& a, const VertexSet& b) {
    int n = g.order();
    g.check_vertex(u);
    g.check_vertex(v);
    require(n >= 4, "path_two_special: |G| < 4");
    require(!has_balanced_components(g).has_value(), "path_two_special: G balanced");
    require(g.has_edge(u, v), "path_two_special: uv not an edge");
    require(2 * g.degree(v) >= n - 1, "path_two_special: d(v) too small");
    require(2 * static_cast<int>(a.size()) >= n - 1, "path_two_special: |A| too small");
    require(2 * static_cast<int>(b.size()) >= n - 1, "path_two_special: |B| too small");
    require(2 * static_cast<int>(std::max(a.size(), b.size())) >= static_cast<size_t>(n),
            "path_two_special: max(|A|,|B|) too small");
    Mask ma = to_mask(g, a), mb = to_mask(g, b);
    require(ma[u], "path_two_special: u not in A");
    require(!ma[v] && !mb[v], "path_two_special: v must avoid A and B");
    {
        VertexSet others;
        for (int w = 0; w < n; ++w)
            if (w != u && w != v) others.push_back(w);
        auto sub = induced_subgraph(g, others);
        require(has_balanced_components(sub.graph).has_value(),
                "path_two_special: G-{u,v} not balanced");
    }
    SubgraphView vw(g);
    Path p = two_special_rec(vw, u, v, ma, mb);
    if (!validate_path(g, p) || p.empty() || !ma[p.front()] || !mb[p.back()])
        throw InternalInvariant("path_two_special output malformed");
    return p;
}

}  // namespace cyclepart
