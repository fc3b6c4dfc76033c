#include "cyclepart/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace cyclepart {

namespace {

constexpr int kEnumGuard = 14;

void enumerate_proper_cycles(const Graph& g, const std::function<void(const Cycle&)>& yield) {
    int n = g.order();
    std::vector<int> path;
    std::vector<char> used(n, 0);
    // Canonical form: smallest vertex first, second vertex < last vertex.
    std::function<void(int, int)> dfs = [&](int s, int v) {
        for (int u : g.neighbours(v)) {
            if (u <= s || used[u]) continue;
            path.push_back(u);
            used[u] = 1;
            if (path.size() >= 3 && g.has_edge(u, s) && path[1] < u) yield(Cycle{path});
            dfs(s, u);
            used[u] = 0;
            path.pop_back();
        }
    };
    for (int s = 0; s < n; ++s) {
        path.assign(1, s);
        used[s] = 1;
        dfs(s, s);
        used[s] = 0;
    }
}

}  // namespace

void enumerate_cycles(const Graph& g, const std::function<void(const Cycle&)>& yield) {
    if (g.order() > kEnumGuard)
        throw InvalidInput("cycle enumeration guarded to n <= " + std::to_string(kEnumGuard));
    yield(Cycle::empty_cycle());
    for (int v = 0; v < g.order(); ++v) yield(Cycle::vertex(v));
    for (int v = 0; v < g.order(); ++v)
        for (int u : g.neighbours(v))
            if (u > v) yield(Cycle::edge(v, u));
    enumerate_proper_cycles(g, yield);
}

std::vector<Cycle> all_cycles(const Graph& g) {
    std::vector<Cycle> out;
    enumerate_cycles(g, [&](const Cycle& c) { out.push_back(c); });
    return out;
}

BruteForceResult best_cycle_bruteforce(const Graph& g, const BoundKind& b) {
    BruteForceResult res;
    bool first = true;
    std::vector<char> off(g.order(), 0);
    enumerate_cycles(g, [&](const Cycle& c) {
        for (int v : c.seq) off[v] = 1;
        int hsize = g.order() - c.size();
        int delta2 = -1;
        if (hsize > 0) {
            int best = 0;
            for (int v = 0; v < g.order(); ++v) {
                if (off[v]) continue;
                int d = 0;
                for (int u : g.neighbours(v)) d += !off[u];
                best = std::max(best, d);
            }
            delta2 = 2 * best;
        }
        for (int v : c.seq) off[v] = 0;
        if (bound_holds_doubled(delta2, hsize, b)) res.satisfiable = true;
        bool better = first;
        if (!first) {
            if (delta2 != res.achieved.doubled)
                better = delta2 < res.achieved.doubled;
            else if (c.size() != res.best.size())
                better = c.size() > res.best.size();
            else
                better = c.seq < res.best.seq;
        }
        if (better) {
            res.best = c;
            res.achieved = DegreeBound{delta2};
            first = false;
        }
    });
    return res;
}

void enumerate_paths_between(const Graph& g, const VertexSet& a, const VertexSet& b,
                             const std::function<void(const Path&)>& yield) {
    if (g.order() > kEnumGuard)
        throw InvalidInput("path enumeration guarded to n <= " + std::to_string(kEnumGuard));
    std::vector<char> ina(g.order(), 0), inb(g.order(), 0);
    for (int v : a) ina[v] = 1;
    for (int v : b) inb[v] = 1;
    auto qualifies = [&](const Path& p) {
        return (ina[p.front()] && inb[p.back()]) || (inb[p.front()] && ina[p.back()]);
    };
    std::vector<int> path;
    std::vector<char> used(g.order(), 0);
    std::function<void(int)> dfs = [&](int v) {
        if (path.size() == 1 || path.front() < path.back())
            if (qualifies(path)) yield(path);
        for (int u : g.neighbours(v)) {
            if (used[u]) continue;
            used[u] = 1;
            path.push_back(u);
            dfs(u);
            path.pop_back();
            used[u] = 0;
        }
    };
    for (int s = 0; s < g.order(); ++s) {
        path.assign(1, s);
        used[s] = 1;
        dfs(s);
        used[s] = 0;
    }
}

PathExtremal gen_path_extremal(int m) {
    if (m < 2) throw InvalidInput("gen_path_extremal requires m >= 2");
    int n = 2 * m + 1;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) edges.push_back({u, v});
    for (int u = m; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!(u == m && v == m + 1)) edges.push_back({u, v});
    PathExtremal out;
    out.graph = Graph(n, edges);
    for (int v = 0; v < m; ++v) {
        out.a.push_back(v);
        out.b.push_back(v);
    }
    out.a.push_back(m);
    out.b.push_back(m + 1);
    return out;
}

Graph gen_connected_extremal(int k, int m) {
    if (k < 1 || m < 2) throw InvalidInput("gen_connected_extremal requires k >= 1, m >= 2");
    int n = (k + 1) * m + k;
    auto copy_of = [&](int v) { return v < (k + 1) * m ? v / m : -1; };
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int cu = copy_of(u), cv = copy_of(v);
            if (cu >= 0 && cv >= 0 && cu != cv) continue;
            edges.push_back({u, v});
        }
    return Graph(n, edges);
}

namespace {

// Rotation-extension heuristic: grows a path, Pósa-rotates when stuck,
// closes into a cycle and keeps absorbing outside vertices. Deterministic.
struct RotationExtension {
    const Graph& g;
    explicit RotationExtension(const Graph& graph) : g(graph) {}

    // Longest cycle the heuristic finds (vertex sequence; may be degenerate).
    std::vector<int> long_cycle() {
        int n = g.order();
        if (n == 0) return {};
        std::vector<int> best;
        int start = 0;
        for (int v = 1; v < n; ++v)
            if (g.degree(v) > g.degree(start)) start = v;
        std::vector<int> path{start};
        std::vector<char> used(n, 0);
        used[start] = 1;
        grow(path, used);
        std::vector<int> cyc = close(path, used);
        if (!cyc.empty()) absorb(cyc, used);
        if (cyc.size() > best.size()) best = cyc;
        if (best.empty() && !path.empty()) best = {path[0]};
        return best;
    }

    void grow(std::vector<int>& path, std::vector<char>& used) {
        int n = g.order();
        int budget = 4 * n * n + 64;
        while (budget-- > 0) {
            int back = path.back();
            int nxt = -1;
            for (int u : g.neighbours(back))
                if (!used[u]) {
                    nxt = u;
                    break;
                }
            if (nxt >= 0) {
                path.push_back(nxt);
                used[nxt] = 1;
                continue;
            }
            std::reverse(path.begin(), path.end());
            back = path.back();
            for (int u : g.neighbours(back))
                if (!used[u]) {
                    nxt = u;
                    break;
                }
            if (nxt >= 0) {
                path.push_back(nxt);
                used[nxt] = 1;
                continue;
            }
            if (!rotate_once(path)) break;
        }
    }

    // Pósa rotation at the back end; returns false when no new end arises.
    bool rotate_once(std::vector<int>& path) {
        int k = static_cast<int>(path.size());
        if (k < 3) return false;
        int back = path.back();
        for (int i = 0; i + 2 < k; ++i) {
            if (!g.has_edge(back, path[i])) continue;
            // New end path[i+1]; check it can actually extend, else skip.
            int cand = path[i + 1];
            bool helps = false;
            for (int u : g.neighbours(cand))
                if (u != path[i] &&
                    std::find(path.begin(), path.end(), u) == path.end()) {
                    helps = true;
                    break;
                }
            if (!helps) continue;
            std::reverse(path.begin() + i + 1, path.end());
            return true;
        }
        return false;
    }

    std::vector<int> close(std::vector<int>& path, std::vector<char>& used) {
        if (path.size() == 1) return path;
        if (path.size() == 2) {
            if (g.has_edge(path[0], path[1])) return path;
            used[path[1]] = 0;
            return {path[0]};
        }
        int k = static_cast<int>(path.size());
        int guard = k + 2;
        while (guard-- > 0) {
            if (g.has_edge(path.front(), path.back())) return path;
            int back = path.back();
            bool rotated = false;
            for (int i = 0; i + 2 < k; ++i)
                if (g.has_edge(back, path[i]) && g.has_edge(path[i + 1], path.front())) {
                    std::reverse(path.begin() + i + 1, path.end());
                    rotated = true;
                    break;
                }
            if (!rotated) break;
        }
        if (g.has_edge(path.front(), path.back())) return path;
        // Give up on the last vertex and close the prefix if possible.
        std::vector<int> trimmed = path;
        while (trimmed.size() > 2 && !g.has_edge(trimmed.front(), trimmed.back())) {
            used[trimmed.back()] = 0;
            trimmed.pop_back();
        }
        if (trimmed.size() >= 2 && g.has_edge(trimmed.front(), trimmed.back())) return trimmed;
        while (trimmed.size() > 1) {
            used[trimmed.back()] = 0;
            trimmed.pop_back();
        }
        return trimmed;
    }

    // Insert outside vertices between consecutive cycle vertices.
    void absorb(std::vector<int>& cyc, std::vector<char>& used) {
        if (cyc.size() < 2) return;
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0; v < g.order(); ++v) {
                if (used[v]) continue;
                int k = static_cast<int>(cyc.size());
                for (int i = 0; i < k; ++i) {
                    int a = cyc[i], b = cyc[(i + 1) % k];
                    if (g.has_edge(v, a) && g.has_edge(v, b)) {
                        cyc.insert(cyc.begin() + i + 1, v);
                        used[v] = 1;
                        changed = true;
                        break;
                    }
                }
            }
        }
    }
};

// dp over masks: set of reachable path ends (paths start at vertex 0).
std::optional<std::vector<int>> hamiltonian_dp(const Graph& g) {
    int n = g.order();
    if (n > 20) throw InvalidInput("exact Hamiltonian search guarded to n <= 20");
    std::vector<uint32_t> row(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbours(v)) row[v] |= 1u << u;
    std::vector<uint32_t> dp(1u << n, 0);
    dp[1] = 1;  // path {0} ending at 0
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (!(mask & 1) || !dp[mask]) continue;
        for (int u = 0; u < n; ++u) {
            if (mask >> u & 1) continue;
            if (dp[mask] & row[u]) dp[mask | (1u << u)] |= 1u << u;
        }
    }
    uint32_t full = (1u << n) - 1;
    uint32_t ends = dp[full] & row[0] & ~1u;
    if (n >= 3 && !ends) return std::nullopt;
    // Reconstruct backwards.
    std::vector<int> seq;
    uint32_t mask = full;
    int e = -1;
    for (int v = 0; v < n; ++v)
        if (ends >> v & 1) {
            e = v;
            break;
        }
    while (e != 0) {
        seq.push_back(e);
        uint32_t prevmask = mask & ~(1u << e);
        uint32_t cand = dp[prevmask] & row[e];
        int p = -1;
        for (int v = 0; v < n; ++v)
            if (cand >> v & 1) {
                p = v;
                break;
            }
        mask = prevmask;
        e = p;
    }
    seq.push_back(0);
    std::reverse(seq.begin(), seq.end());
    return seq;
}

}  // namespace

std::vector<int> long_cycle_heuristic(const Graph& g) {
    RotationExtension rex(g);
    return rex.long_cycle();
}

std::optional<Cycle> find_hamiltonian_cycle(const Graph& g) {
    int n = g.order();
    if (n == 0) return Cycle::empty_cycle();
    if (n == 1) return Cycle::vertex(0);
    if (n == 2) {
        if (g.has_edge(0, 1)) return Cycle::edge(0, 1);
        return std::nullopt;
    }
    RotationExtension rex(g);
    std::vector<int> cyc = rex.long_cycle();
    if (static_cast<int>(cyc.size()) == n) {
        Cycle c{cyc};
        if (validate_cycle(g, c)) return c;
    }
    auto seq = hamiltonian_dp(g);
    if (!seq) return std::nullopt;
    Cycle c{*seq};
    if (!validate_cycle(g, c)) throw InternalInvariant("hamiltonian DP produced invalid cycle");
    return c;
}

bool dense_split_holds(const Graph& g, const DenseSplit& s) {
    int n = g.order();
    if (static_cast<int>(s.a.size()) != static_cast<int>(s.b.size()) + 1) return false;
    if (static_cast<int>(s.a.size() + s.b.size()) != n) return false;
    std::vector<char> inb(n, 0);
    for (int v : s.b) inb[v] = 1;
    for (int v : s.a)
        if (inb[v]) return false;
    for (int v : s.a) {
        int cnt = 0;
        for (int u : g.neighbours(v)) {
            if (!inb[u]) return false;  // edge within A
            ++cnt;
        }
        if (cnt != static_cast<int>(s.b.size())) return false;  // missing A-B edge
    }
    return true;
}

bool dense_pivot_holds(const Graph& g, const DensePivot& p) {
    int n = g.order();
    if (p.pivot < 0 || p.pivot >= n) return false;
    if (p.a.size() != p.b.size() || p.a.empty()) return false;
    if (static_cast<int>(p.a.size() + p.b.size()) + 1 != n) return false;
    std::vector<char> where(n, 0);  // 1 = A, 2 = B
    for (int v : p.a) where[v] = 1;
    for (int v : p.b) where[v] = 2;
    if (where[p.pivot]) return false;
    auto clique_with_pivot = [&](const VertexSet& side, char tag) {
        for (size_t i = 0; i < side.size(); ++i) {
            if (!g.has_edge(p.pivot, side[i])) return false;
            for (size_t j = i + 1; j < side.size(); ++j)
                if (!g.has_edge(side[i], side[j])) return false;
            for (int u : g.neighbours(side[i]))
                if (u != p.pivot && where[u] != tag) return false;  // A-B edge
        }
        return true;
    };
    return clique_with_pivot(p.a, 1) && clique_with_pivot(p.b, 2);
}

namespace {

// Mask-based path for n <= 64: structures (i), (ii), then a greedy
// rotation-extension Hamiltonian search with a DP fallback.
bool classify_small(const Graph& g, DenseClassification& out) {
    int n = g.order();
    if (n == 0 || n > 64) return false;
    uint64_t row[64];
    for (int v = 0; v < n; ++v) row[v] = g.row(v)[0];
    uint64_t full = n == 64 ? ~0ull : (1ull << n) - 1;

    auto to_set = [&](uint64_t mask) {
        VertexSet s;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) s.push_back(v);
        return s;
    };

    // (i)
    if (n % 2 == 1) {
        for (int a = 0; a < n; ++a) {
            if (2 * __builtin_popcountll(row[a]) != n - 1) continue;
            uint64_t b_mask = row[a];
            uint64_t a_mask = full & ~b_mask;
            bool ok = true;
            for (uint64_t rest = a_mask; rest && ok; rest &= rest - 1)
                ok = row[__builtin_ctzll(rest)] == b_mask;
            if (ok) {
                out.kind = DenseClassification::Kind::Split;
                out.split.a = to_set(a_mask);
                out.split.b = to_set(b_mask);
                return true;
            }
        }
    }
    // (ii)
    if (n % 2 == 1) {
        for (int v = 0; v < n; ++v) {
            if (__builtin_popcountll(row[v]) != n - 1) continue;
            uint64_t rest = full & ~(1ull << v);
            int seed = __builtin_ctzll(rest);
            uint64_t comp = 1ull << seed, frontier = comp;
            while (frontier) {
                uint64_t next = 0;
                for (uint64_t f = frontier; f; f &= f - 1)
                    next |= row[__builtin_ctzll(f)];
                next &= rest & ~comp;
                comp |= next;
                frontier = next;
            }
            uint64_t other = rest & ~comp;
            if (!other || __builtin_popcountll(comp) != __builtin_popcountll(other)) continue;
            auto clique = [&](uint64_t mask) {
                for (uint64_t m = mask; m; m &= m - 1) {
                    int x = __builtin_ctzll(m);
                    if ((row[x] & mask) != (mask & ~(1ull << x))) return false;
                }
                return true;
            };
            if (!clique(comp) || !clique(other)) continue;
            out.kind = DenseClassification::Kind::Pivot;
            out.pivot.pivot = v;
            out.pivot.a = to_set(comp);
            out.pivot.b = to_set(other);
            return true;
        }
    }
    // (iii): greedy rotation-extension over masks.
    if (n == 1) {
        out.kind = DenseClassification::Kind::Hamiltonian;
        out.hamiltonian = Cycle::vertex(0);
        return true;
    }
    if (n == 2) {
        if (!(row[0] & 2)) return false;
        out.kind = DenseClassification::Kind::Hamiltonian;
        out.hamiltonian = Cycle::edge(0, 1);
        return true;
    }
    int path[64];
    int len = 1;
    path[0] = 0;
    uint64_t used = 1;
    int guard = 4 * n * n + 16;
    while (len < n && guard-- > 0) {
        int back = path[len - 1];
        uint64_t free_nbrs = row[back] & ~used;
        if (free_nbrs) {
            int nxt = __builtin_ctzll(free_nbrs);
            path[len++] = nxt;
            used |= 1ull << nxt;
            continue;
        }
        std::reverse(path, path + len);
        back = path[len - 1];
        free_nbrs = row[back] & ~used;
        if (free_nbrs) {
            int nxt = __builtin_ctzll(free_nbrs);
            path[len++] = nxt;
            used |= 1ull << nxt;
            continue;
        }
        // Pósa rotation: pick the first chord whose successor can extend.
        bool rotated = false;
        for (int i = 0; i + 2 < len && !rotated; ++i) {
            if (!(row[back] >> path[i] & 1)) continue;
            if (!(row[path[i + 1]] & ~used)) continue;
            std::reverse(path + i + 1, path + len);
            rotated = true;
        }
        if (!rotated) break;
    }
    if (len == n) {
        int rot_guard = n + 2;
        while (rot_guard-- > 0 && !(row[path[len - 1]] >> path[0] & 1)) {
            int back = path[len - 1];
            bool rotated = false;
            for (int i = 0; i + 2 < len && !rotated; ++i)
                if ((row[back] >> path[i] & 1) && (row[path[i + 1]] >> path[0] & 1)) {
                    std::reverse(path + i + 1, path + len);
                    rotated = true;
                }
            if (!rotated) break;
        }
        if (row[path[len - 1]] >> path[0] & 1) {
            out.kind = DenseClassification::Kind::Hamiltonian;
            out.hamiltonian = Cycle{std::vector<int>(path, path + len)};
            return true;
        }
    }
    if (n <= 20) {
        if (auto seq = hamiltonian_dp(g)) {
            out.kind = DenseClassification::Kind::Hamiltonian;
            out.hamiltonian = Cycle{*seq};
            return true;
        }
        throw InternalInvariant("dense graph matched none of the three structures");
    }
    return false;  // fall back to the general path
}

}  // namespace

DenseClassification classify_dense_complement(const Graph& g) {
    int n = g.order();
    int mindeg2 = n == 0 ? -1 : 2 * g.degree(0);
    for (int v = 1; v < n; ++v) mindeg2 = std::min(mindeg2, 2 * g.degree(v));
    if (mindeg2 < n - 1)
        throw InvalidInput("classify_dense_complement requires 2*delta >= n-1");

    DenseClassification out{};
    if (n > 0 && n <= 64 && classify_small(g, out)) return out;
    // (i)
    if (n % 2 == 1) {
        for (int a = 0; a < n; ++a) {
            if (2 * g.degree(a) != n - 1) continue;
            DenseSplit s;
            auto nb = g.neighbours(a);
            s.b.assign(nb.begin(), nb.end());
            std::vector<char> inb(n, 0);
            for (int v : s.b) inb[v] = 1;
            for (int v = 0; v < n; ++v)
                if (!inb[v]) s.a.push_back(v);
            if (dense_split_holds(g, s)) {
                out.kind = DenseClassification::Kind::Split;
                out.split = s;
                return out;
            }
        }
    }
    // (ii)
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) != n - 1) continue;
        VertexSet others;
        for (int u = 0; u < n; ++u)
            if (u != v) others.push_back(u);
        auto sub = induced_subgraph(g, others);
        auto comps = connected_components(sub.graph);
        if (comps.size() != 2 || comps[0].size() != comps[1].size()) continue;
        DensePivot p;
        p.pivot = v;
        for (int i : comps[0]) p.a.push_back(sub.orig_ids[i]);
        for (int i : comps[1]) p.b.push_back(sub.orig_ids[i]);
        if (dense_pivot_holds(g, p)) {
            out.kind = DenseClassification::Kind::Pivot;
            out.pivot = p;
            return out;
        }
    }
    // (iii)
    if (auto ham = find_hamiltonian_cycle(g)) {
        out.kind = DenseClassification::Kind::Hamiltonian;
        out.hamiltonian = *ham;
        return out;
    }
    throw InternalInvariant("dense graph matched none of the three structures");
}

}  // namespace cyclepart
