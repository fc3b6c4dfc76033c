#include "cyclepart/colouring.hpp"

#include <algorithm>
#include <numeric>

namespace cyclepart {

std::optional<Colour> colour_from_letter(char ch) {
    switch (ch) {
        case 'R': return Colour::Red;
        case 'B': return Colour::Blue;
        case 'G': return Colour::Green;
        default: return std::nullopt;
    }
}

TriColouredComplete TriColouredComplete::restrict(const VertexSet& s) const {
    TriColouredComplete out(static_cast<int>(s.size()));
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            out.set_colour(static_cast<int>(i), static_cast<int>(j), colour(s[i], s[j]));
    return out;
}

Graph colour_class(const TriColouredComplete& k, Colour c) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < k.order(); ++u)
        for (int v = u + 1; v < k.order(); ++v)
            if (k.colour(u, v) == c) edges.push_back({u, v});
    return Graph(k.order(), edges);
}

namespace {

// Expected colour between distinct classes (0-based labels for A1..A4):
// {1,4},{2,3} red; {2,4},{1,3} blue; {3,4},{1,2} green.
Colour cross_colour(int ci, int cj) {
    int lo = std::min(ci, cj), hi = std::max(ci, cj);
    if ((lo == 0 && hi == 3) || (lo == 1 && hi == 2)) return Colour::Red;
    if ((lo == 1 && hi == 3) || (lo == 0 && hi == 2)) return Colour::Blue;
    return Colour::Green;
}

bool graph_complete(const Graph& g) {
    return static_cast<long long>(g.edge_count()) * 2 ==
           static_cast<long long>(g.order()) * (g.order() - 1);
}

}  // namespace

bool four_partition_holds(const TriColouredComplete& k, const FourPartition& p) {
    int n = k.order();
    std::vector<int> cls(n, -1);
    int total = 0;
    for (int i = 0; i < 4; ++i) {
        if (p.classes[i].empty()) return false;
        for (int v : p.classes[i]) {
            if (v < 0 || v >= n || cls[v] >= 0) return false;
            cls[v] = i;
            ++total;
        }
    }
    if (total != n) return false;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (cls[u] != cls[v] && k.colour(u, v) != cross_colour(cls[u], cls[v])) return false;
    return true;
}

std::optional<FourPartition> recognize_4partite(const TriColouredComplete& k) {
    int n = k.order();
    if (n < 4) return std::nullopt;
    auto red_comps = connected_components(colour_class(k, Colour::Red));
    auto blue_comps = connected_components(colour_class(k, Colour::Blue));
    auto green_comps = connected_components(colour_class(k, Colour::Green));
    if (red_comps.size() < 2 || blue_comps.size() < 2 || green_comps.size() < 2)
        return std::nullopt;
    for (const auto& c1 : red_comps) {
        std::vector<char> in1(n, 0);
        for (int v : c1) in1[v] = 1;
        for (const auto& c2 : blue_comps) {
            std::vector<char> in2(n, 0);
            for (int v : c2) in2[v] = 1;
            FourPartition p;
            for (int v = 0; v < n; ++v) {
                int idx = in1[v] ? (in2[v] ? 3 : 0) : (in2[v] ? 1 : 2);
                p.classes[idx].push_back(v);
            }
            bool nonempty = true;
            for (auto& cl : p.classes) nonempty = nonempty && !cl.empty();
            if (!nonempty) continue;
            if (four_partition_holds(k, p)) return p;
        }
    }
    return std::nullopt;
}

SplitComponentsResult split_components(const Graph& g, int k, int m) {
    if (k < 1 || m < 1) throw InvalidInput("split_components requires k, m >= 1");
    SplitComponentsResult res;
    std::vector<char> removed(g.order(), 0);
    int rounds = 0;
    while (true) {
        VertexSet keep;
        for (int v = 0; v < g.order(); ++v)
            if (!removed[v]) keep.push_back(v);
        auto sub = induced_subgraph(g, keep);
        auto comps = connected_components(sub.graph);
        for (auto& c : comps)
            for (int& v : c) v = sub.orig_ids[v];
        if (static_cast<int>(comps.size()) >= m) {
            res.parts = comps;
            res.outcome = SplitComponentsResult::Outcome::ManyParts;
            break;
        }
        int bad = -1;
        VertexSet cut;
        for (size_t i = 0; i < comps.size() && bad < 0; ++i) {
            auto part = induced_subgraph(g, comps[i]);
            if (graph_complete(part.graph)) continue;
            VertexSet local_cut;
            if (find_cut_below(part.graph, k, local_cut)) {
                bad = static_cast<int>(i);
                for (int v : local_cut) cut.push_back(part.orig_ids[v]);
            }
        }
        if (bad < 0) {
            res.parts = comps;
            res.outcome = SplitComponentsResult::Outcome::AllGoodParts;
            break;
        }
        if (static_cast<int>(cut.size()) > k - 1)
            throw InternalInvariant("split_components: cut larger than k-1");
        for (int v : cut) {
            removed[v] = 1;
            res.s.push_back(v);
        }
        if (++rounds > m)
            throw InternalInvariant("split_components: more rounds than the component target");
    }
    std::sort(res.s.begin(), res.s.end());
    if (static_cast<long long>(res.s.size()) > static_cast<long long>(k - 1) * m)
        throw InternalInvariant("split_components: |S| exceeds (k-1)m");
    return res;
}

DisconnectResult disconnect_or_connected(const Graph& g, int k, int m) {
    if (k < 1 || m < 1) throw InvalidInput("disconnect_or_connected requires k, m >= 1");
    // Target m+1 components: a ManyParts outcome then certifies a tail of at
    // least m vertices, and the cut rounds stay below m+1, so |S| <= (k-1)m.
    auto sc = split_components(g, k, m + 1);
    DisconnectResult res;
    res.t = sc.s;
    size_t largest = 0;
    for (size_t i = 1; i < sc.parts.size(); ++i)
        if (sc.parts[i].size() > sc.parts[largest].size()) largest = i;
    long long tail = 0;
    for (size_t i = 0; i < sc.parts.size(); ++i)
        if (i != largest) tail += static_cast<long long>(sc.parts[i].size());
    if (tail >= m) {
        res.outcome = DisconnectResult::Outcome::SmallConn;
        return res;
    }
    // Fewer than m stragglers forces the all-good outcome; absorb them.
    if (sc.outcome != SplitComponentsResult::Outcome::AllGoodParts)
        throw InternalInvariant("disconnect_or_connected: small tail without good parts");
    for (size_t i = 0; i < sc.parts.size(); ++i)
        if (i != largest)
            for (int v : sc.parts[i]) res.t.push_back(v);
    std::sort(res.t.begin(), res.t.end());
    if (static_cast<long long>(res.t.size()) > cd_constant(k, m))
        throw InternalInvariant("disconnect_or_connected: |T| exceeds km");
    res.outcome = DisconnectResult::Outcome::KConnectedOrComplete;
    return res;
}

namespace {

constexpr int kConn = 4;
constexpr int kFloor = 400;  // case (iii) size floor

bool colour_class_4connected(const TriColouredComplete& k, const VertexSet& verts, Colour c) {
    if (static_cast<int>(verts.size()) <= kConn) return false;
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (k.colour(verts[i], verts[j]) == c)
                edges.push_back({static_cast<int>(i), static_cast<int>(j)});
    Graph g(static_cast<int>(verts.size()), edges);
    return is_k_connected(g, kConn);
}

// Builds a case (iii) partition from two monochromatic components of K\S of
// distinct colours col1, col2 whose union misses at most 2 vertices of K\S.
std::optional<CaseClassification> three_sets_partition(const TriColouredComplete& k, const VertexSet& s,
                                              const VertexSet& comp1, Colour col1,
                                              const VertexSet& comp2, Colour col2) {
    int n = k.order();
    if (col1 == col2) return std::nullopt;
    Colour col3 = static_cast<Colour>(3 - static_cast<int>(col1) - static_cast<int>(col2));
    std::vector<char> in_s(n, 0), in1(n, 0), in2(n, 0);
    for (int v : s) in_s[v] = 1;
    for (int v : comp1) in1[v] = 1;
    for (int v : comp2) in2[v] = 1;
    {
        int stragglers = 0;
        for (int v = 0; v < n; ++v) stragglers += !in_s[v] && !in1[v] && !in2[v];
        if (stragglers > 2) return std::nullopt;
    }
    // col3-component of K\S containing comp2\comp1 and comp1\comp2.
    VertexSet rest;
    for (int v = 0; v < n; ++v)
        if (!in_s[v]) rest.push_back(v);
    std::vector<int> idx(n, -1);
    for (size_t i = 0; i < rest.size(); ++i) idx[rest[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> tedges;
    for (size_t i = 0; i < rest.size(); ++i)
        for (size_t j = i + 1; j < rest.size(); ++j)
            if (k.colour(rest[i], rest[j]) == col3)
                tedges.push_back({static_cast<int>(i), static_cast<int>(j)});
    Graph third(static_cast<int>(rest.size()), tedges);
    int seed = -1;
    for (int v = 0; v < n; ++v)
        if (!in_s[v] && in1[v] != in2[v]) {
            seed = v;
            break;
        }
    if (seed < 0) return std::nullopt;
    std::vector<char> in3(n, 0);
    for (auto& tc : connected_components(third))
        if (std::binary_search(tc.begin(), tc.end(), idx[seed])) {
            for (int i : tc) in3[rest[i]] = 1;
            break;
        }
    for (int v = 0; v < n; ++v)
        if (!in_s[v] && in1[v] != in2[v] && !in3[v]) return std::nullopt;

    CaseClassification out;
    out.which = CaseClassification::Case::ThreeSets;
    auto slot = [&](Colour x, Colour y) -> VertexSet& {
        int lo = std::min(static_cast<int>(x), static_cast<int>(y));
        int hi = std::max(static_cast<int>(x), static_cast<int>(y));
        if (lo == 0 && hi == 1) return out.a_rb;
        if (lo == 1 && hi == 2) return out.a_bg;
        return out.a_rg;
    };
    for (int v = 0; v < n; ++v) {
        if (in_s[v]) {
            out.s.push_back(v);
            continue;
        }
        bool m1 = in1[v], m2 = in2[v], m3 = in3[v];
        if (m1 && m2 && m3)
            out.w.push_back(v);
        else if (m1 && m2)
            slot(col1, col2).push_back(v);
        else if (m1 && m3)
            slot(col1, col3).push_back(v);
        else if (m2 && m3)
            slot(col2, col3).push_back(v);
        else
            out.s.push_back(v);  // the <= 2 stragglers join S
    }
    std::sort(out.s.begin(), out.s.end());
    if (static_cast<int>(out.a_rb.size()) < kFloor || static_cast<int>(out.a_bg.size()) < kFloor ||
        static_cast<int>(out.a_rg.size()) < kFloor)
        return std::nullopt;
    if (!classification_holds(k, out)) return std::nullopt;
    return out;
}

// Monochromatic components forced by a 4-partition, by colour and by the
// class they avoid.
VertexSet forced_component(const FourPartition& p, Colour col, int avoid) {
    // Red components: {A1 u A4, A2 u A3}; blue: {A2 u A4, A1 u A3};
    // green: {A3 u A4, A1 u A2}.
    static const int pairs[3][2][2] = {{{0, 3}, {1, 2}}, {{1, 3}, {0, 2}}, {{2, 3}, {0, 1}}};
    const auto& options = pairs[static_cast<int>(col)];
    for (int o = 0; o < 2; ++o) {
        if (options[o][0] == avoid || options[o][1] == avoid) continue;
        VertexSet out = p.classes[options[o][0]];
        out.insert(out.end(), p.classes[options[o][1]].begin(),
                   p.classes[options[o][1]].end());
        std::sort(out.begin(), out.end());
        return out;
    }
    return {};
}

std::optional<CaseClassification> try_four_partite(const TriColouredComplete& k,
                                                   const VertexSet& s) {
    int n = k.order();
    std::vector<char> in_s(n, 0);
    for (int v : s) in_s[v] = 1;
    VertexSet rest;
    for (int v = 0; v < n; ++v)
        if (!in_s[v]) rest.push_back(v);
    if (rest.size() < 4) return std::nullopt;
    auto sub = k.restrict(rest);
    auto fp = recognize_4partite(sub);
    if (!fp) return std::nullopt;
    FourPartition mapped;
    for (int i = 0; i < 4; ++i)
        for (int v : fp->classes[i]) mapped.classes[i].push_back(rest[v]);
    bool big = true;
    for (auto& cl : mapped.classes) big = big && cl.size() >= 3;
    if (big) {
        CaseClassification out;
        out.which = CaseClassification::Case::FourPartite;
        out.s = s;
        out.partition = mapped;
        return out;
    }
    // Some class has <= 2 vertices: the red and blue components avoiding that
    // class cover the other three, leaving <= 2 stragglers to absorb.
    int small_idx = 0;
    for (int i = 0; i < 4; ++i)
        if (mapped.classes[i].size() < mapped.classes[small_idx].size()) small_idx = i;
    VertexSet r_comp = forced_component(mapped, Colour::Red, small_idx);
    VertexSet b_comp = forced_component(mapped, Colour::Blue, small_idx);
    return three_sets_partition(k, s, r_comp, Colour::Red, b_comp, Colour::Blue);
}

}  // namespace

bool classification_holds(const TriColouredComplete& k, const CaseClassification& c) {
    int n = k.order();
    std::vector<char> in_s(n, 0);
    for (int v : c.s) {
        if (v < 0 || v >= n || in_s[v]) return false;
        in_s[v] = 1;
    }
    VertexSet rest;
    for (int v = 0; v < n; ++v)
        if (!in_s[v]) rest.push_back(v);
    switch (c.which) {
        case CaseClassification::Case::ColourConnected:
            return rest.empty() || colour_class_4connected(k, rest, c.colour);
        case CaseClassification::Case::FourPartite: {
            size_t total = c.s.size();
            for (auto& cl : c.partition.classes) {
                if (cl.size() < 3) return false;
                total += cl.size();
            }
            if (total != static_cast<size_t>(n)) return false;
            std::vector<int> idx(n, -1);
            for (size_t i = 0; i < rest.size(); ++i) idx[rest[i]] = static_cast<int>(i);
            FourPartition p;
            for (int i = 0; i < 4; ++i)
                for (int v : c.partition.classes[i]) {
                    if (v < 0 || v >= n || idx[v] < 0) return false;
                    p.classes[i].push_back(idx[v]);
                }
            return four_partition_holds(k.restrict(rest), p);
        }
        case CaseClassification::Case::ThreeSets: {
            std::vector<int> tag(n, -1);  // 0 rb, 1 bg, 2 rg, 3 w
            size_t total = c.s.size();
            auto mark = [&](const VertexSet& set, int t) {
                for (int v : set) {
                    if (v < 0 || v >= n || tag[v] >= 0 || in_s[v]) return false;
                    tag[v] = t;
                    ++total;
                }
                return true;
            };
            if (!mark(c.a_rb, 0) || !mark(c.a_bg, 1) || !mark(c.a_rg, 2) || !mark(c.w, 3))
                return false;
            if (total != static_cast<size_t>(n)) return false;
            if (static_cast<int>(c.a_rb.size()) < kFloor ||
                static_cast<int>(c.a_bg.size()) < kFloor ||
                static_cast<int>(c.a_rg.size()) < kFloor)
                return false;
            for (int u = 0; u < n; ++u) {
                if (tag[u] < 0) continue;
                for (int v = u + 1; v < n; ++v) {
                    if (tag[v] < 0 || tag[u] == tag[v]) continue;
                    Colour col = k.colour(u, v);
                    int a = std::min(tag[u], tag[v]), b = std::max(tag[u], tag[v]);
                    bool ok = true;
                    if (a == 1 && b == 2) ok = col == Colour::Green;       // bg-rg
                    else if (a == 0 && b == 1) ok = col == Colour::Blue;   // rb-bg
                    else if (a == 0 && b == 2) ok = col == Colour::Red;    // rb-rg
                    else if (a == 0 && b == 3) ok = col != Colour::Green;  // rb-W
                    else if (a == 2 && b == 3) ok = col != Colour::Blue;   // rg-W
                    else if (a == 1 && b == 3) ok = col != Colour::Red;    // bg-W
                    if (!ok) return false;
                }
            }
            return true;
        }
    }
    return false;
}

CaseClassification classify_colouring(const TriColouredComplete& k) {
    int n = k.order();
    VertexSet all;
    for (int v = 0; v < n; ++v) all.push_back(v);

    // Whole-graph witnesses first: any valid S is a correct answer, and an
    // gives the most useful certificate downstream.
    for (Colour c : {Colour::Red, Colour::Blue, Colour::Green})
        if (colour_class_4connected(k, all, c)) {
            CaseClassification out;
            out.which = CaseClassification::Case::ColourConnected;
            out.colour = c;
            if (!classification_holds(k, out))
                throw InternalInvariant("classification (i) failed recheck");
            return out;
        }
    if (auto out = try_four_partite(k, {})) {
        if (!classification_holds(k, *out))
            throw InternalInvariant("classification (ii)/(iii) failed recheck");
        return *out;
    }

    // The proof's cascade, constants computed at runtime.
    long long c_g = cd_constant(kConn, 402);
    long long c_b = cd_constant(kConn, c_g + 402);
    std::vector<char> removed(n, 0);
    const std::pair<Colour, long long> rounds[3] = {{Colour::Red, c_b + c_g + 402},
                                                    {Colour::Blue, c_g + 402},
                                                    {Colour::Green, 402}};
    for (auto [col, m] : rounds) {
        VertexSet rest;
        for (int v = 0; v < n; ++v)
            if (!removed[v]) rest.push_back(v);
        std::vector<std::pair<int, int>> edges;
        for (size_t i = 0; i < rest.size(); ++i)
            for (size_t j = i + 1; j < rest.size(); ++j)
                if (k.colour(rest[i], rest[j]) == col)
                    edges.push_back({static_cast<int>(i), static_cast<int>(j)});
        Graph cls(static_cast<int>(rest.size()), edges);
        int m_eff = static_cast<int>(std::min<long long>(m, static_cast<long long>(n) + 1));
        auto dis = disconnect_or_connected(cls, kConn, m_eff);
        if (dis.outcome == DisconnectResult::Outcome::KConnectedOrComplete) {
            std::vector<char> rem2 = removed;
            for (int v : dis.t) rem2[rest[v]] = 1;
            CaseClassification out;
            out.which = CaseClassification::Case::ColourConnected;
            out.colour = col;
            VertexSet final_rest;
            for (int v = 0; v < n; ++v)
                (rem2[v] ? out.s : final_rest).push_back(v);
            if (!final_rest.empty() && !colour_class_4connected(k, final_rest, col)) {
                // Complete but too small to be 4-connected: absorb it.
                for (int v : final_rest) out.s.push_back(v);
                std::sort(out.s.begin(), out.s.end());
            }
            if (!classification_holds(k, out))
                throw InternalInvariant("classification cascade (i) failed recheck");
            return out;
        }
        for (int v : dis.t) removed[rest[v]] = 1;
    }

    VertexSet s;
    VertexSet rest;
    for (int v = 0; v < n; ++v)
        (removed[v] ? s : rest).push_back(v);

    if (auto out = try_four_partite(k, s)) return *out;

    // Not 4-partite: take the largest monochromatic component R of K\S and a
    // component of another colour not contained in it.
    if (!rest.empty()) {
        auto sub = k.restrict(rest);
        VertexSet best;
        Colour best_col = Colour::Red;
        for (Colour col : {Colour::Red, Colour::Blue, Colour::Green})
            for (auto& comp : connected_components(colour_class(sub, col)))
                if (comp.size() > best.size()) {
                    best = comp;
                    best_col = col;
                }
        std::vector<char> in_best(sub.order(), 0);
        for (int v : best) in_best[v] = 1;
        for (Colour col : {Colour::Red, Colour::Blue, Colour::Green}) {
            if (col == best_col) continue;
            for (auto& bc : connected_components(colour_class(sub, col))) {
                bool inside = true;
                for (int v : bc) inside = inside && in_best[v];
                if (inside) continue;
                VertexSet r_glob, b_glob;
                for (int v : best) r_glob.push_back(rest[v]);
                for (int v : bc) b_glob.push_back(rest[v]);
                std::sort(r_glob.begin(), r_glob.end());
                std::sort(b_glob.begin(), b_glob.end());
                if (auto out = three_sets_partition(k, s, r_glob, best_col, b_glob, col)) return *out;
            }
        }
    }

    // Desk-scale fallback: empty remainder, everything in S (legitimate (i)).
    CaseClassification out;
    out.which = CaseClassification::Case::ColourConnected;
    out.colour = Colour::Red;
    out.s = all;
    if (!classification_holds(k, out))
        throw InternalInvariant("empty-remainder classification failed recheck");
    return out;
}

}  // namespace cyclepart
