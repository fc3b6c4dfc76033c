#include <algorithm>
#include <numeric>

#include "cyclepart/connected.hpp"
#include "cyclepart/partition.hpp"

namespace cyclepart {

namespace {

VertexSet sorted_union(std::initializer_list<const VertexSet*> sets) {
    VertexSet out;
    for (const VertexSet* s : sets) out.insert(out.end(), s->begin(), s->end());
    std::sort(out.begin(), out.end());
    return out;
}

Colour third_colour(Colour a, Colour b) {
    return static_cast<Colour>(3 - static_cast<int>(a) - static_cast<int>(b));
}

}  // namespace

VertexSet link_anchors(const LinkContext& ctx, Colour c) {
    switch (c) {
        case Colour::Red: return sorted_union({&ctx.ap_rb, &ctx.ap_rg, &ctx.w_rb, &ctx.w_rg});
        case Colour::Blue: return sorted_union({&ctx.ap_bg, &ctx.ap_rb, &ctx.w_bg, &ctx.w_rb});
        case Colour::Green: return sorted_union({&ctx.ap_bg, &ctx.ap_rg, &ctx.w_bg, &ctx.w_rg});
    }
    return {};
}

bool is_linkable(const LinkContext& ctx, const Path& p, Colour c) {
    if (p.empty()) return false;
    VertexSet anchors = link_anchors(ctx, c);
    auto hit = [&](int v) { return std::binary_search(anchors.begin(), anchors.end(), v); };
    bool front_ok = hit(p.front()) || (p.size() >= 2 && hit(p[1]));
    bool back_ok = hit(p.back()) || (p.size() >= 2 && hit(p[p.size() - 2]));
    return front_ok && back_ok;
}

LinkResult link_paths(const std::vector<Path>& paths, const VertexSet& d1, const VertexSet& d2,
                      const TriColouredComplete& k, Colour c) {
    if (paths.size() > 21) throw InvalidInput("link_paths: more than 21 paths");
    if (!paths.empty() && (d1.size() < 250 || d2.size() < 250))
        throw InvalidInput("link_paths: reservoirs below 250");
    LinkResult out;
    if (paths.empty()) {
        out.cycle = Cycle::empty_cycle();
        return out;
    }
    // The reservoirs must form a complete c-coloured bipartite pair.
    for (int u : d1)
        for (int v : d2)
            if (k.colour(u, v) != c) throw InvalidInput("link_paths: reservoirs not monochromatic");

    std::vector<char> used(k.order(), 0);
    std::vector<char> in_d1(k.order(), 0), in_d2(k.order(), 0);
    for (int v : d1) in_d1[v] = 1;
    for (int v : d2) in_d2[v] = 1;
    auto pick_attach = [&](int anchor) {
        for (int v : d1)
            if (!used[v] && k.colour(anchor, v) == c) return v;
        for (int v : d2)
            if (!used[v] && k.colour(anchor, v) == c) return v;
        return -1;
    };
    auto free_degree = [&](int anchor) {
        int cnt = 0;
        for (int v : d1) cnt += k.colour(anchor, v) == c;
        for (int v : d2) cnt += k.colour(anchor, v) == c;
        return cnt;
    };

    struct Trimmed {
        Path core;
        int d_start, d_end;
    };
    std::vector<Trimmed> parts;
    long long dropped = 0;
    for (const Path& p : paths) {
        if (p.empty()) continue;
        int i = 0, j = static_cast<int>(p.size()) - 1;
        // Trim to endpoints with >= 50 c-edges into the reservoirs (the
        // anchor guarantee); the first/last vertex may be sacrificed.
        if (free_degree(p[i]) < 50 && j > i) ++i;
        if (free_degree(p[j]) < 50 && j > i) --j;
        if (free_degree(p[i]) < 50 || free_degree(p[j]) < 50)
            throw InvalidInput("link_paths: a path has no anchored endpoint");
        dropped += i + (static_cast<int>(p.size()) - 1 - j);
        Trimmed t;
        t.core.assign(p.begin() + i, p.begin() + j + 1);
        t.d_start = pick_attach(t.core.front());
        if (t.d_start < 0) throw InternalInvariant("link_paths: start attach exhausted");
        used[t.d_start] = 1;
        t.d_end = pick_attach(t.core.back());
        if (t.d_end < 0) throw InternalInvariant("link_paths: end attach exhausted");
        used[t.d_end] = 1;
        parts.push_back(std::move(t));
    }
    if (parts.empty()) {
        out.cycle = Cycle::empty_cycle();
        return out;
    }
    auto pick_middle = [&](bool from_d1) {
        for (int v : from_d1 ? d1 : d2)
            if (!used[v]) return v;
        return -1;
    };
    std::vector<int> seq;
    for (size_t t = 0; t < parts.size(); ++t) {
        seq.push_back(parts[t].d_start);
        seq.insert(seq.end(), parts[t].core.begin(), parts[t].core.end());
        seq.push_back(parts[t].d_end);
        int next_start = parts[(t + 1) % parts.size()].d_start;
        bool same_side = (in_d1[parts[t].d_end] != 0) == (in_d1[next_start] != 0);
        if (same_side) {
            int mid = pick_middle(!in_d1[parts[t].d_end]);
            if (mid < 0) throw InternalInvariant("link_paths: middle connector exhausted");
            used[mid] = 1;
            seq.push_back(mid);
        }
    }
    for (int v : seq)
        if (in_d1[v] || in_d2[v]) out.used_d.push_back(v);
    std::sort(out.used_d.begin(), out.used_d.end());

    if (seq.size() == 1)
        out.cycle = Cycle::vertex(seq[0]);
    else if (seq.size() == 2)
        out.cycle = Cycle::edge(seq[0], seq[1]);
    else
        out.cycle = Cycle{seq};
    // Budgets and monochromaticity.
    long long t_cnt = static_cast<long long>(parts.size());
    if (static_cast<long long>(out.used_d.size()) > 3 * t_cnt)
        throw InternalInvariant("link_paths: reservoir budget exceeded");
    if (dropped > 2 * t_cnt) throw InternalInvariant("link_paths: dropped too many path vertices");
    const auto& s = out.cycle.seq;
    for (size_t i = 0; i + 1 < s.size(); ++i)
        if (k.colour(s[i], s[i + 1]) != c)
            throw InternalInvariant("link_paths: cycle not monochromatic");
    if (s.size() >= 3 && k.colour(s.back(), s.front()) != c)
        throw InternalInvariant("link_paths: closing edge not monochromatic");
    return out;
}

bool three_cycle_cover_valid(const TriColouredComplete& k, const ThreeCycleCover& cover) {
    int n = k.order();
    std::vector<char> seen(n, 0);
    long long total = 0;
    for (const auto& cc : cover.cycles) {
        const auto& s = cc.cycle.seq;
        for (int v : s) {
            if (v < 0 || v >= n || seen[v]) return false;
            seen[v] = 1;
            ++total;
        }
        for (size_t i = 0; i + 1 < s.size(); ++i)
            if (k.colour(s[i], s[i + 1]) != cc.colour) return false;
        if (s.size() >= 3 && k.colour(s.back(), s.front()) != cc.colour) return false;
    }
    for (int v : cover.uncovered) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
        ++total;
    }
    return total == n;
}

ThreeCycleCover linkable_to_three_cycles(const std::vector<Path>& red_paths,
                                         const std::vector<Path>& blue_paths,
                                         const std::vector<Path>& green_paths,
                                         const Cycle* pre_red_cycle, const LinkContext& ctx,
                                         const TriColouredComplete& k, const VertexSet& s) {
    for (const auto& [paths, col] :
         {std::pair(&red_paths, Colour::Red), std::pair(&blue_paths, Colour::Blue),
          std::pair(&green_paths, Colour::Green)}) {
        if (paths->size() > 21) throw InvalidInput("linkable_to_three_cycles: > 21 paths");
        for (const Path& p : *paths)
            if (!is_linkable(ctx, p, col))
                throw InvalidInput("linkable_to_three_cycles: path not linkable");
    }
    if (pre_red_cycle && !red_paths.empty())
        throw InvalidInput("linkable_to_three_cycles: both red cycle and red paths given");

    auto minus = [](const VertexSet& a, const VertexSet& used) {
        VertexSet out;
        for (int v : a)
            if (!std::binary_search(used.begin(), used.end(), v)) out.push_back(v);
        return out;
    };
    ThreeCycleCover out;
    VertexSet used_red;
    Cycle red_cycle;
    if (pre_red_cycle) {
        red_cycle = *pre_red_cycle;
    } else {
        auto lr = link_paths(red_paths, ctx.d_rb, ctx.d_rg, k, Colour::Red);
        red_cycle = lr.cycle;
        used_red = lr.used_d;
    }
    VertexSet d_rb_b = minus(ctx.d_rb, used_red);
    auto lb = link_paths(blue_paths, ctx.d_bg, d_rb_b, k, Colour::Blue);
    VertexSet used_rb_g = used_red;
    used_rb_g.insert(used_rb_g.end(), lb.used_d.begin(), lb.used_d.end());
    std::sort(used_rb_g.begin(), used_rb_g.end());
    VertexSet d_rg_g = minus(ctx.d_rg, used_rb_g);
    VertexSet d_bg_g = minus(ctx.d_bg, used_rb_g);
    auto lg = link_paths(green_paths, d_rg_g, d_bg_g, k, Colour::Green);

    out.cycles[0] = {red_cycle, Colour::Red};
    out.cycles[1] = {lb.cycle, Colour::Blue};
    out.cycles[2] = {lg.cycle, Colour::Green};
    std::vector<char> covered(k.order(), 0);
    for (const auto& cc : out.cycles)
        for (int v : cc.cycle.seq) covered[v] = 1;
    for (int v = 0; v < k.order(); ++v)
        if (!covered[v]) out.uncovered.push_back(v);
    out.s = s;
    if (!three_cycle_cover_valid(k, out))
        throw InternalInvariant("linkable_to_three_cycles: cover failed the checker");
    return out;
}

// ------------------------------------------------------------- the pipeline

namespace {

struct RoleSpace {
    TriColouredComplete k;                // colours permuted actual -> role
    std::array<Colour, 3> role_to_actual; // role colour -> actual colour
};

RoleSpace make_role_space(const TriColouredComplete& k, std::array<Colour, 3> role_to_actual) {
    RoleSpace rs;
    rs.role_to_actual = role_to_actual;
    std::array<int, 3> actual_to_role{};
    for (int r = 0; r < 3; ++r) actual_to_role[static_cast<int>(role_to_actual[r])] = r;
    rs.k = TriColouredComplete(k.order());
    for (int u = 0; u < k.order(); ++u)
        for (int v = u + 1; v < k.order(); ++v)
            rs.k.set_colour(u, v,
                            static_cast<Colour>(actual_to_role[static_cast<int>(k.colour(u, v))]));
    return rs;
}

// Case (ii): close the oracle's monochromatic paths through the 3-vertex
// reservoirs.
ThreeCycleCover close_paths_case_ii(const TriColouredComplete& k, const CaseClassification& cls,
                                    int exact_oracle_max) {
    ThreeCycleCover out;
    out.case_name = "ii";
    out.s = cls.s;
    const auto& classes = cls.partition.classes;
    std::array<VertexSet, 4> reservoir;
    VertexSet core;
    std::vector<int> class_of(k.order(), -1);
    for (int i = 0; i < 4; ++i) {
        for (int v : classes[i]) class_of[v] = i;
        reservoir[i].assign(classes[i].begin(), classes[i].begin() + 3);
        for (size_t j = 3; j < classes[i].size(); ++j) core.push_back(classes[i][j]);
    }
    std::sort(core.begin(), core.end());

    auto sub = k.restrict(core);
    auto tp = three_path_oracle(sub, exact_oracle_max);
    out.degraded = tp.degraded;
    for (auto& cp : tp.paths)
        for (int& v : cp.path) v = core[v];

    std::array<std::vector<char>, 4> res_used;
    for (int i = 0; i < 4; ++i) res_used[i].assign(3, 0);
    auto take = [&](int cls_idx) {
        for (int j = 0; j < 3; ++j)
            if (!res_used[cls_idx][j]) {
                res_used[cls_idx][j] = 1;
                return reservoir[cls_idx][j];
            }
        return -1;
    };
    // Red partners: 1<->4, 2<->3; blue: 2<->4, 1<->3; green: 3<->4, 1<->2.
    auto partner = [&](int cls_idx, Colour c) {
        static const int table[3][4] = {{3, 2, 1, 0}, {2, 3, 0, 1}, {1, 0, 3, 2}};
        return table[static_cast<int>(c)][cls_idx];
    };

    size_t slot = 0;
    for (auto& cp : tp.paths) {
        if (cp.path.empty()) continue;
        Cycle cyc;
        if (cp.path.size() == 1) {
            cyc = Cycle::vertex(cp.path[0]);
        } else {
            int c1 = class_of[cp.path.front()], c2 = class_of[cp.path.back()];
            if (c1 == c2) {
                int a = take(partner(c1, cp.colour));
                if (a >= 0 && k.colour(a, cp.path.front()) == cp.colour &&
                    k.colour(a, cp.path.back()) == cp.colour) {
                    cyc.seq = cp.path;
                    cyc.seq.push_back(a);
                } else {
                    out.degraded = true;
                }
            } else {
                int a1 = take(c1), a2 = take(c2);
                if (a1 >= 0 && a2 >= 0 && k.colour(cp.path.back(), a1) == cp.colour &&
                    k.colour(a1, a2) == cp.colour && k.colour(a2, cp.path.front()) == cp.colour) {
                    cyc.seq = cp.path;
                    cyc.seq.push_back(a1);
                    cyc.seq.push_back(a2);
                } else {
                    out.degraded = true;
                }
            }
        }
        if (cyc.empty() && cp.path.size() >= 2) {
            continue;  // could not close; vertices fall to uncovered
        }
        if (slot >= out.cycles.size()) {
            out.degraded = true;
            break;
        }
        out.cycles[slot++] = {cyc, cp.colour};
    }
    std::vector<char> covered(k.order(), 0);
    for (auto& cc : out.cycles)
        for (int v : cc.cycle.seq) covered[v] = 1;
    for (int v = 0; v < k.order(); ++v)
        if (!covered[v]) out.uncovered.push_back(v);
    out.coverage_bound_applicable = !out.degraded;
    out.coverage_budget = static_cast<long long>(cls.s.size()) + 12;
    if (out.coverage_bound_applicable &&
        static_cast<long long>(out.uncovered.size()) > out.coverage_budget)
        throw InternalInvariant("case (ii): uncovered exceeds |S| + 12");
    if (!three_cycle_cover_valid(k, out))
        throw InternalInvariant("case (ii): cover failed the checker");
    return out;
}

// Splits a coloured-path list per role colour, turning stray leftover
// vertices into singleton paths on the least-loaded feasible colour.
struct RolePaths {
    std::vector<Path> red, blue, green;
    std::vector<Path>& of(Colour c) {
        return c == Colour::Red ? red : c == Colour::Blue ? blue : green;
    }
    size_t count(Colour c) const {
        return c == Colour::Red ? red.size() : c == Colour::Blue ? blue.size() : green.size();
    }
};

void add_singletons(RolePaths& rp, const LinkContext& ctx, const VertexSet& leftovers) {
    for (int v : leftovers) {
        Path p{v};
        Colour best = Colour::Red;
        bool found = false;
        for (Colour c : {Colour::Red, Colour::Blue, Colour::Green}) {
            if (!is_linkable(ctx, p, c)) continue;
            if (!found || rp.count(c) < rp.count(best)) {
                best = c;
                found = true;
            }
        }
        if (!found) throw InternalInvariant("case (iii): leftover vertex is not linkable");
        rp.of(best).push_back(p);
    }
}

void add_coloured(RolePaths& rp, const std::vector<ColouredPath>& paths) {
    for (const auto& cp : paths)
        if (!cp.path.empty()) rp.of(cp.colour).push_back(cp.path);
}

ThreeCycleCover case_iii_pipeline(const TriColouredComplete& k_actual,
                                  const CaseClassification& cls) {
    // Reservoirs and A' in actual colours.
    auto head = [](const VertexSet& s, size_t n) {
        return VertexSet(s.begin(), s.begin() + static_cast<long>(n));
    };
    auto tail = [](const VertexSet& s, size_t n) {
        return VertexSet(s.begin() + static_cast<long>(n), s.end());
    };
    constexpr size_t kD = 400;
    VertexSet d_rb = head(cls.a_rb, kD), ap_rb = tail(cls.a_rb, kD);
    VertexSet d_bg = head(cls.a_bg, kD), ap_bg = tail(cls.a_bg, kD);
    VertexSet d_rg = head(cls.a_rg, kD), ap_rg = tail(cls.a_rg, kD);
    VertexSet d_all = sorted_union({&d_rb, &d_bg, &d_rg});

    // W partition by the 200/200 rule, first-match order rb, bg, rg.
    VertexSet w_rb, w_bg, w_rg;
    for (int v : cls.w) {
        int reds = 0, blues = 0, greens = 0;
        for (int u : d_all) {
            Colour c = k_actual.colour(v, u);
            reds += c == Colour::Red;
            blues += c == Colour::Blue;
            greens += c == Colour::Green;
        }
        if (reds >= 200 && blues >= 200)
            w_rb.push_back(v);
        else if (blues >= 200 && greens >= 200)
            w_bg.push_back(v);
        else if (reds >= 200 && greens >= 200)
            w_rg.push_back(v);
        else
            throw InternalInvariant("case (iii): W vertex fits no 200/200 pair");
    }

    bool exchanged = false;
    size_t ap_total = ap_rb.size() + ap_bg.size() + ap_rg.size();
    size_t w_total = w_rb.size() + w_bg.size() + w_rg.size();
    if (ap_total > w_total) {
        std::swap(ap_rb, w_rb);
        std::swap(ap_bg, w_bg);
        std::swap(ap_rg, w_rg);
        exchanged = true;
    }

    // Role relabelling so that |W_bg| >= |W_rg| >= |W_rb| in role space.
    struct Named {
        VertexSet* d;
        VertexSet* ap;
        VertexSet* w;
    };
    auto pair_sets = [&](Colour a, Colour b) -> Named {
        int lo = std::min(static_cast<int>(a), static_cast<int>(b));
        int hi = std::max(static_cast<int>(a), static_cast<int>(b));
        if (lo == 0 && hi == 1) return {&d_rb, &ap_rb, &w_rb};
        if (lo == 1 && hi == 2) return {&d_bg, &ap_bg, &w_bg};
        return {&d_rg, &ap_rg, &w_rg};
    };
    static const std::array<std::array<Colour, 3>, 6> perms = {{
        {Colour::Red, Colour::Blue, Colour::Green},
        {Colour::Red, Colour::Green, Colour::Blue},
        {Colour::Blue, Colour::Red, Colour::Green},
        {Colour::Blue, Colour::Green, Colour::Red},
        {Colour::Green, Colour::Red, Colour::Blue},
        {Colour::Green, Colour::Blue, Colour::Red},
    }};
    std::array<Colour, 3> chosen = perms[0];
    for (const auto& perm : perms) {
        // role pair {B,G} maps to actual pair {perm[1], perm[2]}, etc.
        size_t wbg = pair_sets(perm[1], perm[2]).w->size();
        size_t wrg = pair_sets(perm[0], perm[2]).w->size();
        size_t wrb = pair_sets(perm[0], perm[1]).w->size();
        if (wbg >= wrg && wrg >= wrb) {
            chosen = perm;
            break;
        }
    }
    RoleSpace rs = make_role_space(k_actual, chosen);
    LinkContext ctx;
    ctx.d_rb = *pair_sets(chosen[0], chosen[1]).d;
    ctx.ap_rb = *pair_sets(chosen[0], chosen[1]).ap;
    ctx.w_rb = *pair_sets(chosen[0], chosen[1]).w;
    ctx.d_bg = *pair_sets(chosen[1], chosen[2]).d;
    ctx.ap_bg = *pair_sets(chosen[1], chosen[2]).ap;
    ctx.w_bg = *pair_sets(chosen[1], chosen[2]).w;
    ctx.d_rg = *pair_sets(chosen[0], chosen[2]).d;
    ctx.ap_rg = *pair_sets(chosen[0], chosen[2]).ap;
    ctx.w_rg = *pair_sets(chosen[0], chosen[2]).w;

    const TriColouredComplete& k = rs.k;
    VertexSet ap_all = sorted_union({&ctx.ap_rb, &ctx.ap_bg, &ctx.ap_rg});
    long long nbg = static_cast<long long>(ctx.w_bg.size());
    long long nrg = static_cast<long long>(ctx.w_rg.size());
    long long nrb = static_cast<long long>(ctx.w_rb.size());
    long long nap = static_cast<long long>(ap_all.size());
    long long diff = nbg - nrg - nrb;

    RolePaths rp;
    const Cycle* pre_red = nullptr;
    Cycle pre_red_storage;

    if (diff >= 0 && nap >= diff) {
        // Case 1: two balanced three-coloured bipartite covers.
        long long ebg_size = (nap + diff) / 2;
        long long e_rest = (nap - diff) / 2;
        VertexSet e_bg = head(ctx.w_bg, static_cast<size_t>(std::min(ebg_size, nbg)));
        long long from_rg = std::min<long long>(e_rest, nrg);
        VertexSet e_rg = head(ctx.w_rg, static_cast<size_t>(from_rg));
        VertexSet e_rb = head(ctx.w_rb, static_cast<size_t>(std::min(e_rest - from_rg, nrb)));
        VertexSet y1 = sorted_union({&e_bg, &e_rg, &e_rb});
        auto call_a = three_colour_bipartite(ap_all, y1, k);
        VertexSet x2, y2;
        x2 = tail(ctx.w_bg, e_bg.size());
        {
            VertexSet r1 = tail(ctx.w_rg, e_rg.size());
            VertexSet r2 = tail(ctx.w_rb, e_rb.size());
            y2 = sorted_union({&r1, &r2});
        }
        auto call_b = three_colour_bipartite(x2, y2, k);
        add_coloured(rp, call_a.paths);
        add_coloured(rp, call_b.paths);
        add_singletons(rp, ctx, call_a.leftover);
        add_singletons(rp, ctx, call_b.leftover);
    } else if (diff > nap) {
        // Case 2: cover the small side of Bipart(W_bg; A' u W_rg u W_rb).
        VertexSet small = sorted_union({&ap_all, &ctx.w_rg, &ctx.w_rb});
        auto cs = cover_side(small, ctx.w_bg, k);
        std::vector<char> covered(k.order(), 0);
        for (auto& cp : cs.paths)
            for (int v : cp.path) covered[v] = 1;
        VertexSet wbg_rest;
        for (int v : ctx.w_bg)
            if (!covered[v]) wbg_rest.push_back(v);
        auto pac = paths_and_cycle_over(wbg_rest, k, Colour::Blue, Colour::Green, Colour::Red);
        if (cs.mode == CoverSideResult::Mode::AllBlueGreen) {
            add_coloured(rp, cs.paths);
            if (!pac.single.path.empty()) rp.of(Colour::Blue).push_back(pac.single.path);
            if (!pac.two_a.path.empty()) rp.of(Colour::Green).push_back(pac.two_a.path);
            if (!pac.two_b.path.empty()) rp.of(Colour::Green).push_back(pac.two_b.path);
            pre_red_storage = pac.cycle;
            pre_red = &pre_red_storage;
        } else {
            // Some cover path may be red: open the red cycle into a path and
            // re-anchor it through two red neighbours in the small side.
            Path r = pac.cycle.seq;
            int x1 = -1, x2 = -1;
            if (!r.empty()) {
                for (int u : small) {
                    if (k.colour(u, r.front()) == Colour::Red && x1 < 0 && u != x2) x1 = u;
                }
                for (int u : small) {
                    if (k.colour(u, r.back()) == Colour::Red && u != x1 && x2 < 0) x2 = u;
                }
                if (x1 < 0 || x2 < 0)
                    throw InternalInvariant("case (iii) 2: red degree guarantee failed");
            }
            std::vector<ColouredPath> repaired;
            for (auto& cp : cs.paths) {
                Path cur;
                for (int v : cp.path) {
                    if (v == x1 || v == x2) {
                        if (!cur.empty()) repaired.push_back({cur, cp.colour});
                        cur.clear();
                    } else {
                        cur.push_back(v);
                    }
                }
                if (!cur.empty()) repaired.push_back({cur, cp.colour});
            }
            add_coloured(rp, repaired);
            if (!r.empty()) {
                Path red_path;
                red_path.push_back(x1);
                red_path.insert(red_path.end(), r.begin(), r.end());
                red_path.push_back(x2);
                rp.of(Colour::Red).push_back(red_path);
            }
            if (!pac.single.path.empty()) rp.of(Colour::Blue).push_back(pac.single.path);
            if (!pac.two_a.path.empty()) rp.of(Colour::Green).push_back(pac.two_a.path);
            if (!pac.two_b.path.empty()) rp.of(Colour::Green).push_back(pac.two_b.path);
        }
    } else {
        // Case 3: |W_bg| <= |W_rg| + |W_rb| (and |W| >= |A'|). Shrink the W'
        // triple until |W \ W'| is within 2-3 of |A'|.
        VertexSet wp_bg = ctx.w_bg, wp_rg = ctx.w_rg, wp_rb = ctx.w_rb;
        long long outside = 0;
        while (true) {
            // Remove one vertex from W'_bg and one or both of W'_rg, W'_rb,
            // keeping |W'_bg| <= |W'_rg| + |W'_rb|, |W'_bg| >= each, and
            // |W \ W'| <= |A'|.
            long long bg = static_cast<long long>(wp_bg.size());
            long long rg = static_cast<long long>(wp_rg.size());
            long long rb = static_cast<long long>(wp_rb.size());
            auto feasible = [&](long long nbg2, long long nrg2, long long nrb2, int removed) {
                if (nbg2 < 0 || nrg2 < 0 || nrb2 < 0) return false;
                if (outside + removed > nap) return false;
                if (nbg2 > nrg2 + nrb2) return false;
                return nbg2 >= std::max(nrg2, nrb2);
            };
            if (feasible(bg - 1, rg - 1, rb, 2)) {
                wp_bg.pop_back();
                wp_rg.pop_back();
                outside += 2;
            } else if (feasible(bg - 1, rg, rb - 1, 2)) {
                wp_bg.pop_back();
                wp_rb.pop_back();
                outside += 2;
            } else if (feasible(bg - 1, rg - 1, rb - 1, 3)) {
                wp_bg.pop_back();
                wp_rg.pop_back();
                wp_rb.pop_back();
                outside += 3;
            } else {
                break;
            }
            if (outside >= nap - 2) break;  // close enough to the |A'| floor
        }
        long long srb = static_cast<long long>(wp_rb.size());
        long long srg = static_cast<long long>(wp_rg.size());
        long long sbg = static_cast<long long>(wp_bg.size());
        long long e_sz = (srb + srg - sbg) / 2;
        e_sz = std::max<long long>(0, std::min({e_sz, srb, srg}));
        VertexSet e_rg = head(wp_rg, static_cast<size_t>(e_sz));
        VertexSet e_rb = head(wp_rb, static_cast<size_t>(e_sz));
        VertexSet rest_rg = tail(wp_rg, e_rg.size());
        VertexSet rest_rb = tail(wp_rb, e_rb.size());
        VertexSet y1 = sorted_union({&rest_rg, &rest_rb});
        auto call_a = three_colour_bipartite(wp_bg, y1, k);
        auto call_b = three_colour_bipartite(e_rg, e_rb, k);
        VertexSet w_outside;  // W \ (W'_rb u W'_bg u W'_rg)
        {
            VertexSet wp_all = sorted_union({&wp_bg, &wp_rg, &wp_rb});
            VertexSet w_all = sorted_union({&ctx.w_rb, &ctx.w_bg, &ctx.w_rg});
            for (int v : w_all)
                if (!std::binary_search(wp_all.begin(), wp_all.end(), v)) w_outside.push_back(v);
        }
        auto call_c = three_colour_bipartite(ap_all, w_outside, k);
        add_coloured(rp, call_a.paths);
        add_coloured(rp, call_b.paths);
        add_coloured(rp, call_c.paths);
        add_singletons(rp, ctx, call_a.leftover);
        add_singletons(rp, ctx, call_b.leftover);
        add_singletons(rp, ctx, call_c.leftover);
    }

    ThreeCycleCover role_cover =
        linkable_to_three_cycles(rp.red, rp.blue, rp.green, pre_red, ctx, k, cls.s);

    // Map role colours back to actual colours.
    ThreeCycleCover out;
    out.case_name = "iii";
    out.s = cls.s;
    out.exchanged_roles = exchanged;
    out.colour_relabel = {colour_letter(chosen[0]), colour_letter(chosen[1]),
                          colour_letter(chosen[2])};
    for (int i = 0; i < 3; ++i) {
        out.cycles[i].cycle = role_cover.cycles[i].cycle;
        out.cycles[i].colour = chosen[static_cast<int>(role_cover.cycles[i].colour)];
    }
    out.uncovered = role_cover.uncovered;
    long long total_paths =
        static_cast<long long>(rp.red.size() + rp.blue.size() + rp.green.size());
    out.coverage_bound_applicable = true;
    out.coverage_budget = static_cast<long long>(cls.s.size()) +
                          static_cast<long long>(d_all.size()) + 2 * total_paths;
    if (static_cast<long long>(out.uncovered.size()) > out.coverage_budget)
        throw InternalInvariant("case (iii): uncovered exceeds the coverage budget");
    if (!three_cycle_cover_valid(k_actual, out))
        throw InternalInvariant("case (iii): cover failed the checker");
    return out;
}

}  // namespace

ThreeCycleCover three_cycles(const TriColouredComplete& k, const ThreeCyclesOptions& opt) {
    return three_cycles_with_classification(k, classify_colouring(k), opt);
}

ThreeCycleCover three_cycles_with_classification(const TriColouredComplete& k,
                                                 const CaseClassification& cls,
                                                 const ThreeCyclesOptions& opt) {
    if (!classification_holds(k, cls))
        throw InvalidInput("three_cycles: classification fails its own invariants");
    int n = k.order();
    std::vector<char> in_s(n, 0);
    for (int v : cls.s) in_s[v] = 1;
    VertexSet rest;
    for (int v = 0; v < n; ++v)
        if (!in_s[v]) rest.push_back(v);

    if (cls.which == CaseClassification::Case::FourPartite)
        return close_paths_case_ii(k, cls, opt.exact_oracle_max);
    if (cls.which == CaseClassification::Case::ThreeSets) return case_iii_pipeline(k, cls);

    // Case (i).
    ThreeCycleCover out;
    out.case_name = "i";
    out.s = cls.s;
    if (rest.empty()) {
        out.uncovered = cls.s;
        out.coverage_bound_applicable = false;
        if (!three_cycle_cover_valid(k, out))
            throw InternalInvariant("case (i) empty: cover failed the checker");
        return out;
    }
    Colour c0 = cls.colour;
    Colour c1 = c0 == Colour::Red ? Colour::Blue : Colour::Red;
    Colour c2 = third_colour(c0, c1);
    // Main-colour cycle via the k-connected extractor.
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < rest.size(); ++i)
        for (size_t j = i + 1; j < rest.size(); ++j)
            if (k.colour(rest[i], rest[j]) == c0)
                edges.push_back({static_cast<int>(i), static_cast<int>(j)});
    Graph main_class(static_cast<int>(rest.size()), edges);
    auto cres = cycle_sparse_connected_full(main_class, 4, false);
    if (cres.certified_k < 4)
        throw InternalInvariant("case (i): 4-connected class missed its bound");
    Cycle c_main;
    for (int v : cres.cycle.seq) c_main.seq.push_back(rest[v]);
    out.cycles[0] = {c_main, c0};

    std::vector<char> on_cycle(n, 0);
    for (int v : c_main.seq) on_cycle[v] = 1;
    VertexSet h;
    for (int v : rest)
        if (!on_cycle[v]) h.push_back(v);
    // The two-coloured remainder graph (non-c0 pairs only).
    std::vector<std::pair<int, int>> hedges;
    for (size_t i = 0; i < h.size(); ++i)
        for (size_t j = i + 1; j < h.size(); ++j)
            if (k.colour(h[i], h[j]) != c0)
                hedges.push_back({static_cast<int>(i), static_cast<int>(j)});
    Graph hg(static_cast<int>(h.size()), hedges);
    int hsize = hg.order();
    int mindeg = hsize == 0 ? 0 : hg.degree(0);
    for (int v = 1; v < hsize; ++v) mindeg = std::min(mindeg, hg.degree(v));
    if (hsize > 0 && hsize <= 2) {
        // Degenerate leftovers are cycles themselves.
        if (hsize == 1) {
            out.cycles[1] = {Cycle::vertex(h[0]), c1};
        } else {
            Colour ec = k.colour(h[0], h[1]);
            if (ec == c1) {
                out.cycles[1] = {Cycle::edge(h[0], h[1]), c1};
            } else if (ec == c2) {
                out.cycles[2] = {Cycle::edge(h[0], h[1]), c2};
            } else {
                out.cycles[1] = {Cycle::vertex(h[0]), c1};
                out.cycles[2] = {Cycle::vertex(h[1]), c2};
            }
        }
        out.uncovered = cls.s;
        out.coverage_bound_applicable = true;
        out.coverage_budget = static_cast<long long>(cls.s.size());
    } else if (hsize > 0 && 4 * mindeg >= 3 * hsize) {
        auto first_pred = [&](int u, int v) { return k.colour(h[u], h[v]) == c1; };
        auto tc = two_cycle_oracle(hg, first_pred, std::min(opt.exact_oracle_max, 12));
        Cycle cyc1, cyc2;
        for (int v : tc.first.seq) cyc1.seq.push_back(h[v]);
        for (int v : tc.second.seq) cyc2.seq.push_back(h[v]);
        out.cycles[1] = {cyc1, c1};
        out.cycles[2] = {cyc2, c2};
        out.degraded = !tc.uncovered.empty();
        for (int v : tc.uncovered) out.uncovered.push_back(h[v]);
        for (int v : cls.s) out.uncovered.push_back(v);
        std::sort(out.uncovered.begin(), out.uncovered.end());
        out.coverage_bound_applicable = !out.degraded;
        out.coverage_budget = static_cast<long long>(cls.s.size());
    } else {
        // delta < 3|H|/4 forces |H| <= 79 given the certified degree bound.
        if (hsize > 79)
            throw InternalInvariant("case (i): small-remainder arithmetic violated");
        out.uncovered = cls.s;
        out.uncovered.insert(out.uncovered.end(), h.begin(), h.end());
        std::sort(out.uncovered.begin(), out.uncovered.end());
        out.coverage_bound_applicable = true;
        out.coverage_budget = static_cast<long long>(cls.s.size()) + 79;
    }
    if (out.coverage_bound_applicable &&
        static_cast<long long>(out.uncovered.size()) > out.coverage_budget)
        throw InternalInvariant("case (i): uncovered exceeds its budget");
    if (!three_cycle_cover_valid(k, out))
        throw InternalInvariant("case (i): cover failed the checker");
    return out;
}

}  // namespace cyclepart
