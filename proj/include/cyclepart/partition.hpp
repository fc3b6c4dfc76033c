#pragma once

#include <functional>
#include <string>

#include "cyclepart/colouring.hpp"
#include "cyclepart/graph.hpp"

namespace cyclepart {

// Pair-colour predicate: is_red(u, v) for u != v. The bipartite operations treat
// absent pairs of K_{n,n} as "blue" by construction, so the predicate is
// total on the vertex set handed in.
using RedPredicate = std::function<bool(int, int)>;

struct Biclique {
    VertexSet p1, p2;  // |p1| == |p2| when balanced; all cross pairs one colour
};

struct PathBicliqueResult {
    Path path;      // red
    Biclique bic;   // blue, balanced
};

// Red path plus disjoint blue balanced complete bipartite graph covering all
// of `verts` (a complete graph under is_red / blue-otherwise colours).
PathBicliqueResult path_bipartite_over(const VertexSet& verts, const RedPredicate& is_red);

struct BipartitePathBicliquesResult {
    Path path;           // red, alternating sides
    Biclique bic1, bic2; // blue, balanced, sides split across the bipartition
};

// K_{n,n} version: within-side pairs do not exist and count as blue.
BipartitePathBicliquesResult bipartite_path_bicliques(const VertexSet& side1,
                                                      const VertexSet& side2,
                                                      const RedPredicate& is_red);

struct BipartitePathsCycleResult {
    Path path1, path2;  // red
    Cycle cycle;        // blue
};

BipartitePathsCycleResult bipartite_paths_cycle(const VertexSet& side1, const VertexSet& side2,
                                                const RedPredicate& is_red);

struct ColouredPath {
    Path path;
    Colour colour;
};

struct PathsAndCycleResult {
    ColouredPath single;        // colour `single_colour`
    ColouredPath two_a, two_b;  // colour `two_colour`
    Cycle cycle;                // colour `cycle_colour`
    Colour cycle_colour;
};

// Partition of a 3-coloured complete graph on `verts` into one path of
// single_colour, two paths of two_colour and a cycle of cycle_colour.
PathsAndCycleResult paths_and_cycle_over(const VertexSet& verts, const TriColouredComplete& k,
                                         Colour single_colour, Colour two_colour,
                                         Colour cycle_colour);

// Spec-facing fixed-role wrapper (red path, two blue paths, green cycle).
PathsAndCycleResult paths_and_cycle(const TriColouredComplete& k);

struct ThreeColourBipartiteResult {
    std::vector<ColouredPath> paths;  // <= 7: 1 red + 2 blue + 4 green
    VertexSet leftover;               // exactly ||side2|-|side1|| vertices
};

// side2 may be larger; the extra vertices are returned as leftover.
ThreeColourBipartiteResult three_colour_bipartite(const VertexSet& side1, const VertexSet& side2,
                                                  const TriColouredComplete& k);

// Red cross-class must be a disjoint union of stars; covers both sides with
// at most three blue paths.
std::vector<Path> star_complement_cover(const VertexSet& side1, const VertexSet& side2,
                                        const RedPredicate& is_red);

struct CoverSideResult {
    std::vector<ColouredPath> paths;  // <= 7, covering all of the smaller side
    enum class Mode { AllBlueGreen, RedDegreeGuarantee } mode;
};

CoverSideResult cover_side(const VertexSet& smaller, const VertexSet& larger,
                           const TriColouredComplete& k);

// ------------------------------------------------------------------ oracles

struct TwoCycleResult {
    Cycle first, second;  // first-colour cycle, second-colour cycle
    VertexSet uncovered;  // empty when the cover is complete
    bool exact = false;
};

// Requires 4*delta(g) >= 3*|g|. Exact search below `exact_max`, heuristic
// (rotation-extension growth) beyond; validity always, coverage flagged.
TwoCycleResult two_cycle_oracle(const Graph& g, const RedPredicate& first_colour, int exact_max);

struct ThreePathResult {
    std::vector<ColouredPath> paths;
    bool exact = false;
    bool degraded = false;  // more than 3 paths
};

ThreePathResult three_path_oracle(const TriColouredComplete& k, int exact_max);

// ------------------------------------------------- linkable-path machinery

struct LinkContext {
    // Reservoirs and anchor sets of the case (iii) pipeline, in role colours.
    VertexSet d_rb, d_bg, d_rg;
    VertexSet ap_rb, ap_bg, ap_rg;
    VertexSet w_rb, w_bg, w_rg;
};

// Anchor set of a colour: the sets whose vertices carry >= 200 edges of that
// colour into D.
VertexSet link_anchors(const LinkContext& ctx, Colour c);

bool is_linkable(const LinkContext& ctx, const Path& p, Colour c);

struct LinkResult {
    Cycle cycle;
    VertexSet used_d;
};

// Joins <= 21 disjoint linkable paths of one colour into a cycle through the
// two reservoirs, using at most 3t reservoir vertices and dropping at most 2t
// path vertices.
LinkResult link_paths(const std::vector<Path>& paths, const VertexSet& d1, const VertexSet& d2,
                      const TriColouredComplete& k, Colour c);

struct ColouredCycle {
    Cycle cycle;
    Colour colour = Colour::Red;
};

struct ThreeCycleCover {
    // Up to three monochromatic cycles; they need not have distinct
    // colours (a 4-partite colouring admits only monochromatic pairings).
    std::array<ColouredCycle, 3> cycles;
    VertexSet uncovered;
    bool degraded = false;
    std::string case_name;  // "i", "ii", "iii"
    VertexSet s;
    bool coverage_bound_applicable = false;
    long long coverage_budget = 0;
    bool exchanged_roles = false;
    std::string colour_relabel = "RBG";  // role -> actual colour letters
};

// Rechecks structural validity: pairwise disjoint monochromatic cycles plus
// uncovered partition V(K). Shares no code with the constructors.
bool three_cycle_cover_valid(const TriColouredComplete& k, const ThreeCycleCover& cover);

struct ThreeCyclesOptions {
    int exact_oracle_max = 10;
};

ThreeCycleCover three_cycles(const TriColouredComplete& k, const ThreeCyclesOptions& opt = {});

// Dispatch on an externally supplied (re-checked) classification; three_cycles
// is classify_colouring followed by this.
ThreeCycleCover three_cycles_with_classification(const TriColouredComplete& k,
                                                 const CaseClassification& cls,
                                                 const ThreeCyclesOptions& opt = {});

// Claim-level step used by the case (iii) pipeline: paths per colour (red may
// be a pre-built cycle instead), linked through the reservoirs.
ThreeCycleCover linkable_to_three_cycles(const std::vector<Path>& red_paths,
                                         const std::vector<Path>& blue_paths,
                                         const std::vector<Path>& green_paths,
                                         const Cycle* pre_red_cycle, const LinkContext& ctx,
                                         const TriColouredComplete& k, const VertexSet& s);

}  // namespace cyclepart
