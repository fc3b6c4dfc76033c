#pragma once

#include <optional>
#include <tuple>

#include "cyclepart/degree.hpp"
#include "cyclepart/graph.hpp"

namespace cyclepart {

// Cached view of a cycle and the graph outside it: components of G\C, the
// reach N̄(v) of every cycle vertex, Delta(G\C) and f(G\C).
struct CycleState {
    const Graph* g = nullptr;
    std::vector<int> cyc;                    // clockwise vertex sequence
    std::vector<int> pos;                    // pos[v] = index in cyc, or -1
    std::vector<std::vector<int>> comps;     // outside components, sorted members
    std::vector<int> comp_id;                // per vertex; -1 on the cycle
    std::vector<int> comp_delta2;            // 2*Delta inside each component
    int delta2 = -1;                         // 2*Delta(G\C)
    long long f = 0;                         // f(G\C)
    int a_comp = -1;                         // fixed max-degree component, or -1
    std::vector<std::vector<int>> reach;     // per cycle index: adjacent comp ids
    std::vector<long long> nbar;             // |N̄(cyc[i])|
    std::vector<char> small;                 // small neighbourhood flag
    std::vector<char> conn_a;                // connected to the A component

    int length() const { return static_cast<int>(cyc.size()); }
    Cycle cycle() const { return Cycle{cyc}; }
    // Lexicographic potential (2*Delta, f, |C|).
    std::tuple<int, long long, int> potential() const { return {delta2, f, length()}; }
};

CycleState build_state(const Graph& g, const Cycle& c);

enum class Neighbourhood { Large, Small };

// v must lie on the cycle.
Neighbourhood classify_neighbourhood(const CycleState& st, int v);

struct Surgery {
    enum class Kind { ShortcutEdge, ShortcutVertex, RerouteThroughA, TwoSeqEdge, TwoSeqPath };
    Kind kind;
    std::vector<int> removed;    // cycle vertices released (all small-neighbourhood)
    std::vector<int> inserted;   // outside vertices pulled onto the cycle
    std::vector<int> new_cycle;  // resulting cycle sequence
};

// First configuration, in the order (I),(II),(III),(a),(b) and by smallest
// starting cycle index, whose side conditions hold. Requires |C| >= 3.
std::optional<Surgery> find_surgery(const CycleState& st);

// Applies the surgery and asserts the strict lexicographic decrease of the
// potential; throws InternalInvariant otherwise.
CycleState apply_surgery(const CycleState& st, const Surgery& s);

struct ConnectedResult {
    Cycle cycle;
    int certified_k = 0;    // largest k' <= requested k whose bound is certified
    long long surgeries = 0;
    int connectors = -1;    // cycle vertices adjacent to A at termination (-1: unused)
};

// Top-level extraction: cycle with (k+1)*Delta(G\C) <= |G\C| + 3(k+1)
// (doubled-integer form). verify_connectivity re-checks kappa(G) >= k first.
ConnectedResult cycle_sparse_connected_full(const Graph& g, int k,
                                            bool verify_connectivity = false);

// Convenience wrapper; throws InternalInvariant if the requested k was not
// certified (possible only for inputs that are not actually k-connected).
Cycle cycle_sparse_connected(const Graph& g, int k, bool verify_connectivity = false);

}  // namespace cyclepart
