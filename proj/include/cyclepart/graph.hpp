#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclepart {

// Input that violates a documented precondition.
struct InvalidInput : std::invalid_argument {
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// A broken internal invariant: a constructed object failed its own certificate.
struct InternalInvariant : std::logic_error {
    explicit InternalInvariant(const std::string& what) : std::logic_error(what) {}
};

// Half-integer degree value stored as a doubled integer, so that the maximum
// degree of the empty graph can be -1/2 and every comparison stays exact.
struct DegreeBound {
    int doubled = -1;  // 2 * degree; -1 encodes the empty-graph convention

    friend bool operator==(DegreeBound a, DegreeBound b) { return a.doubled == b.doubled; }
    friend bool operator<(DegreeBound a, DegreeBound b) { return a.doubled < b.doubled; }
    friend bool operator<=(DegreeBound a, DegreeBound b) { return a.doubled <= b.doubled; }
};

using VertexSet = std::vector<int>;  // sorted, duplicate-free
using Path = std::vector<int>;       // vertex sequence; empty and singleton are valid paths

// Degenerate-friendly cycle: empty, a single vertex, a single edge, or a
// proper cycle of >= 3 vertices, stored as the vertex sequence.
struct Cycle {
    std::vector<int> seq;

    enum class Kind { Empty, Vertex, Edge, Proper };

    Kind kind() const {
        switch (seq.size()) {
            case 0: return Kind::Empty;
            case 1: return Kind::Vertex;
            case 2: return Kind::Edge;
            default: return Kind::Proper;
        }
    }
    int size() const { return static_cast<int>(seq.size()); }
    bool empty() const { return seq.empty(); }

    static Cycle empty_cycle() { return Cycle{}; }
    static Cycle vertex(int v) { return Cycle{{v}}; }
    static Cycle edge(int u, int v) { return Cycle{{u, v}}; }
};

// Immutable simple undirected graph on vertices 0..n-1.
// Adjacency is kept as a flat CSR layout plus bitset rows.
class Graph {
  public:
    Graph() = default;
    // Builds from an edge list; throws InvalidInput on out-of-range ids,
    // self-loops or duplicate edges.
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    static Graph complete(int n);

    int order() const { return n_; }
    int edge_count() const { return m_; }
    std::span<const int> neighbours(int v) const {
        return {flat_.data() + offs_[v], flat_.data() + offs_[v + 1]};
    }
    int degree(int v) const { return offs_[v + 1] - offs_[v]; }

    bool has_edge(int u, int v) const {
        if (u == v) return false;
        return (rows_[static_cast<size_t>(u) * words_ + static_cast<size_t>(v >> 6)] >>
                (v & 63)) & 1u;
    }

    // Bitset row of v, words_per_row() words of 64 bits.
    const uint64_t* row(int v) const { return rows_.data() + static_cast<size_t>(v) * words_; }
    int words_per_row() const { return static_cast<int>(words_); }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw InvalidInput("vertex id out of range: " + std::to_string(v));
    }

  private:
    int n_ = 0;
    int m_ = 0;
    size_t words_ = 0;
    std::vector<int> offs_;   // n_+1 offsets into flat_
    std::vector<int> flat_;   // sorted neighbour lists, concatenated
    std::vector<uint64_t> rows_;
};

// Induced subgraph together with the mapping back to the original ids.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> orig_ids;  // new id i was orig_ids[i] in the host graph
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// Maximal connected vertex sets, each sorted, list sorted by minimum member.
std::vector<VertexSet> connected_components(const Graph& g);

// Delta(G) as a half-integer; -1/2 for the empty graph.
DegreeBound max_degree(const Graph& g);

bool validate_cycle(const Graph& g, const Cycle& c);
bool validate_path(const Graph& g, const Path& p);

// kappa(G): n-1 for complete graphs, 0 for disconnected or empty graphs,
// otherwise the minimum vertex cut over non-adjacent pairs.
int vertex_connectivity(const Graph& g);

// True iff kappa(G) >= k. Cheaper than the exact value (flows are capped at k).
bool is_k_connected(const Graph& g, int k);

// A vertex cut of size < k if one exists (empty optional result encoded as
// a bool+set pair to keep the dependency surface small).
bool find_cut_below(const Graph& g, int k, VertexSet& cut_out);

namespace detail {

// Mutable "remaining vertices" view over an immutable graph. The path and
// cycle extractors recurse by deleting vertices; this avoids materializing
// induced subgraphs at every level.
class SubgraphView {
  public:
    explicit SubgraphView(const Graph& g)
        : g_(&g), alive_(g.order(), 1), deg_(g.order()), count_(g.order()) {
        for (int v = 0; v < g.order(); ++v) deg_[v] = g.degree(v);
    }

    const Graph& host() const { return *g_; }
    int order() const { return count_; }
    bool alive(int v) const { return alive_[v] != 0; }
    int degree(int v) const { return deg_[v]; }

    void remove(int v) {
        alive_[v] = 0;
        --count_;
        for (int u : g_->neighbours(v))
            if (alive_[u]) --deg_[u];
    }
    void restore(int v) {
        alive_[v] = 1;
        ++count_;
        for (int u : g_->neighbours(v))
            if (alive_[u]) ++deg_[u];
    }

    // 2 * Delta of the remaining graph (doubled; -1 when empty).
    int max_degree2() const {
        int best = -1;
        for (int v = 0; v < g_->order(); ++v)
            if (alive_[v] && 2 * deg_[v] > best) best = 2 * deg_[v];
        return best;
    }

    std::vector<int> alive_vertices() const {
        std::vector<int> out;
        out.reserve(count_);
        for (int v = 0; v < g_->order(); ++v)
            if (alive_[v]) out.push_back(v);
        return out;
    }

  private:
    const Graph* g_;
    std::vector<char> alive_;
    std::vector<int> deg_;
    int count_;
};

}  // namespace detail

}  // namespace cyclepart
