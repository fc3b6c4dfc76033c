#pragma once

#include <array>
#include <optional>

#include "cyclepart/graph.hpp"

namespace cyclepart {

enum class Colour : uint8_t { Red = 0, Blue = 1, Green = 2 };

inline char colour_letter(Colour c) { return c == Colour::Red ? 'R' : c == Colour::Blue ? 'B' : 'G'; }
std::optional<Colour> colour_from_letter(char ch);

// Complete graph with every unordered pair coloured Red/Blue/Green.
class TriColouredComplete {
  public:
    TriColouredComplete() = default;
    explicit TriColouredComplete(int n) : n_(n), colour_(static_cast<size_t>(n) * n, 0) {}

    int order() const { return n_; }
    Colour colour(int u, int v) const {
        check_pair(u, v);
        return static_cast<Colour>(colour_[static_cast<size_t>(u) * n_ + v]);
    }
    void set_colour(int u, int v, Colour c) {
        check_pair(u, v);
        colour_[static_cast<size_t>(u) * n_ + v] = static_cast<uint8_t>(c);
        colour_[static_cast<size_t>(v) * n_ + u] = static_cast<uint8_t>(c);
    }

    // Restriction to a vertex subset, re-indexed; mapping kept by the caller.
    TriColouredComplete restrict(const VertexSet& s) const;

  private:
    void check_pair(int u, int v) const {
        if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v)
            throw InvalidInput("bad vertex pair in colouring");
    }
    int n_ = 0;
    std::vector<uint8_t> colour_;
};

// Graph on V(K) whose edges are exactly the c-coloured pairs.
Graph colour_class(const TriColouredComplete& k, Colour c);

// The rigid four-class pattern: A1-A4 and A2-A3 red, A2-A4 and A1-A3 blue,
// A3-A4 and A1-A2 green; within-class pairs arbitrary.
struct FourPartition {
    std::array<VertexSet, 4> classes;
};

bool four_partition_holds(const TriColouredComplete& k, const FourPartition& p);

// Component-pair characterization; first witness in lexicographic order.
std::optional<FourPartition> recognize_4partite(const TriColouredComplete& k);

struct SplitComponentsResult {
    VertexSet s;                    // |S| <= (k-1)*m
    std::vector<VertexSet> parts;   // components of G\S
    enum class Outcome { ManyParts, AllGoodParts } outcome;
};

// Cuts small separators until G\S has >= m components or every component is
// k-connected or complete.
SplitComponentsResult split_components(const Graph& g, int k, int m);

struct DisconnectResult {
    VertexSet t;  // |T| <= k*m
    enum class Outcome { KConnectedOrComplete, SmallConn } outcome;
};

// Either G\T is k-connected or complete, or its largest component has at
// most |G\T| - m vertices.
DisconnectResult disconnect_or_connected(const Graph& g, int k, int m);

// The case classification of 3-coloured complete graphs.
struct CaseClassification {
    enum class Case { ColourConnected, FourPartite, ThreeSets };
    Case which;
    VertexSet s;

    // Case (i): remainder empty or 4-connected in `colour`.
    Colour colour = Colour::Red;

    // Case (ii).
    FourPartition partition;

    // Case (iii): A_rb, A_bg, A_rg, W with the cross-colour constraints.
    VertexSet a_rb, a_bg, a_rg, w;
};

// Constructive disconnecting constant c_d(k, m).
inline long long cd_constant(long long k, long long m) { return k * m; }

CaseClassification classify_colouring(const TriColouredComplete& k);

// Re-checks every clause of a classification against the colouring.
bool classification_holds(const TriColouredComplete& k, const CaseClassification& c);

}  // namespace cyclepart
