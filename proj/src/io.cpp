#include "cyclepart/io.hpp"

#include <fstream>
#include <sstream>

namespace cyclepart {

Graph read_graph(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw InvalidInput("graph file: missing header");
    std::istringstream head(line);
    long long n = -1, m = -1;
    if (!(head >> n >> m) || n < 0 || m < 0) throw InvalidInput("graph file: bad header");
    std::string extra;
    if (head >> extra) throw InvalidInput("graph file: trailing tokens in header");
    std::vector<std::pair<int, int>> edges;
    for (long long i = 0; i < m; ++i) {
        if (!std::getline(in, line)) throw InvalidInput("graph file: missing edge line");
        std::istringstream ls(line);
        long long u, v;
        if (!(ls >> u >> v)) throw InvalidInput("graph file: bad edge line");
        if (ls >> extra) throw InvalidInput("graph file: trailing tokens in edge line");
        if (u < 0 || v < 0 || u >= n || v >= n || u >= v)
            throw InvalidInput("graph file: edge endpoints must satisfy 0 <= u < v < n");
        edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    }
    return Graph(static_cast<int>(n), edges);  // duplicate edges rejected here
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbours(u))
            if (v > u) out << u << ' ' << v << '\n';
}

TriColouredComplete read_colouring(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw InvalidInput("colouring file: missing header");
    std::istringstream head(line);
    long long n = -1;
    if (!(head >> n) || n < 0) throw InvalidInput("colouring file: bad header");
    std::string extra;
    if (head >> extra) throw InvalidInput("colouring file: trailing tokens in header");
    TriColouredComplete k(static_cast<int>(n));
    std::vector<char> seen(static_cast<size_t>(n) * n, 0);
    long long pairs = n * (n - 1) / 2;
    for (long long i = 0; i < pairs; ++i) {
        if (!std::getline(in, line)) throw InvalidInput("colouring file: missing pair line");
        std::istringstream ls(line);
        long long u, v;
        std::string cs;
        if (!(ls >> u >> v >> cs) || cs.size() != 1)
            throw InvalidInput("colouring file: bad pair line");
        if (ls >> extra) throw InvalidInput("colouring file: trailing tokens in pair line");
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw InvalidInput("colouring file: bad pair");
        auto c = colour_from_letter(cs[0]);
        if (!c) throw InvalidInput("colouring file: colour must be R, B or G");
        size_t idx = static_cast<size_t>(std::min(u, v)) * n + std::max(u, v);
        if (seen[idx]) throw InvalidInput("colouring file: duplicate pair");
        seen[idx] = 1;
        k.set_colour(static_cast<int>(u), static_cast<int>(v), *c);
    }
    return k;
}

void write_colouring(std::ostream& out, const TriColouredComplete& k) {
    out << k.order() << '\n';
    for (int u = 0; u < k.order(); ++u)
        for (int v = u + 1; v < k.order(); ++v)
            out << u << ' ' << v << ' ' << colour_letter(k.colour(u, v)) << '\n';
}

namespace {

template <typename T, typename F>
T read_file(const std::string& path, F reader, const char* what) {
    std::ifstream in(path);
    if (!in) throw InvalidInput(std::string("cannot open ") + what + " file: " + path);
    return reader(in);
}

}  // namespace

Graph read_graph_file(const std::string& path) {
    return read_file<Graph>(path, [](std::istream& in) { return read_graph(in); }, "graph");
}

TriColouredComplete read_colouring_file(const std::string& path) {
    return read_file<TriColouredComplete>(
        path, [](std::istream& in) { return read_colouring(in); }, "colouring");
}

}  // namespace cyclepart
