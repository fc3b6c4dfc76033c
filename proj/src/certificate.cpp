#include "cyclepart/certificate.hpp"

#include <algorithm>
#include <sstream>

#include "cyclepart/degree.hpp"

namespace cyclepart {

void CertificateDocument::add(const std::string& key, const std::string& value) {
    entries_.push_back({key, value});
}

void CertificateDocument::add_ints(const std::string& key, const std::vector<int>& values) {
    std::ostringstream os;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) os << ' ';
        os << values[i];
    }
    entries_.push_back({key, os.str()});
}

void CertificateDocument::add_int(const std::string& key, long long value) {
    entries_.push_back({key, std::to_string(value)});
}

bool CertificateDocument::has(const std::string& key) const {
    for (auto& [k, v] : entries_)
        if (k == key) return true;
    return false;
}

std::string CertificateDocument::text(const std::string& key) const {
    for (auto& [k, v] : entries_)
        if (k == key) return v;
    throw InvalidInput("certificate: missing key " + key);
}

std::vector<int> CertificateDocument::ints(const std::string& key) const {
    std::istringstream is(text(key));
    std::vector<int> out;
    long long x;
    while (is >> x) out.push_back(static_cast<int>(x));
    return out;
}

long long CertificateDocument::integer(const std::string& key) const {
    std::istringstream is(text(key));
    long long x = 0;
    if (!(is >> x)) throw InvalidInput("certificate: key " + key + " is not an integer");
    return x;
}

std::vector<std::string> CertificateDocument::keys_with_prefix(const std::string& prefix) const {
    std::vector<std::string> out;
    for (auto& [k, v] : entries_)
        if (k.rfind(prefix, 0) == 0) out.push_back(k);
    return out;
}

void CertificateDocument::write(std::ostream& out) const {
    for (auto& [k, v] : entries_) {
        out << k;
        if (!v.empty()) out << ' ' << v;
        out << '\n';
    }
}

CertificateDocument CertificateDocument::parse(std::istream& in) {
    CertificateDocument doc;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        size_t sp = line.find(' ');
        if (sp == std::string::npos)
            doc.entries_.push_back({line, ""});
        else
            doc.entries_.push_back({line.substr(0, sp), line.substr(sp + 1)});
    }
    return doc;
}

CertificateDocument make_extract_certificate(const Graph& g, const ExtractRun& run) {
    CertificateDocument doc;
    doc.add("cert", "extract");
    doc.add_int("version", 1);
    doc.add_int("n", g.order());
    doc.add_int("m", g.edge_count());
    doc.add("mode", run.mode);
    if (run.mode == "connected") {
        doc.add_int("k", run.k);
        doc.add_int("certified-k", run.certified_k);
    }
    doc.add_ints("cycle", run.cycle.seq);
    VertexSet h = remainder_set(g, run.cycle);
    doc.add_int("remainder-size", static_cast<long long>(h.size()));
    doc.add_int("remainder-max-degree-doubled", induced_max_degree2(g, h));
    return doc;
}

CertificateDocument make_three_cycles_certificate(const TriColouredComplete& k,
                                                  const ThreeCycleCover& cover) {
    CertificateDocument doc;
    doc.add("cert", "three-cycles");
    doc.add_int("version", 1);
    doc.add_int("n", k.order());
    doc.add("case", cover.case_name);
    doc.add_ints("s", cover.s);
    for (int i = 0; i < 3; ++i) {
        std::string key = "cycle-" + std::to_string(i);
        doc.add(key + "-colour", std::string(1, colour_letter(cover.cycles[i].colour)));
        doc.add_ints(key, cover.cycles[i].cycle.seq);
    }
    doc.add_ints("uncovered", cover.uncovered);
    doc.add_int("degraded", cover.degraded ? 1 : 0);
    doc.add_int("coverage-bound-applicable", cover.coverage_bound_applicable ? 1 : 0);
    doc.add_int("coverage-budget", cover.coverage_budget);
    doc.add_int("exchanged-roles", cover.exchanged_roles ? 1 : 0);
    doc.add("colour-relabel", cover.colour_relabel);
    return doc;
}

Report verify_extract_certificate(const Graph& g, const CertificateDocument& cert) {
    Report rep;
    auto complain = [&](const std::string& s) { rep.violations.push_back(s); };
    if (!cert.has("cert") || cert.text("cert") != "extract") {
        complain("kind: not an extract certificate");
        return rep;
    }
    if (cert.integer("n") != g.order()) complain("input: vertex count mismatch");
    if (cert.integer("m") != g.edge_count()) complain("input: edge count mismatch");
    Cycle c{cert.ints("cycle")};
    if (!validate_cycle(g, c)) {
        complain("cycle: not a valid cycle of the input graph");
        return rep;
    }
    VertexSet h = remainder_set(g, c);
    int delta2 = induced_max_degree2(g, h);
    if (cert.integer("remainder-size") != static_cast<long long>(h.size()))
        complain("remainder-size: mismatch");
    if (cert.integer("remainder-max-degree-doubled") != delta2)
        complain("remainder-max-degree-doubled: mismatch");
    std::string mode = cert.text("mode");
    BoundKind bound = BoundKind::half();
    if (mode == "simple")
        bound = BoundKind::half();
    else if (mode == "sparse")
        bound = BoundKind::half_minus_one();
    else if (mode == "connected") {
        long long kk = cert.integer("certified-k");
        if (kk < 1) {
            complain("certified-k: below 1");
            return rep;
        }
        bound = BoundKind::connected(static_cast<int>(kk));
    } else {
        complain("mode: unknown");
        return rep;
    }
    if (!bound_holds_doubled(delta2, static_cast<int>(h.size()), bound))
        complain("degree-bound: inequality fails");
    return rep;
}

Report verify_three_cycles_certificate(const TriColouredComplete& k,
                                       const CertificateDocument& cert) {
    Report rep;
    auto complain = [&](const std::string& s) { rep.violations.push_back(s); };
    if (!cert.has("cert") || cert.text("cert") != "three-cycles") {
        complain("kind: not a three-cycles certificate");
        return rep;
    }
    if (cert.integer("n") != k.order()) {
        complain("input: vertex count mismatch");
        return rep;
    }
    int n = k.order();
    std::vector<char> seen(n, 0);
    long long total = 0;
    for (int i = 0; i < 3; ++i) {
        std::string key = "cycle-" + std::to_string(i);
        if (!cert.has(key)) {
            complain(key + ": missing");
            return rep;
        }
        std::vector<int> seq = cert.ints(key);
        std::string colour_txt = cert.text(key + "-colour");
        auto col = colour_txt.size() == 1 ? colour_from_letter(colour_txt[0]) : std::nullopt;
        if (!col) {
            complain(key + "-colour: bad colour");
            return rep;
        }
        for (int v : seq) {
            if (v < 0 || v >= n) {
                complain(key + ": vertex out of range");
                return rep;
            }
            if (seen[v]) complain("disjointness: vertex " + std::to_string(v) + " reused");
            seen[v] = 1;
            ++total;
        }
        for (size_t j = 0; j + 1 < seq.size(); ++j)
            if (k.colour(seq[j], seq[j + 1]) != *col)
                complain("monochromaticity: wrong-colour edge in " + key);
        if (seq.size() >= 3 && k.colour(seq.back(), seq.front()) != *col)
            complain("monochromaticity: wrong-colour closing edge in " + key);
    }
    for (int v : cert.ints("uncovered")) {
        if (v < 0 || v >= n) {
            complain("uncovered: vertex out of range");
            return rep;
        }
        if (seen[v]) complain("disjointness: uncovered vertex " + std::to_string(v) + " reused");
        seen[v] = 1;
        ++total;
    }
    if (total != n) complain("coverage: cycles plus uncovered do not partition the vertices");
    if (cert.has("coverage-bound-applicable") && cert.integer("coverage-bound-applicable") == 1) {
        long long budget = cert.integer("coverage-budget");
        if (static_cast<long long>(cert.ints("uncovered").size()) > budget)
            complain("degree-bound: uncovered exceeds the stated budget");
    }
    return rep;
}

Report verify_certificate_against_graph(const Graph& g, const CertificateDocument& cert) {
    return verify_extract_certificate(g, cert);
}

Report verify_certificate_against_colouring(const TriColouredComplete& k,
                                            const CertificateDocument& cert) {
    return verify_three_cycles_certificate(k, cert);
}

}  // namespace cyclepart
