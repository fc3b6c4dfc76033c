#include <doctest.h>

#include <sstream>

#include "cyclepart/certificate.hpp"
#include "cyclepart/cycle_extract.hpp"
#include "cyclepart/io.hpp"
#include "test_util.hpp"

using namespace cyclepart;
using namespace cyclepart::testutil;

TEST_CASE("document round trip and unknown keys") {
    CertificateDocument doc;
    doc.add("cert", "extract");
    doc.add_ints("cycle", {0, 2, 5});
    doc.add_int("n", 7);
    doc.add("future-key", "whatever 1 2 3");
    std::ostringstream out;
    doc.write(out);
    std::istringstream in(out.str());
    auto back = CertificateDocument::parse(in);
    CHECK(back.text("cert") == "extract");
    CHECK(back.ints("cycle") == std::vector<int>{0, 2, 5});
    CHECK(back.integer("n") == 7);
    CHECK(back.has("future-key"));
    CHECK_THROWS_AS(back.integer("missing"), InvalidInput);
}

TEST_CASE("extract certificates verify and detect tampering") {
    Graph g = Graph::complete(4);
    ExtractRun run;
    run.mode = "sparse";
    run.cycle = cycle_sparse(g);
    auto cert = make_extract_certificate(g, run);
    CHECK(verify_extract_certificate(g, cert).ok());

    // Tamper: move a cycle vertex out of range of validity.
    CertificateDocument bad;
    bad.add("cert", "extract");
    bad.add_int("version", 1);
    bad.add_int("n", 4);
    bad.add_int("m", 6);
    bad.add("mode", "sparse");
    bad.add_ints("cycle", {0, 1});  // an edge: valid cycle, remainder 2 verts adjacent
    bad.add_int("remainder-size", 2);
    bad.add_int("remainder-max-degree-doubled", 2);
    auto rep = verify_extract_certificate(g, bad);
    CHECK_FALSE(rep.ok());  // degree bound 2 > |H|-1 = 1
}

TEST_CASE("graph file round trip and errors") {
    Graph g = disjoint_cliques({3, 2});
    std::ostringstream out;
    write_graph(out, g);
    std::istringstream in(out.str());
    Graph back = read_graph(in);
    CHECK(back.order() == g.order());
    CHECK(back.edge_count() == g.edge_count());

    std::istringstream bad1("3 1\n1 1\n");
    CHECK_THROWS_AS(read_graph(bad1), InvalidInput);
    std::istringstream bad2("3 2\n0 1\n0 1\n");
    CHECK_THROWS_AS(read_graph(bad2), InvalidInput);
    std::istringstream bad3("3 1\n1 0\n");
    CHECK_THROWS_AS(read_graph(bad3), InvalidInput);  // u < v required
}

TEST_CASE("colouring file round trip and errors") {
    Rng rng(131);
    auto k = random_colouring(6, rng);
    std::ostringstream out;
    write_colouring(out, k);
    std::istringstream in(out.str());
    auto back = read_colouring(in);
    REQUIRE(back.order() == 6);
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v) CHECK(back.colour(u, v) == k.colour(u, v));

    std::istringstream bad("2\n0 1 X\n");
    CHECK_THROWS_AS(read_colouring(bad), InvalidInput);
    std::istringstream dup("3\n0 1 R\n1 0 B\n1 2 G\n");
    CHECK_THROWS_AS(read_colouring(dup), InvalidInput);
}

TEST_CASE("three-cycles certificates verify and detect violations") {
    auto k = monochromatic(8, Colour::Red);
    auto cover = three_cycles(k);
    auto cert = make_three_cycles_certificate(k, cover);
    CHECK(verify_three_cycles_certificate(k, cert).ok());

    // Tampered: claim a wrong-colour edge inside a "blue" cycle.
    CertificateDocument bad;
    bad.add("cert", "three-cycles");
    bad.add_int("version", 1);
    bad.add_int("n", 8);
    bad.add("case", "i");
    bad.add("s", "");
    bad.add("cycle-0-colour", "B");
    bad.add_ints("cycle-0", {0, 1, 2});
    bad.add("cycle-1-colour", "G");
    bad.add("cycle-1", "");
    bad.add("cycle-2-colour", "R");
    bad.add("cycle-2", "");
    bad.add_ints("uncovered", {3, 4, 5, 6, 7});
    auto rep = verify_three_cycles_certificate(k, bad);
    CHECK_FALSE(rep.ok());
    bool mono_violation = false;
    for (auto& v : rep.violations) mono_violation |= v.find("monochromaticity") == 0;
    CHECK(mono_violation);

    // Overlapping cycles violate disjointness.
    CertificateDocument overlap;
    overlap.add("cert", "three-cycles");
    overlap.add_int("version", 1);
    overlap.add_int("n", 8);
    overlap.add("case", "i");
    overlap.add("cycle-0-colour", "R");
    overlap.add_ints("cycle-0", {0, 1, 2});
    overlap.add("cycle-1-colour", "R");
    overlap.add_ints("cycle-1", {2, 3, 4});
    overlap.add("cycle-2-colour", "G");
    overlap.add("cycle-2", "");
    overlap.add_ints("uncovered", {5, 6, 7});
    auto rep2 = verify_three_cycles_certificate(k, overlap);
    CHECK_FALSE(rep2.ok());
    bool disj = false;
    for (auto& v : rep2.violations) disj |= v.find("disjointness") == 0;
    CHECK(disj);
}
