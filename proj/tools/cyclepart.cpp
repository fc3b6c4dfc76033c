#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "cyclepart/certificate.hpp"
#include "cyclepart/connected.hpp"
#include "cyclepart/cycle_extract.hpp"
#include "cyclepart/degree.hpp"
#include "cyclepart/io.hpp"
#include "cyclepart/oracle.hpp"
#include "cyclepart/partition.hpp"

using namespace cyclepart;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitInvariant = 3;

int cmd_extract(const std::string& input, const std::string& mode, int k, bool verify) {
    Graph g = read_graph_file(input);
    ExtractRun run;
    run.mode = mode;
    if (mode == "simple") {
        run.cycle = cycle_simple(g);
    } else if (mode == "sparse") {
        run.cycle = cycle_sparse(g);
    } else if (mode == "connected") {
        if (k < 1) throw InvalidInput("extract: --k must be >= 1 in connected mode");
        run.k = k;
        auto res = cycle_sparse_connected_full(g, k, verify);
        run.cycle = res.cycle;
        run.certified_k = res.certified_k;
    } else {
        throw InvalidInput("extract: unknown mode " + mode);
    }
    CertificateDocument cert = make_extract_certificate(g, run);
    if (verify) {
        Report rep = verify_extract_certificate(g, cert);
        if (!rep.ok()) throw InternalInvariant("self-verification failed: " + rep.violations[0]);
        if (g.order() <= 14 && mode != "connected") {
            BoundKind b = mode == "simple" ? BoundKind::half() : BoundKind::half_minus_one();
            auto bf = best_cycle_bruteforce(g, b);
            if (!bf.satisfiable)
                throw InternalInvariant("brute-force oracle found no qualifying cycle");
        }
        cert.add_int("verified", 1);
    }
    cert.write(std::cout);
    return 0;
}

int cmd_three_cycles(const std::string& input, int exact_max) {
    TriColouredComplete k = read_colouring_file(input);
    ThreeCyclesOptions opt;
    opt.exact_oracle_max = exact_max;
    ThreeCycleCover cover = three_cycles(k, opt);
    CertificateDocument cert = make_three_cycles_certificate(k, cover);
    cert.write(std::cout);
    return 0;
}

uint64_t draw(std::mt19937_64& rng, uint64_t bound) { return rng() % bound; }

int cmd_gen(const std::string& family, int k, int m, int n, const std::vector<int>& sizes,
            uint64_t seed, const std::string& out_path) {
    std::ostringstream buf;
    if (family == "connected-extremal") {
        write_graph(buf, gen_connected_extremal(k, m));
    } else if (family == "path-extremal") {
        write_graph(buf, gen_path_extremal(m).graph);
    } else if (family == "four-partite") {
        if (sizes.size() != 4) throw InvalidInput("gen four-partite: need --sizes a,b,c,d");
        int total = 0;
        for (int s : sizes) {
            if (s < 1) throw InvalidInput("gen four-partite: class sizes must be >= 1");
            total += s;
        }
        TriColouredComplete kc(total);
        std::vector<int> cls(total);
        int at = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < sizes[i]; ++j) cls[at++] = i;
        auto cross = [](int a, int b) {
            int lo = std::min(a, b), hi = std::max(a, b);
            if ((lo == 0 && hi == 3) || (lo == 1 && hi == 2)) return Colour::Red;
            if ((lo == 1 && hi == 3) || (lo == 0 && hi == 2)) return Colour::Blue;
            return Colour::Green;
        };
        std::mt19937_64 rng(seed);
        for (int u = 0; u < total; ++u)
            for (int v = u + 1; v < total; ++v)
                kc.set_colour(u, v, cls[u] == cls[v] ? static_cast<Colour>(draw(rng, 3))
                                                     : cross(cls[u], cls[v]));
        write_colouring(buf, kc);
    } else if (family == "random-colouring") {
        if (n < 0) throw InvalidInput("gen random-colouring: need --n");
        TriColouredComplete kc(n);
        std::mt19937_64 rng(seed);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                kc.set_colour(u, v, static_cast<Colour>(draw(rng, 3)));
        write_colouring(buf, kc);
    } else {
        throw InvalidInput("gen: unknown family " + family);
    }
    if (out_path.empty()) {
        std::cout << buf.str();
    } else {
        std::ofstream out(out_path);
        if (!out) throw InvalidInput("gen: cannot open output file " + out_path);
        out << buf.str();
    }
    return 0;
}

int cmd_verify(const std::string& input, const std::string& cert_path) {
    std::ifstream cf(cert_path);
    if (!cf) throw InvalidInput("verify: cannot open certificate " + cert_path);
    CertificateDocument cert = CertificateDocument::parse(cf);
    if (!cert.has("cert")) throw InvalidInput("verify: certificate has no kind");
    Report rep;
    if (cert.text("cert") == "extract")
        rep = verify_certificate_against_graph(read_graph_file(input), cert);
    else if (cert.text("cert") == "three-cycles")
        rep = verify_certificate_against_colouring(read_colouring_file(input), cert);
    else
        throw InvalidInput("verify: unknown certificate kind");
    if (rep.ok()) {
        std::cout << "ok\n";
        return 0;
    }
    for (auto& v : rep.violations) std::cout << "violation: " << v << '\n';
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cycle extraction with sparse remainders, and monochromatic cycle partitions"};
    app.require_subcommand(1);

    auto* ext = app.add_subcommand("extract", "extract a cycle with a sparse remainder");
    std::string ext_input, ext_mode = "sparse";
    int ext_k = 0;
    bool ext_verify = false;
    ext->add_option("input", ext_input, "GraphFile path")->required();
    ext->add_option("--mode", ext_mode, "simple | sparse | connected");
    ext->add_option("--k", ext_k, "connectivity parameter for connected mode");
    ext->add_flag("--verify", ext_verify, "re-check the certificate and the oracle");

    auto* tc = app.add_subcommand("three-cycles", "three monochromatic cycles of a 3-colouring");
    std::string tc_input;
    int tc_exact = 10;
    tc->add_option("input", tc_input, "ColouringFile path")->required();
    tc->add_option("--exact-oracles-max", tc_exact, "exact-search ceiling for the oracles");

    auto* gen = app.add_subcommand("gen", "generate graph/colouring families");
    std::string gen_family, gen_out;
    int gen_k = 1, gen_m = 3, gen_n = -1;
    std::vector<int> gen_sizes;
    uint64_t gen_seed = 0;
    gen->add_option("--family", gen_family,
                    "connected-extremal | path-extremal | four-partite | random-colouring")
        ->required();
    gen->add_option("--k", gen_k, "extremal parameter k");
    gen->add_option("--m", gen_m, "extremal parameter m");
    gen->add_option("--n", gen_n, "vertex count for random-colouring");
    gen->add_option("--sizes", gen_sizes, "four-partite class sizes")->delimiter(',');
    gen->add_option("--seed", gen_seed, "PRNG seed");
    gen->add_option("--out", gen_out, "output path (stdout if absent)");

    auto* ver = app.add_subcommand("verify", "check a certificate against its input");
    std::string ver_input, ver_cert;
    ver->add_option("--input", ver_input, "input file")->required();
    ver->add_option("--cert", ver_cert, "certificate file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (*ext) return cmd_extract(ext_input, ext_mode, ext_k, ext_verify);
        if (*tc) return cmd_three_cycles(tc_input, tc_exact);
        if (*gen) return cmd_gen(gen_family, gen_k, gen_m, gen_n, gen_sizes, gen_seed, gen_out);
        if (*ver) return cmd_verify(ver_input, ver_cert);
    } catch (const InvalidInput& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const InternalInvariant& e) {
        std::cerr << "internal invariant violated: " << e.what() << '\n';
        return kExitInvariant;
    }
    return kExitInput;
}
