#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "cyclepart/colouring.hpp"
#include "cyclepart/graph.hpp"
#include "cyclepart/partition.hpp"

namespace cyclepart {

// Append-only key-value document: one "key v1 v2 ..." line per entry,
// verifiers ignore unknown keys. Deterministic serialization.
class CertificateDocument {
  public:
    void add(const std::string& key, const std::string& value);
    void add_ints(const std::string& key, const std::vector<int>& values);
    void add_int(const std::string& key, long long value);

    bool has(const std::string& key) const;
    std::string text(const std::string& key) const;          // first value token(s)
    std::vector<int> ints(const std::string& key) const;     // empty list allowed
    long long integer(const std::string& key) const;

    // All entries with keys of the form prefix-0, prefix-1, ...
    std::vector<std::string> keys_with_prefix(const std::string& prefix) const;

    void write(std::ostream& out) const;
    static CertificateDocument parse(std::istream& in);

  private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

struct ExtractRun {
    std::string mode;  // "simple" | "sparse" | "connected"
    int k = 0;
    Cycle cycle;
    int certified_k = 0;  // connected mode
};

CertificateDocument make_extract_certificate(const Graph& g, const ExtractRun& run);
CertificateDocument make_three_cycles_certificate(const TriColouredComplete& k,
                                                  const ThreeCycleCover& cover);

struct Report {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Re-checks a certificate against the input graph from scratch.
Report verify_extract_certificate(const Graph& g, const CertificateDocument& cert);
Report verify_three_cycles_certificate(const TriColouredComplete& k,
                                       const CertificateDocument& cert);

// Dispatches on the "cert" kind key; the input file is re-parsed by the
// caller into whichever object the kind requires.
Report verify_certificate_against_graph(const Graph& g, const CertificateDocument& cert);
Report verify_certificate_against_colouring(const TriColouredComplete& k,
                                            const CertificateDocument& cert);

}  // namespace cyclepart
