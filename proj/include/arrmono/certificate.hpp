#ifndef ARRMONO_CERTIFICATE_HPP
#define ARRMONO_CERTIFICATE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace arrmono {

enum class Verdict { Proved, Refuted, Inconclusive };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Proved: return "Proved";
        case Verdict::Refuted: return "Refuted";
        default: return "Inconclusive";
    }
}

/// Outcome record of one verification step. `Proved` is only ever set when
/// the evidence logically implies the rational claim: full rank mod one
/// prime certifies full rank over Q, exact polynomial identities certify
/// themselves, and a reconstructed witness is re-verified with exact
/// arithmetic before it counts. Rank deficiency mod p never refutes.
struct Certificate {
    std::string id;       // stable machine name, e.g. "construction.det_e"
    std::string claim;    // human-readable statement
    std::string anchor;   // the verbatim identity it certifies, e.g. "det E = -486 f"
    Verdict verdict = Verdict::Inconclusive;
    std::vector<uint64_t> primes;
    uint64_t seed = 0;
    std::vector<std::pair<std::string, long long>> stats;  // ranks, dims, counts
    std::string soundness;  // which direction the modular evidence certifies
    std::string detail;
    double wall_ms = 0;  // reported separately; excluded from reproducibility comparisons

    void stat(const std::string& key, long long value) { stats.emplace_back(key, value); }
    long long stat_value(const std::string& key, long long fallback = -1) const {
        for (const auto& [k, v] : stats)
            if (k == key) return v;
        return fallback;
    }
    bool proved() const { return verdict == Verdict::Proved; }
};

}  // namespace arrmono

#endif
