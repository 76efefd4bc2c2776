#pragma once

// Takeuchi antipodes for the two quasi-shuffle Hopf algebras and the law-checking harness.

#include <cstdint>
#include <string>
#include <vector>

#include "vinc/signatures.hpp"
#include "vinc/word_iso.hpp"

namespace vinc {

/// Antipode of (compositions, qspart, deconc).
PartComb takeuchi_antipode(const Composition& s);
PartComb takeuchi_antipode(const PartComb& x);

/// Antipode of (vincular patterns, qsgen, deconcgen).
VincComb takeuchi_antipode(const VincularPattern& v);
VincComb takeuchi_antipode(const VincComb& x);

/// m o (S (x) id) o Delta and m o (id (x) S) o Delta; both equal u(eps(x)) for a true antipode.
std::pair<PartComb, PartComb> antipode_convolutions(const Composition& s);
std::pair<VincComb, VincComb> antipode_convolutions(const VincularPattern& v);

/// Filtration by number of blocks, reported alongside size.
int block_degree(const PartComb& x);

struct LawFailure {
    std::string inputs;
    std::string lhs;
    std::string rhs;
};

struct LawReport {
    std::string law;
    int bound = 0;
    int exhaustive_bound = 0;  // sizes up to here were checked exhaustively
    std::uint64_t seed = 0;
    long long checked = 0;
    std::vector<LawFailure> failures;

    bool passed() const { return failures.empty(); }
    std::string to_json() const;
    std::string to_text() const;
};

struct LawInfo {
    std::string name;
    std::string description;
    int default_bound;
    int exhaustive_cap;  // larger bounds switch to seeded spot checks
};

const std::vector<LawInfo>& law_catalog();
bool is_known_law(const std::string& name);

struct VerifyOptions {
    std::uint64_t seed = 0;
    int spot_checks = 8;     // random instances per size above the exhaustive cap
    int pattern_size = -1;   // for signature laws; -1 picks the law's default
};

/// Throws std::invalid_argument for an unknown law; ResourceError when a size guard trips.
LawReport verify_law(const std::string& law, int bound, const VerifyOptions& opts = {});

}  // namespace vinc
