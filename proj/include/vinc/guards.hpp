#pragma once

// Size limits for the exponential enumerations. VINC_SIZE_GUARD overrides every default.

#include <stdexcept>
#include <string>

namespace vinc {

class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (patterns, compositions, expressions, series).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

int guard_partition();    // qspart / coqspart, default 12
int guard_superinf();     // |sigma| + |tau| for the permutation products, default 8
int guard_vincular();     // qsgen / coqsgen total size, default 7
int guard_permutations(); // anything enumerating all of S_n, default 10

/// Throws ResourceError when size > limit.
void check_guard(const std::string& op, int size, int limit);

}  // namespace vinc
