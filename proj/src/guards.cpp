#include "vinc/guards.hpp"

#include <cstdlib>

namespace vinc {

namespace {
int guard_or(int fallback) {
    const char* env = std::getenv("VINC_SIZE_GUARD");
    if (!env || !*env) return fallback;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 0) return fallback;
    return static_cast<int>(v);
}
}  // namespace

int guard_partition() { return guard_or(12); }
int guard_superinf() { return guard_or(8); }
int guard_vincular() { return guard_or(7); }
int guard_permutations() { return guard_or(10); }

void check_guard(const std::string& op, int size, int limit) {
    if (size > limit)
        throw ResourceError(op + ": size " + std::to_string(size) + " exceeds guard " + std::to_string(limit) +
                            " (set VINC_SIZE_GUARD to raise it)");
}

}  // namespace vinc
