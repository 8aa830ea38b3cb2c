#pragma once

#include <cstdint>

namespace twforge {

// Node-expansion counter shared by the unbounded searches. Exhausting the
// budget turns an answer into "unknown" rather than blocking.
struct Budget {
    uint64_t limit = 2'000'000;
    uint64_t used = 0;

    Budget() = default;
    explicit Budget(uint64_t lim) : limit(lim) {}

    // Counts k expansions; false once the budget is gone.
    bool tick(uint64_t k = 1) {
        used += k;
        return used <= limit;
    }
    bool exhausted() const { return used > limit; }
    uint64_t remaining() const { return used >= limit ? 0 : limit - used; }
};

enum class SearchStatus { Found, None, Unknown };

}  // namespace twforge
