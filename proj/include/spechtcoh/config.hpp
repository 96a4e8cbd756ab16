#pragma once

#include <cstddef>
#include <cstdint>

namespace spechtcoh {

// Resource limits shared by the heavier computations.
struct Limits {
    // Maximum number of basis tabloids per permutation module; the default
    // covers M^(9,9) (dim 48620) with room to spare.
    std::uint64_t dimension_cap = 200000;
    // Guard on dense intermediate matrices (bytes). Exceeding it raises
    // CapExceeded instead of exhausting memory.
    std::uint64_t memory_budget_bytes = std::uint64_t{2} << 30;
    // Largest d accepted by the brute-force cocycle oracle.
    unsigned oracle_d_cap = 8;
};

}  // namespace spechtcoh
