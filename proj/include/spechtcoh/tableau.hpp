#pragma once

#include <cstdint>
#include <vector>

#include "spechtcoh/config.hpp"
#include "spechtcoh/partition.hpp"
#include "spechtcoh/tabloid.hpp"

namespace spechtcoh {

// A filling of the diagram of a partition with 1..d, rows increasing left to
// right and columns increasing top to bottom.
class StandardTableau {
public:
    StandardTableau(Partition shape, std::vector<std::vector<unsigned>> rows);

    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<unsigned>>& rows() const { return rows_; }

    // Entries of column j (0-based), top to bottom.
    std::vector<unsigned> column(unsigned j) const;

    // Forget the order within rows.
    Tabloid tabloid() const;

private:
    Partition shape_;
    std::vector<std::vector<unsigned>> rows_;
};

// All standard tableaux of the shape, in a fixed deterministic order
// (entries 1..d placed in turn, trying rows top to bottom). The count
// equals hook_length_dimension.
std::vector<StandardTableau> standard_tableaux(
    const Partition& lambda, std::uint64_t count_cap = Limits{}.dimension_cap);

// Number of standard tableaux, d! / prod(hooks), computed exactly through
// prime-exponent bookkeeping so large first rows cannot overflow midway.
std::uint64_t hook_length_dimension(const Partition& lambda);

}  // namespace spechtcoh
