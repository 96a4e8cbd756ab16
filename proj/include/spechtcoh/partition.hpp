#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spechtcoh {

// A sequence of nonnegative integers summing to d. Trailing zeros are
// stripped on construction; interior zeros are kept (row-merge targets can
// have an empty middle row).
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    unsigned sum() const { return sum_; }
    // Part at 0-based index i; 0 beyond the stored length.
    unsigned part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0u; }

    bool operator==(const Composition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Composition& o) const { return !(*this == o); }

    std::string to_string() const;  // "3,3"

private:
    std::vector<unsigned> parts_;
    unsigned sum_ = 0;
};

// Nonincreasing positive parts. Throws std::invalid_argument otherwise.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    unsigned sum() const { return sum_; }
    unsigned part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0u; }

    Composition as_composition() const { return Composition(parts_); }
    Partition conjugate() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    // Descending lexicographic comparison (a linear extension of dominance).
    bool lex_greater(const Partition& o) const { return parts_ > o.parts_; }

    std::string to_string() const;           // "3,3"
    std::string to_dashed_string() const;    // "3-3" (cache file names)
    static Partition parse(const std::string& text);  // comma-separated parts

private:
    std::vector<unsigned> parts_;
    unsigned sum_ = 0;
};

// All partitions of d in descending lexicographic order, starting at (d).
std::vector<Partition> partitions_of(unsigned d);

}  // namespace spechtcoh
