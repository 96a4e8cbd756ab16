#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "spechtcoh/config.hpp"
#include "spechtcoh/partition.hpp"
#include "spechtcoh/permutation.hpp"

namespace spechtcoh {

// Number of tabloids of a shape: d! / prod(parts!). Exact; throws
// std::overflow_error if the count does not fit in 64 bits.
std::uint64_t tabloid_count(const Composition& shape);

// A row-assignment word: word[e] is the 0-based row holding symbol e+1.
// The word is the canonical form of the row-equivalence class, so equality
// of words is equality of tabloids.
class Tabloid {
public:
    Tabloid(Composition shape, std::vector<std::uint8_t> word);

    const Composition& shape() const { return shape_; }
    const std::vector<std::uint8_t>& word() const { return word_; }

    // Symbols (1-based) sitting in the given 0-based row, increasing.
    std::vector<unsigned> row_entries(unsigned row) const;

    bool operator==(const Tabloid& o) const { return word_ == o.word_; }
    bool operator!=(const Tabloid& o) const { return !(*this == o); }

    // Second-row entries, the usual shorthand for two-row shapes ("134").
    std::string bar_notation() const;

private:
    Composition shape_;
    std::vector<std::uint8_t> word_;
};

// sigma moves symbol e to sigma(e), rows follow: word'[sigma[e]] = word[e].
Tabloid act(const Permutation& sigma, const Tabloid& t);

// Indexing for the tabloid basis of one permutation module. Enumeration is
// lexicographic on words; rank/unrank are the inverse bijections with that
// order. Everything downstream (matrices, echelon bases, certificates)
// inherits this order, which is what makes output bit-reproducible.
class TabloidSpace {
public:
    explicit TabloidSpace(Composition shape,
                          std::uint64_t dimension_cap = Limits{}.dimension_cap);

    const Composition& shape() const { return shape_; }
    unsigned degree() const { return shape_.sum(); }
    std::uint64_t dimension() const { return dimension_; }

    std::uint64_t rank(const Tabloid& t) const;
    std::uint64_t rank_word(std::span<const std::uint8_t> word) const;
    Tabloid unrank(std::uint64_t index) const;

    std::vector<Tabloid> enumerate() const;

    // Lexicographically first word, and in-place successor; the pair allows
    // walking the basis in rank order without repeated unranking.
    std::vector<std::uint8_t> first_word() const;
    static bool next_word(std::vector<std::uint8_t>& word);

    // The permutation r -> rank(act(sigma, unrank(r))) of {0..dim-1}.
    std::vector<std::uint64_t> rank_action(const Permutation& sigma) const;

private:
    Composition shape_;
    std::uint64_t dimension_ = 1;
};

}  // namespace spechtcoh
