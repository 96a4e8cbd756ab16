#include "spechtcoh/tabloid.hpp"

#include <algorithm>
#include <stdexcept>

#include "spechtcoh/errors.hpp"

namespace spechtcoh {

std::uint64_t tabloid_count(const Composition& shape) {
    // Stepwise product of binomials C(cumulative, part); each step is exact.
    unsigned __int128 total = 1;
    std::uint64_t placed = 0;
    for (unsigned part : shape.parts()) {
        for (unsigned j = 1; j <= part; ++j) {
            total = total * (placed + j) / j;
            if (total > static_cast<unsigned __int128>(UINT64_MAX))
                throw std::overflow_error("tabloid_count: does not fit in 64 bits");
        }
        placed += part;
    }
    return static_cast<std::uint64_t>(total);
}

Tabloid::Tabloid(Composition shape, std::vector<std::uint8_t> word)
    : shape_(std::move(shape)), word_(std::move(word)) {
    if (word_.size() != shape_.sum())
        throw std::invalid_argument("Tabloid: word length does not match shape");
    std::vector<std::uint64_t> counts(shape_.length(), 0);
    for (std::uint8_t row : word_) {
        if (row >= shape_.length())
            throw std::invalid_argument("Tabloid: row index out of range");
        ++counts[row];
    }
    for (std::size_t i = 0; i < counts.size(); ++i)
        if (counts[i] != shape_.part(i))
            throw std::invalid_argument("Tabloid: row sizes do not match shape");
}

std::vector<unsigned> Tabloid::row_entries(unsigned row) const {
    std::vector<unsigned> out;
    for (std::size_t e = 0; e < word_.size(); ++e)
        if (word_[e] == row)
            out.push_back(static_cast<unsigned>(e) + 1);
    return out;
}

std::string Tabloid::bar_notation() const {
    std::string out;
    const bool wide = word_.size() > 9;
    for (unsigned entry : row_entries(1)) {
        if (wide && !out.empty()) out += ',';
        out += std::to_string(entry);
    }
    return out;
}

Tabloid act(const Permutation& sigma, const Tabloid& t) {
    const auto& w = t.word();
    std::vector<std::uint8_t> out(w.size());
    for (std::size_t e = 0; e < w.size(); ++e)
        out[sigma[e]] = w[e];
    return Tabloid(t.shape(), std::move(out));
}

TabloidSpace::TabloidSpace(Composition shape, std::uint64_t dimension_cap)
    : shape_(std::move(shape)) {
    dimension_ = tabloid_count(shape_);
    if (dimension_ > dimension_cap)
        throw CapExceeded("tabloid basis of shape (" + shape_.to_string() + ") has " +
                          std::to_string(dimension_) + " elements, over the cap of " +
                          std::to_string(dimension_cap));
}

std::uint64_t TabloidSpace::rank_word(std::span<const std::uint8_t> word) const {
    const std::size_t r = shape_.length();
    std::vector<std::uint64_t> counts(r);
    for (std::size_t i = 0; i < r; ++i)
        counts[i] = shape_.part(i);

    // Standard multiset-permutation ranking: walk the word, counting the
    // arrangements that start with a strictly smaller row value.
    std::uint64_t arrangements = dimension_;
    std::uint64_t remaining = degree();
    std::uint64_t rank = 0;
    for (std::uint8_t c : word) {
        for (std::uint8_t b = 0; b < c; ++b)
            if (counts[b] > 0)
                rank += arrangements * counts[b] / remaining;
        arrangements = arrangements * counts[c] / remaining;
        --counts[c];
        --remaining;
    }
    return rank;
}

std::uint64_t TabloidSpace::rank(const Tabloid& t) const {
    if (t.shape() != shape_)
        throw std::invalid_argument("rank: tabloid shape mismatch");
    return rank_word(t.word());
}

Tabloid TabloidSpace::unrank(std::uint64_t index) const {
    if (index >= dimension_)
        throw std::out_of_range("unrank: index " + std::to_string(index) + " out of range");
    const std::size_t r = shape_.length();
    std::vector<std::uint64_t> counts(r);
    for (std::size_t i = 0; i < r; ++i)
        counts[i] = shape_.part(i);

    std::vector<std::uint8_t> word(degree());
    std::uint64_t arrangements = dimension_;
    std::uint64_t remaining = degree();
    for (std::size_t e = 0; e < word.size(); ++e) {
        for (std::uint8_t c = 0; c < r; ++c) {
            if (counts[c] == 0)
                continue;
            const std::uint64_t starting_with_c = arrangements * counts[c] / remaining;
            if (index < starting_with_c) {
                word[e] = c;
                arrangements = starting_with_c;
                --counts[c];
                --remaining;
                break;
            }
            index -= starting_with_c;
        }
    }
    return Tabloid(shape_, std::move(word));
}

std::vector<std::uint8_t> TabloidSpace::first_word() const {
    std::vector<std::uint8_t> word;
    word.reserve(degree());
    for (std::size_t i = 0; i < shape_.length(); ++i)
        word.insert(word.end(), shape_.part(i), static_cast<std::uint8_t>(i));
    return word;
}

bool TabloidSpace::next_word(std::vector<std::uint8_t>& word) {
    return std::next_permutation(word.begin(), word.end());
}

std::vector<Tabloid> TabloidSpace::enumerate() const {
    std::vector<Tabloid> out;
    out.reserve(dimension_);
    auto word = first_word();
    do {
        out.emplace_back(shape_, word);
    } while (next_word(word));
    return out;
}

std::vector<std::uint64_t> TabloidSpace::rank_action(const Permutation& sigma) const {
    std::vector<std::uint64_t> action(dimension_);
    auto word = first_word();
    std::vector<std::uint8_t> image(word.size());
    std::uint64_t r = 0;
    do {
        for (std::size_t e = 0; e < word.size(); ++e)
            image[sigma[e]] = word[e];
        action[r++] = rank_word(image);
    } while (next_word(word));
    return action;
}

}  // namespace spechtcoh
