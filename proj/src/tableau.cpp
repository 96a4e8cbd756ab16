#include "spechtcoh/tableau.hpp"

#include <stdexcept>

#include "spechtcoh/errors.hpp"

namespace spechtcoh {

StandardTableau::StandardTableau(Partition shape, std::vector<std::vector<unsigned>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (rows_.size() != shape_.length())
        throw std::invalid_argument("StandardTableau: row count mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i].size() != shape_.part(i))
            throw std::invalid_argument("StandardTableau: row length mismatch");
}

std::vector<unsigned> StandardTableau::column(unsigned j) const {
    std::vector<unsigned> out;
    for (const auto& row : rows_)
        if (j < row.size())
            out.push_back(row[j]);
    return out;
}

Tabloid StandardTableau::tabloid() const {
    std::vector<std::uint8_t> word(shape_.sum());
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (unsigned entry : rows_[i])
            word[entry - 1] = static_cast<std::uint8_t>(i);
    return Tabloid(shape_.as_composition(), std::move(word));
}

namespace {

void place_entry(unsigned entry, unsigned d, const Partition& lambda,
                 std::vector<std::vector<unsigned>>& rows, std::vector<unsigned>& filled,
                 std::uint64_t cap, std::vector<StandardTableau>& out) {
    if (entry > d) {
        out.emplace_back(lambda, rows);
        if (out.size() > cap)
            throw CapExceeded("standard_tableaux: count exceeds cap");
        return;
    }
    for (std::size_t i = 0; i < lambda.length(); ++i) {
        // Entries arrive in increasing order, so rows are automatically
        // increasing; the column condition needs the cell above filled.
        if (filled[i] >= lambda.part(i))
            continue;
        if (i > 0 && filled[i - 1] <= filled[i])
            continue;
        rows[i].push_back(entry);
        ++filled[i];
        place_entry(entry + 1, d, lambda, rows, filled, cap, out);
        --filled[i];
        rows[i].pop_back();
    }
}

}  // namespace

std::vector<StandardTableau> standard_tableaux(const Partition& lambda, std::uint64_t count_cap) {
    std::vector<StandardTableau> out;
    std::vector<std::vector<unsigned>> rows(lambda.length());
    std::vector<unsigned> filled(lambda.length(), 0);
    place_entry(1, lambda.sum(), lambda, rows, filled, count_cap, out);
    return out;
}

std::uint64_t hook_length_dimension(const Partition& lambda) {
    const unsigned d = lambda.sum();
    if (d == 0)
        return 1;
    const Partition conj = lambda.conjugate();

    // Exponent of each prime in d! minus its exponent over all hooks.
    std::vector<unsigned> primes;
    for (unsigned q = 2; q <= d; ++q) {
        bool is_prime = true;
        for (unsigned f = 2; f * f <= q; ++f)
            if (q % f == 0) { is_prime = false; break; }
        if (is_prime)
            primes.push_back(q);
    }

    unsigned __int128 result = 1;
    for (unsigned q : primes) {
        long long exponent = 0;
        for (std::uint64_t power = q; power <= d; power *= q)
            exponent += d / power;
        for (std::size_t i = 0; i < lambda.length(); ++i) {
            for (unsigned j = 0; j < lambda.part(i); ++j) {
                unsigned hook = lambda.part(i) - j + conj.part(j) - static_cast<unsigned>(i) - 1;
                while (hook % q == 0) {
                    --exponent;
                    hook /= q;
                }
            }
        }
        for (; exponent > 0; --exponent) {
            result *= q;
            if (result > static_cast<unsigned __int128>(UINT64_MAX))
                throw std::overflow_error("hook_length_dimension: does not fit in 64 bits");
        }
    }
    return static_cast<std::uint64_t>(result);
}

}  // namespace spechtcoh
