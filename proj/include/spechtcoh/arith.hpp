#pragma once

#include <cstdint>
#include <vector>

#include "spechtcoh/partition.hpp"

namespace spechtcoh {

// A prime modulus, verified at construction by trial division.
class Prime {
public:
    explicit Prime(unsigned value);

    unsigned value() const { return value_; }
    bool is_odd() const { return value_ != 2; }

    bool operator==(const Prime& o) const { return value_ == o.value_; }
    bool operator!=(const Prime& o) const { return value_ != o.value_; }

private:
    unsigned value_;
};

// Base-p digits, least significant first, no trailing zeros (0 has none).
struct PAdicDigits {
    std::vector<unsigned> digits;
    Prime p;

    static PAdicDigits of(std::uint64_t t, Prime p);
    std::uint64_t value() const;
};

// Least l with t < p^l.
unsigned l_p(std::uint64_t t, Prime p);

// p-adic valuation of C(x+y, x): the number of carries when adding x and y
// in base p.
unsigned kummer_valuation(std::uint64_t x, std::uint64_t y, Prime p);

// C(n, k) mod p by the digitwise product; 0 when k < 0 or k > n. Never
// forms the full binomial, so huge n are fine.
unsigned binom_mod_p(std::uint64_t n, std::int64_t k, Prime p);

// Row congruences deciding whether the fixed vector of M^lambda lies in the
// Specht module: lambda_i = -1 mod p^{l_p(lambda_{i+1})} for every i with a
// nonempty next row. Vacuously true for one-row partitions.
bool h0_criterion(const Partition& lambda, Prime p);

}  // namespace spechtcoh
