#include "spechtcoh/arith.hpp"

#include <stdexcept>

namespace spechtcoh {

Prime::Prime(unsigned value) : value_(value) {
    if (value < 2)
        throw std::invalid_argument("Prime: value must be >= 2");
    for (unsigned q = 2; static_cast<std::uint64_t>(q) * q <= value; ++q)
        if (value % q == 0)
            throw std::invalid_argument("Prime: " + std::to_string(value) + " is composite");
}

PAdicDigits PAdicDigits::of(std::uint64_t t, Prime p) {
    PAdicDigits out{{}, p};
    while (t > 0) {
        out.digits.push_back(static_cast<unsigned>(t % p.value()));
        t /= p.value();
    }
    return out;
}

std::uint64_t PAdicDigits::value() const {
    std::uint64_t acc = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it)
        acc = acc * p.value() + *it;
    return acc;
}

unsigned l_p(std::uint64_t t, Prime p) {
    unsigned l = 0;
    std::uint64_t power = 1;
    while (t >= power) {
        power *= p.value();
        ++l;
    }
    return l;
}

unsigned kummer_valuation(std::uint64_t x, std::uint64_t y, Prime p) {
    const std::uint64_t q = p.value();
    unsigned carries = 0;
    unsigned carry = 0;
    while (x > 0 || y > 0 || carry > 0) {
        const std::uint64_t s = x % q + y % q + carry;
        carry = s >= q ? 1u : 0u;
        carries += carry;
        x /= q;
        y /= q;
    }
    return carries;
}

unsigned binom_mod_p(std::uint64_t n, std::int64_t k, Prime p) {
    if (k < 0 || static_cast<std::uint64_t>(k) > n)
        return 0;
    const std::uint64_t q = p.value();
    std::uint64_t kk = static_cast<std::uint64_t>(k);
    std::uint64_t result = 1;
    while (n > 0 || kk > 0) {
        const std::uint64_t nd = n % q;
        const std::uint64_t kd = kk % q;
        if (kd > nd)
            return 0;
        // C(nd, kd) for digits < p, computed directly.
        std::uint64_t c = 1;
        for (std::uint64_t j = 1; j <= kd; ++j)
            c = c * (nd - kd + j) / j;
        result = result * (c % q) % q;
        n /= q;
        kk /= q;
    }
    return static_cast<unsigned>(result);
}

bool h0_criterion(const Partition& lambda, Prime p) {
    const auto& parts = lambda.parts();
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        std::uint64_t mod = 1;
        for (unsigned j = 0; j < l_p(parts[i + 1], p); ++j)
            mod *= p.value();
        if ((parts[i] + 1ull) % mod != 0)
            return false;
    }
    return true;
}

}  // namespace spechtcoh
