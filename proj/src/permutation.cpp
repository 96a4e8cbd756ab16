#include "spechtcoh/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace spechtcoh {

Permutation identity_permutation(unsigned d) {
    Permutation id(d);
    std::iota(id.begin(), id.end(), 0u);
    return id;
}

Permutation compose(const Permutation& s, const Permutation& t) {
    Permutation out(t.size());
    for (std::size_t e = 0; e < t.size(); ++e)
        out[e] = s[t[e]];
    return out;
}

Permutation inverse_permutation(const Permutation& s) {
    Permutation out(s.size());
    for (std::size_t e = 0; e < s.size(); ++e)
        out[s[e]] = static_cast<unsigned>(e);
    return out;
}

std::vector<Permutation> coxeter_generators(unsigned d) {
    std::vector<Permutation> gens;
    gens.reserve(d > 0 ? d - 1 : 0);
    for (unsigned i = 0; i + 1 < d; ++i) {
        Permutation s = identity_permutation(d);
        std::swap(s[i], s[i + 1]);
        gens.push_back(std::move(s));
    }
    return gens;
}

Permutation random_permutation(unsigned d, std::mt19937& rng) {
    Permutation s = identity_permutation(d);
    std::shuffle(s.begin(), s.end(), rng);
    return s;
}

}  // namespace spechtcoh
