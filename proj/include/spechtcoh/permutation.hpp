#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace spechtcoh {

// A permutation of {0, ..., d-1} stored as its image table: perm[e] is the
// image of e. Entry e represents the symbol e+1.
using Permutation = std::vector<unsigned>;

Permutation identity_permutation(unsigned d);

// s after t: (s*t)(e) = s(t(e)).
Permutation compose(const Permutation& s, const Permutation& t);

Permutation inverse_permutation(const Permutation& s);

// Adjacent transpositions s_1, ..., s_{d-1}; s_i swaps symbols i and i+1.
std::vector<Permutation> coxeter_generators(unsigned d);

Permutation random_permutation(unsigned d, std::mt19937& rng);

}  // namespace spechtcoh
