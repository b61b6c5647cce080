#pragma once

#include <cstdint>
#include <random>

#include "fgq/word.hpp"

namespace fgq {

/// Uniformly random reduced word of exactly the given letter length: the
/// first letter is free, each later letter avoids cancelling its predecessor.
inline Word random_reduced_word(std::mt19937_64& rng, int rank, std::int64_t length) {
    WordBuilder b(rank);
    int prev_gen = -1;
    std::int64_t prev_sign = 0;
    std::uniform_int_distribution<int> first(0, 2 * rank - 1);
    std::uniform_int_distribution<int> rest(0, 2 * rank - 2);
    for (std::int64_t i = 0; i < length; ++i) {
        int pick;
        if (prev_gen < 0) {
            pick = first(rng);
        } else {
            pick = rest(rng);
            int forbidden = 2 * prev_gen + (prev_sign > 0 ? 1 : 0);  // the cancelling letter
            if (pick >= forbidden)
                ++pick;
        }
        int gen = pick / 2;
        std::int64_t sign = pick % 2 == 0 ? 1 : -1;
        b.push(gen, sign);
        prev_gen = gen;
        prev_sign = sign;
    }
    return b.take();
}

/// Random element of the commutator subgroup: a product of a few commutators
/// of random reduced words. The exponent vector is zero by construction.
inline Word random_commutator_word(std::mt19937_64& rng, int rank, int max_commutators = 4,
                                   std::int64_t max_factor_length = 12) {
    std::uniform_int_distribution<int> count(1, max_commutators);
    std::uniform_int_distribution<std::int64_t> len(0, max_factor_length);
    WordBuilder b(rank);
    int n = count(rng);
    for (int i = 0; i < n; ++i)
        b.append(comm(random_reduced_word(rng, rank, len(rng)),
                      random_reduced_word(rng, rank, len(rng))));
    return b.take();
}

}  // namespace fgq
