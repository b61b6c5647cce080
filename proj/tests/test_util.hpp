#pragma once

#include <cstdint>
#include <vector>

#include "fgq/word.hpp"

namespace fgq::testutil {

inline Word W(const char* text) { return parse_word(text, 2); }

/// Calls fn on every reduced word of rank 2 with letter length in
/// [0, max_len], including the identity.
template <typename Fn>
void for_each_reduced_word(std::int64_t max_len, Fn&& fn) {
    std::vector<int> letters;  // 0 = a, 1 = a^-1, 2 = b, 3 = b^-1
    auto emit = [&] {
        WordBuilder b(2);
        for (int l : letters)
            b.push(l / 2, l % 2 == 0 ? 1 : -1);
        fn(b.take());
    };
    auto rec = [&](auto&& self, std::int64_t remaining) -> void {
        emit();
        if (remaining == 0)
            return;
        for (int l = 0; l < 4; ++l) {
            if (!letters.empty()) {
                int prev = letters.back();
                if (prev / 2 == l / 2 && prev % 2 != l % 2)
                    continue;  // would cancel
            }
            letters.push_back(l);
            self(self, remaining - 1);
            letters.pop_back();
        }
    };
    rec(rec, max_len);
}

/// x_k = a^k b^k (a^-1 b)^(k-1) a^-k b^-k (a b^-1)^(k-1) assembled with
/// plain mul/pow calls, independent of the library's builders.
inline Word xk_by_formula(std::int64_t k) {
    Word a = Word::generator(2, 0);
    Word b = Word::generator(2, 1);
    Word w = pow(a, k);
    w = mul(w, pow(b, k));
    w = mul(w, pow(mul(inv(a), b), k - 1));
    w = mul(w, pow(a, -k));
    w = mul(w, pow(b, -k));
    w = mul(w, pow(mul(a, inv(b)), k - 1));
    return w;
}

}  // namespace fgq::testutil
