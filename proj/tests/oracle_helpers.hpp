#pragma once

// Test-only oracles, independent of the engine's bitmask arithmetic.

#include <utility>
#include <vector>

#include "cliff/multivector.hpp"

namespace oracle {

/// Naive string-rewriting Clifford multiplier: a blade is the list of
/// its generator indices; multiplication concatenates the lists and then
/// bubble-sorts, flipping the sign per adjacent swap (e_i e_j = -e_j e_i)
/// and cancelling adjacent equal generators (e_i e_i = 1).
inline std::pair<int, std::vector<int>> rewrite_product(std::vector<int> word) {
    int sign = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < word.size(); ++i) {
            if (word[i] == word[i + 1]) {
                word.erase(word.begin() + i, word.begin() + i + 2);
                changed = true;
                break;
            }
            if (word[i] > word[i + 1]) {
                std::swap(word[i], word[i + 1]);
                sign = -sign;
                changed = true;
                break;
            }
        }
    }
    return {sign, word};
}

inline std::vector<int> blade_word(cliff::BladeMask mask) {
    std::vector<int> word;
    for (int i = 0; mask >> i; ++i)
        if (mask & (cliff::BladeMask(1) << i)) word.push_back(i);
    return word;
}

inline std::pair<int, cliff::BladeMask> blade_product_oracle(cliff::BladeMask x, cliff::BladeMask y) {
    std::vector<int> word = blade_word(x);
    const std::vector<int> right = blade_word(y);
    word.insert(word.end(), right.begin(), right.end());
    const auto [sign, sorted] = rewrite_product(std::move(word));
    cliff::BladeMask mask = 0;
    for (int i : sorted) mask |= cliff::BladeMask(1) << i;
    return {sign, mask};
}

}  // namespace oracle
