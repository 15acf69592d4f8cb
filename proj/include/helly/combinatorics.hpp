#pragma once

#include <cstddef>
#include <type_traits>
#include <vector>

namespace helly {

/// Calls f(indices) for every k-subset of {0..n-1} in lexicographic order.
/// f may return false to stop early; the function then returns false.
template <class F>
bool for_each_combination(std::size_t n, std::size_t k, F &&f) {
    if (k > n) return true;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if constexpr (std::is_same_v<decltype(f(idx)), bool>) {
            if (!f(idx)) return false;
        } else {
            f(idx);
        }
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return true;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace helly
