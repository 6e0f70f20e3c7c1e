#pragma once

#include <cstdint>
#include <vector>

namespace algcalc {

/// All strictly increasing k-tuples from {0,..,n-1}, lexicographically.
inline std::vector<std::vector<int>> increasing_tuples(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> t(k);
    for (int i = 0; i < k; ++i) t[i] = i;
    while (true) {
        out.push_back(t);
        if (k == 0) break;
        int i = k - 1;
        while (i >= 0 && t[i] == n - k + i) --i;
        if (i < 0) break;
        ++t[i];
        for (int j = i + 1; j < k; ++j) t[j] = t[j - 1] + 1;
    }
    return out;
}

/// All weakly increasing k-tuples from {0,..,n-1}, lexicographically.
inline std::vector<std::vector<int>> weakly_increasing_tuples(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || (n == 0 && k > 0)) return out;
    std::vector<int> t(k, 0);
    while (true) {
        out.push_back(t);
        if (k == 0) break;
        int i = k - 1;
        while (i >= 0 && t[i] == n - 1) --i;
        if (i < 0) break;
        ++t[i];
        for (int j = i + 1; j < k; ++j) t[j] = t[i];
    }
    return out;
}

inline std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (unsigned i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace algcalc
