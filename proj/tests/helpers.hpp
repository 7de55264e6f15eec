#pragma once

#include <random>

#include "ctlcs/core.hpp"

namespace ctlcs::testing {

inline IntSeq random_seq(std::mt19937_64& rng, int n, int alphabet) {
    std::uniform_int_distribution<int> dist(0, alphabet - 1);
    IntSeq s(n);
    for (auto& v : s) v = dist(rng);
    return s;
}

// Binary string from the low bits of mask, position 1 first.
inline IntSeq from_mask(unsigned mask, int n) {
    IntSeq s(n);
    for (int i = 0; i < n; ++i) s[i] = (mask >> i) & 1u;
    return s;
}

// Independent quadratic LCS table: dp[i][j] = |LCS(s[1..i], t[1..j])|.
inline std::vector<std::vector<int>> lcs_dp_table(const IntSeq& s, const IntSeq& t) {
    const int n = static_cast<int>(s.size()), m = static_cast<int>(t.size());
    std::vector<std::vector<int>> dp(n + 1, std::vector<int>(m + 1, 0));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j)
            dp[i][j] = (s[i - 1] == t[j - 1]) ? dp[i - 1][j - 1] + 1
                                              : std::max(dp[i - 1][j], dp[i][j - 1]);
    return dp;
}

inline bool is_subsequence_of(const IntSeq& pat, const IntSeq& text) {
    std::size_t p = 0;
    for (std::size_t i = 0; i < text.size() && p < pat.size(); ++i)
        if (text[i] == pat[p]) ++p;
    return p == pat.size();
}

}  // namespace ctlcs::testing
