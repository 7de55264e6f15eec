#include "ctlcs/binary.hpp"

#include <algorithm>
#include <stdexcept>

namespace ctlcs {

namespace {

void check_binary(const IntSeq& s) {
    for (auto v : s)
        if (v != 0 && v != 1)
            throw std::invalid_argument("binary algorithm requires 0/1 input");
}

// First k positions carrying a 1, 1-based.
std::vector<int> take_ones(const IntSeq& s, int k) {
    std::vector<int> out;
    for (int i = 1; i <= static_cast<int>(s.size()) && static_cast<int>(out.size()) < k; ++i)
        if (s[i - 1] == 1) out.push_back(i);
    if (static_cast<int>(out.size()) != k)
        throw std::runtime_error("witness internal-consistency error: not enough 1s");
    return out;
}

// Positions of a subsequence of s[from..n] of the form 0^a 1^b with a >= 1
// and total length exactly k. The best split is found greedily, then trimmed
// to k keeping the leading zero.
std::vector<int> realize_lnd(const IntSeq& s, int from, int k) {
    const int n = static_cast<int>(s.size());
    std::vector<int> ones_after(n + 2, 0);
    for (int i = n; i >= from; --i) ones_after[i] = ones_after[i + 1] + (s[i - 1] == 1);

    int best = -1, split = 0, zeros = 0, best_zeros = 0;
    for (int p = from; p <= n; ++p) {
        if (s[p - 1] != 0) continue;
        ++zeros;
        if (zeros + ones_after[p + 1] > best) {
            best = zeros + ones_after[p + 1];
            split = p;
            best_zeros = zeros;
        }
    }
    if (best < k)
        throw std::runtime_error("witness internal-consistency error: LND shortfall");

    const int a = std::min(best_zeros, k);
    const int b = k - a;
    std::vector<int> out;
    for (int p = from; p <= split && static_cast<int>(out.size()) < a; ++p)
        if (s[p - 1] == 0) out.push_back(p);
    for (int p = split + 1; p <= n && static_cast<int>(out.size()) < a + b; ++p)
        if (s[p - 1] == 1) out.push_back(p);
    return out;
}

}  // namespace

BinarySuffixStats binary_suffix_stats(const IntSeq& s) {
    check_binary(s);
    const int n = static_cast<int>(s.size());
    BinarySuffixStats st;
    st.ones_suffix.assign(n + 2, 0);
    st.lnd.assign(n + 2, 0);
    st.last_pos.assign(n + 1, 0);
    for (int i = n; i >= 1; --i) {
        st.ones_suffix[i] = st.ones_suffix[i + 1] + (s[i - 1] == 1 ? 1 : 0);
        // A 1 never starts a 0-leading subsequence, so the 1-branch copies
        // lnd[i+1]; see the README note on the recurrence.
        st.lnd[i] = (s[i - 1] == 0)
                        ? std::max(st.lnd[i + 1] + 1, st.ones_suffix[i + 1] + 1)
                        : st.lnd[i + 1];
    }
    // last_pos[l] = max{p : lnd[p] >= l}. The >= matters: lnd can skip
    // values (e.g. 0111 has lnd = 4,0,0,0), and a suffix with lnd >= l
    // still yields a tail of length exactly l by trimming. Keying on
    // equality misses those l entirely and undervalues cand
    // (s = 1100, t = 1011 comes out 2 instead of 3).
    int l = 1;
    for (int p = n; p >= 1; --p)
        while (l <= st.lnd[p]) st.last_pos[l++] = p;
    return st;
}

std::pair<int, int> cand(const BinarySuffixStats& s_stats, const BinarySuffixStats& t_stats,
                         const BlockLcsIndex& lcs_index) {
    int best = 0, best_l = 0;
    const int lmax = std::min(s_stats.n(), t_stats.n());
    for (int l = 1; l <= lmax; ++l) {
        const int p = s_stats.last_pos[l];
        const int q = t_stats.last_pos[l];
        if (p == 0 || q == 0) continue;
        const int v = lcs_index.query(p - 1, q - 1) + l;
        if (v > best) {
            best = v;
            best_l = l;
        }
    }
    return {best, best_l};
}

BinaryCtLcsResult ct_lcs_binary(const IntSeq& s, const IntSeq& t) {
    check_binary(s);
    check_binary(t);
    BinaryCtLcsResult res;
    const int n = static_cast<int>(s.size());
    const int m = static_cast<int>(t.size());
    if (n == 0 || m == 0) return res;

    const BinarySuffixStats ss = binary_suffix_stats(s);
    const BinarySuffixStats ts = binary_suffix_stats(t);
    const BlockLcsIndex index(s, t, BlockLcsIndex::default_block(std::max(n, m)));

    const auto [cand_v, cand_l] = cand(ss, ts, index);
    const int m1 = std::min(ss.ones_suffix[1], ts.lnd[1]);
    const int m2 = std::min(ss.lnd[1], ts.ones_suffix[1]);
    const int m3 = std::min(ss.ones_suffix[1], ts.ones_suffix[1]);

    res.length = std::max({cand_v, m1, m2, m3});
    if (res.length == cand_v) {
        res.source = BinaryOptimum::cand;
        res.cand_split = cand_l;
    } else if (res.length == m1) {
        res.source = BinaryOptimum::m1;
    } else if (res.length == m2) {
        res.source = BinaryOptimum::m2;
    } else {
        res.source = BinaryOptimum::m3;
    }

    // Witness reconstruction.
    const int k = res.length;
    CtLcsWitness& w = res.witness;
    if (k > 0) {
        switch (res.source) {
            case BinaryOptimum::cand: {
                const int l = res.cand_split;
                const int p = ss.last_pos[l], q = ts.last_pos[l];
                for (auto [si, tj] : index.traceback_pairs(p - 1, q - 1)) {
                    w.s_indices.push_back(si);
                    w.t_indices.push_back(tj);
                }
                for (int i : realize_lnd(s, p, l)) w.s_indices.push_back(i);
                for (int j : realize_lnd(t, q, l)) w.t_indices.push_back(j);
                break;
            }
            case BinaryOptimum::m1:
                w.s_indices = take_ones(s, k);
                w.t_indices = realize_lnd(t, 1, k);
                break;
            case BinaryOptimum::m2:
                w.s_indices = realize_lnd(s, 1, k);
                w.t_indices = take_ones(t, k);
                break;
            case BinaryOptimum::m3:
                w.s_indices = take_ones(s, k);
                w.t_indices = take_ones(t, k);
                break;
        }
        w.pattern = subsequence(s, w.s_indices);
        if (static_cast<int>(w.s_indices.size()) != k ||
            static_cast<int>(w.t_indices.size()) != k ||
            !ct_match(w.pattern, subsequence(t, w.t_indices)))
            throw std::runtime_error("witness internal-consistency error: ct_match failed");
    }
    return res;
}

}  // namespace ctlcs
