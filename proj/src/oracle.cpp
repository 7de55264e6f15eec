#include "ctlcs/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ctlcs {
namespace oracle {

namespace {

// Visits all ascending k-subsets of [1..n] in lexicographic order.
template <typename F>
void for_each_subset(int n, int k, F&& f) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i + 1;
    while (true) {
        if (f(idx)) return;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - (k - 1 - i)) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

bool is_subsequence(const IntSeq& pat, const IntSeq& text) {
    std::size_t p = 0;
    for (std::size_t i = 0; i < text.size() && p < pat.size(); ++i)
        if (text[i] == pat[p]) ++p;
    return p == pat.size();
}

void check_binary(const IntSeq& s) {
    for (auto v : s)
        if (v != 0 && v != 1)
            throw std::invalid_argument("binary oracle requires 0/1 input");
}

}  // namespace

CtLcsWitness brute_force_ct_lcs(const IntSeq& s, const IntSeq& t, int cap) {
    const int n = static_cast<int>(s.size());
    const int m = static_cast<int>(t.size());
    if (n > cap || m > cap) throw CapExceeded("brute-force oracle cap exceeded");

    CtLcsWitness w;
    for (int k = std::min(n, m); k >= 1; --k) {
        // PD of every size-k subsequence of t, keeping the lexicographically
        // first subscript sequence per PD.
        std::map<ParentDistance, std::vector<int>> by_pd;
        for_each_subset(m, k, [&](const std::vector<int>& J) {
            by_pd.emplace(parent_distance(subsequence(t, J)), J);
            return false;
        });
        bool found = false;
        for_each_subset(n, k, [&](const std::vector<int>& I) {
            auto it = by_pd.find(parent_distance(subsequence(s, I)));
            if (it == by_pd.end()) return false;
            w.s_indices = I;
            w.t_indices = it->second;
            w.pattern = subsequence(s, I);
            found = true;
            return true;
        });
        if (found) return w;
    }
    return w;
}

int brute_force_lnd(const IntSeq& s, int i, int cap) {
    check_binary(s);
    const int n = static_cast<int>(s.size());
    if (n > cap) throw CapExceeded("brute-force LND cap exceeded");
    if (i < 1 || i > n + 1) throw std::out_of_range("suffix position out of range");

    const int len = n - i + 1;
    int best = 0;
    for (unsigned mask = 1; mask < (1u << len); ++mask) {
        IntSeq sub;
        for (int b = 0; b < len; ++b)
            if (mask & (1u << b)) sub.push_back(s[i - 1 + b]);
        if (sub.front() != 0) continue;
        if (!std::is_sorted(sub.begin(), sub.end())) continue;
        best = std::max<int>(best, static_cast<int>(sub.size()));
    }
    return best;
}

int brute_force_cand(const IntSeq& s, const IntSeq& t, int cap) {
    check_binary(s);
    check_binary(t);
    const int n = static_cast<int>(s.size());
    const int m = static_cast<int>(t.size());
    if (n > cap || m > cap) throw CapExceeded("brute-force cand cap exceeded");

    int best = 0;
    const int maxlen = std::max(n, m);
    for (int lw = 0; lw <= maxlen; ++lw) {
        for (unsigned bits = 0; bits < (1u << lw); ++bits) {
            IntSeq w(lw);
            for (int b = 0; b < lw; ++b) w[b] = (bits >> b) & 1u;
            for (int zi = 1; lw + zi <= maxlen; ++zi) {
                for (int oj = 0; lw + zi + oj <= maxlen; ++oj) {
                    const int k = lw + zi + oj;
                    if (k <= best) continue;
                    IntSeq sp = w;
                    sp.insert(sp.end(), zi, 0);
                    sp.insert(sp.end(), oj, 1);
                    if (!is_subsequence(sp, s)) continue;
                    for (int zi2 = 1; lw + zi2 <= k; ++zi2) {
                        const int oj2 = k - lw - zi2;
                        IntSeq tp = w;
                        tp.insert(tp.end(), zi2, 0);
                        tp.insert(tp.end(), oj2, 1);
                        if (is_subsequence(tp, t)) {
                            best = k;
                            break;
                        }
                    }
                }
            }
        }
    }
    return best;
}

}  // namespace oracle
}  // namespace ctlcs
