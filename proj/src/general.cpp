#include "ctlcs/general.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace ctlcs {

PivotTables::PivotTables(int n, int m) : n_(n), m_(m) {
    std::size_t cells = static_cast<std::size_t>(n) * m * n * m;
    L_.assign(cells, 0);
    R_.assign(cells, 0);
    backLi_.assign(cells, 0);
    backLj_.assign(cells, 0);
    backRi_.assign(cells, 0);
    backRj_.assign(cells, 0);
}

std::size_t PivotTables::memory_bytes() const {
    return (L_.capacity() + R_.capacity() + backLi_.capacity() + backLj_.capacity() +
            backRi_.capacity() + backRj_.capacity()) *
           sizeof(std::uint16_t);
}

std::size_t PivotTables::estimated_bytes(int n, int m) {
    return 2 * static_cast<std::size_t>(n) * m * n * m * 6;
}

std::vector<int> value_order(const IntSeq& s) {
    const int n = static_cast<int>(s.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 1);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return s[a - 1] > s[b - 1]; });
    for (int k = 0; k + 1 < n; ++k)
        if (s[order[k] - 1] == s[order[k + 1] - 1])
            throw std::invalid_argument("sequence not normalized");
    return order;
}

std::pair<CtLcsWitness, PivotTables> ct_lcs_general(const IntSeq& s_in, const IntSeq& t_in,
                                                    int max_n) {
    const int n = static_cast<int>(s_in.size());
    const int m = static_cast<int>(t_in.size());
    if (n > max_n || m > max_n)
        throw CapExceeded("general algorithm cap exceeded: n=" + std::to_string(std::max(n, m)) +
                          " > " + std::to_string(max_n));
    if (n == 0 || m == 0) return {CtLcsWitness{}, PivotTables{}};

    const IntSeq s = rank_normalize(s_in);
    const IntSeq t = rank_normalize(t_in);
    PivotTables tab(n, m);

    const std::vector<int> iord = value_order(s);
    const std::vector<int> jord = value_order(t);

    for (int i : iord) {
        for (int j : jord) {
            // L(i, j, l1, l2) for l1 in [1..i], l2 in [1..j]
            for (int l1 = 1; l1 <= i; ++l1) {
                for (int l2 = 1; l2 <= j; ++l2) {
                    std::uint16_t best = 0;
                    int bi = 0, bj = 0;
                    if (l1 != i && l2 != j) {
                        for (int ii = l1; ii <= i - 1; ++ii) {
                            if (s[ii - 1] <= s[i - 1]) continue;
                            for (int jj = l2; jj <= j - 1; ++jj) {
                                if (t[jj - 1] <= t[j - 1]) continue;
                                std::uint16_t v = static_cast<std::uint16_t>(
                                    tab.left(ii, jj, l1, l2) + tab.right(ii, jj, i - 1, j - 1) + 1);
                                if (v > best) {
                                    best = v;
                                    bi = ii;
                                    bj = jj;
                                }
                            }
                        }
                    }
                    if (best) tab.set_left(i, j, l1, l2, best, bi, bj);
                }
            }
            // R(i, j, r1, r2) for r1 in [i..n], r2 in [j..m]
            for (int r1 = i; r1 <= n; ++r1) {
                for (int r2 = j; r2 <= m; ++r2) {
                    std::uint16_t best = 0;
                    int bi = 0, bj = 0;
                    if (r1 != i && r2 != j) {
                        for (int ii = i + 1; ii <= r1; ++ii) {
                            if (s[ii - 1] <= s[i - 1]) continue;
                            for (int jj = j + 1; jj <= r2; ++jj) {
                                if (t[jj - 1] <= t[j - 1]) continue;
                                std::uint16_t v = static_cast<std::uint16_t>(
                                    tab.left(ii, jj, i + 1, j + 1) + tab.right(ii, jj, r1, r2) + 1);
                                if (v > best) {
                                    best = v;
                                    bi = ii;
                                    bj = jj;
                                }
                            }
                        }
                    }
                    if (best) tab.set_right(i, j, r1, r2, best, bi, bj);
                }
            }
        }
    }

    CtLcsWitness w = traceback(tab, s_in, t_in);
    return {std::move(w), std::move(tab)};
}

int f_ct_lcs_length(const PivotTables& tables, int i, int j) {
    if (i < 1 || i > tables.n() || j < 1 || j > tables.m())
        throw std::out_of_range("pivot out of range");
    return tables.left(i, j, 1, 1) + tables.right(i, j, tables.n(), tables.m()) + 1;
}

namespace {

struct Expander {
    const PivotTables& tab;
    std::vector<std::pair<int, int>> out;
    int hops = 0;

    void guard() {
        if (++hops > tab.n() * tab.m() + 1)
            throw std::runtime_error("traceback internal-consistency error: cycle");
    }

    // Left part of the f-CT-LCS with pivot (i,j) restricted to windows
    // [l1..i-1] x [l2..j-1].
    void expand_left(int i, int j, int l1, int l2) {
        auto [bi, bj] = tab.left_back(i, j, l1, l2);
        if (bi == 0) return;
        guard();
        if (bi < l1 || bi >= i || bj < l2 || bj >= j)
            throw std::runtime_error("traceback internal-consistency error: window violation");
        expand_left(bi, bj, l1, l2);
        out.emplace_back(bi, bj);
        expand_right(bi, bj, i - 1, j - 1);
    }

    void expand_right(int i, int j, int r1, int r2) {
        auto [bi, bj] = tab.right_back(i, j, r1, r2);
        if (bi == 0) return;
        guard();
        if (bi <= i || bi > r1 || bj <= j || bj > r2)
            throw std::runtime_error("traceback internal-consistency error: window violation");
        expand_left(bi, bj, i + 1, j + 1);
        out.emplace_back(bi, bj);
        expand_right(bi, bj, r1, r2);
    }
};

}  // namespace

CtLcsWitness traceback(const PivotTables& tables, const IntSeq& s, const IntSeq& t) {
    CtLcsWitness w;
    const int n = tables.n(), m = tables.m();
    if (n == 0 || m == 0) return w;

    int best = -1, pi = 0, pj = 0;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= m; ++j) {
            int v = f_ct_lcs_length(tables, i, j);
            if (v > best) {
                best = v;
                pi = i;
                pj = j;
            }
        }
    }

    Expander ex{tables};
    ex.expand_left(pi, pj, 1, 1);
    ex.out.emplace_back(pi, pj);
    ex.expand_right(pi, pj, n, m);

    for (auto [i, j] : ex.out) {
        w.s_indices.push_back(i);
        w.t_indices.push_back(j);
    }
    if (!std::is_sorted(w.s_indices.begin(), w.s_indices.end()) ||
        !std::is_sorted(w.t_indices.begin(), w.t_indices.end()))
        throw std::runtime_error("traceback internal-consistency error: indices not ascending");
    w.pattern = subsequence(s, w.s_indices);
    (void)t;
    return w;
}

int ct_lcs_reference(const IntSeq& s_in, const IntSeq& t_in, int max_n) {
    const int n = static_cast<int>(s_in.size());
    const int m = static_cast<int>(t_in.size());
    if (n > max_n || m > max_n)
        throw CapExceeded("reference algorithm cap exceeded");
    if (n == 0 || m == 0) return 0;

    const IntSeq s = rank_normalize(s_in);
    const IntSeq t = rank_normalize(t_in);

    // C[i][j][l1][r1][l2][r2], flattened; all bounds 1-based.
    const std::size_t N = n, M = m;
    std::vector<std::uint16_t> C(N * M * N * N * M * M, 0);
    auto at = [&](int i, int j, int l1, int r1, int l2, int r2) -> std::uint16_t& {
        std::size_t k = ((((static_cast<std::size_t>(i - 1) * M + (j - 1)) * N + (l1 - 1)) * N +
                          (r1 - 1)) * M + (l2 - 1)) * M + (r2 - 1);
        return C[k];
    };

    int best = 0;
    for (int i : value_order(s)) {
        for (int j : value_order(t)) {
            for (int l1 = 1; l1 <= i; ++l1)
                for (int r1 = i; r1 <= n; ++r1)
                    for (int l2 = 1; l2 <= j; ++l2)
                        for (int r2 = j; r2 <= m; ++r2) {
                            int ml = 0;
                            if (l1 != i && l2 != j)
                                for (int ii = l1; ii <= i - 1; ++ii) {
                                    if (s[ii - 1] <= s[i - 1]) continue;
                                    for (int jj = l2; jj <= j - 1; ++jj)
                                        if (t[jj - 1] > t[j - 1])
                                            ml = std::max<int>(ml, at(ii, jj, l1, i - 1, l2, j - 1));
                                }
                            int mr = 0;
                            if (r1 != i && r2 != j)
                                for (int ii = i + 1; ii <= r1; ++ii) {
                                    if (s[ii - 1] <= s[i - 1]) continue;
                                    for (int jj = j + 1; jj <= r2; ++jj)
                                        if (t[jj - 1] > t[j - 1])
                                            mr = std::max<int>(mr, at(ii, jj, i + 1, r1, j + 1, r2));
                                }
                            at(i, j, l1, r1, l2, r2) = static_cast<std::uint16_t>(ml + mr + 1);
                        }
            best = std::max<int>(best, at(i, j, 1, n, 1, m));
        }
    }
    return best;
}

}  // namespace ctlcs
