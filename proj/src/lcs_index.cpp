#include "ctlcs/lcs_index.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ctlcs {

int BlockLcsIndex::default_block(int n) {
    if (n <= 0) return 1;
    return std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(n) + 1u)) - 1);
}

BlockLcsIndex::BlockLcsIndex(IntSeq s, IntSeq t, int block)
    : s_(std::move(s)), t_(std::move(t)),
      n_(static_cast<int>(s_.size())), m_(static_cast<int>(t_.size())), b_(block) {
    if (b_ < 1) throw std::invalid_argument("block size must be >= 1");

    rows_.assign(n_ / b_ + 1, {});
    cols_.assign(m_ / b_ + 1, std::vector<int>(n_ + 1, 0));

    std::vector<int> prev(m_ + 1, 0), cur(m_ + 1, 0);
    rows_[0] = prev;
    for (int i = 1; i <= n_; ++i) {
        cur[0] = 0;
        for (int j = 1; j <= m_; ++j)
            cur[j] = (s_[i - 1] == t_[j - 1]) ? prev[j - 1] + 1
                                              : std::max(prev[j], cur[j - 1]);
        if (i % b_ == 0) rows_[i / b_] = cur;
        for (int k = 0; k * b_ <= m_; ++k) cols_[k][i] = cur[k * b_];
        std::swap(prev, cur);
    }
}

std::size_t BlockLcsIndex::boundary_values_stored() const {
    std::size_t total = 0;
    for (const auto& r : rows_) total += r.size();
    for (const auto& c : cols_) total += c.size();
    return total;
}

void BlockLcsIndex::check_range(int i, int j) const {
    if (i < 0 || i > n_ || j < 0 || j > m_)
        throw std::out_of_range("lcs_query prefix lengths out of range");
}

std::vector<int> BlockLcsIndex::block_interior(int r0, int c0, int r1, int c1) const {
    const int w = c1 - c0 + 1;
    std::vector<int> tab(static_cast<std::size_t>(r1 - r0 + 1) * w);
    const std::vector<int>& top = rows_[r0 / b_];
    const std::vector<int>& left = cols_[c0 / b_];
    for (int c = c0; c <= c1; ++c) tab[c - c0] = top[c];
    for (int r = r0 + 1; r <= r1; ++r) {
        int* cur = &tab[static_cast<std::size_t>(r - r0) * w];
        const int* up = cur - w;
        cur[0] = left[r];
        for (int c = c0 + 1; c <= c1; ++c)
            cur[c - c0] = (s_[r - 1] == t_[c - 1]) ? up[c - c0 - 1] + 1
                                                   : std::max(up[c - c0], cur[c - c0 - 1]);
    }
    return tab;
}

int BlockLcsIndex::query(int i, int j) const {
    check_range(i, j);
    if (i % b_ == 0) return rows_[i / b_][j];
    if (j % b_ == 0) return cols_[j / b_][i];
    const int r0 = (i / b_) * b_, c0 = (j / b_) * b_;
    const int r1 = std::min(r0 + b_, n_), c1 = std::min(c0 + b_, m_);
    std::vector<int> tab = block_interior(r0, c0, r1, c1);
    return tab[static_cast<std::size_t>(i - r0) * (c1 - c0 + 1) + (j - c0)];
}

std::vector<std::pair<int, int>> BlockLcsIndex::traceback_pairs(int i, int j) const {
    check_range(i, j);
    std::vector<std::pair<int, int>> pairs;
    while (i > 0 && j > 0) {
        const int r0 = ((i - 1) / b_) * b_, c0 = ((j - 1) / b_) * b_;
        const int r1 = std::min(r0 + b_, n_), c1 = std::min(c0 + b_, m_);
        const int w = c1 - c0 + 1;
        std::vector<int> tab = block_interior(r0, c0, r1, c1);
        auto at = [&](int r, int c) { return tab[static_cast<std::size_t>(r - r0) * w + (c - c0)]; };
        while (i > r0 && j > c0) {
            if (s_[i - 1] == t_[j - 1]) {
                pairs.emplace_back(i, j);
                --i;
                --j;
            } else if (at(i - 1, j) == at(i, j)) {
                --i;
            } else {
                --j;
            }
        }
    }
    std::reverse(pairs.begin(), pairs.end());
    return pairs;
}

IntSeq BlockLcsIndex::traceback(int i, int j) const {
    IntSeq out;
    for (auto [si, tj] : traceback_pairs(i, j)) {
        (void)tj;
        out.push_back(s_[si - 1]);
    }
    return out;
}

}  // namespace ctlcs
