#pragma once

#include <utility>
#include <vector>

#include "ctlcs/core.hpp"

namespace ctlcs {

// Block-decomposed classical-LCS index over prefixes of s and t. The DP grid
// is cut on every b-th row and column; only those boundary lines are stored
// and block interiors are recomputed on demand. Answers LCS(i, j) for
// arbitrary prefix lengths and traces back one LCS string.
class BlockLcsIndex {
public:
    // block = 1 stores every grid line, i.e. the plain full-table mode.
    BlockLcsIndex(IntSeq s, IntSeq t, int block);

    static int default_block(int n);

    int n() const { return n_; }
    int m() const { return m_; }
    int block() const { return b_; }

    // |LCS(s[1..i], t[1..j])|, 0 <= i <= n, 0 <= j <= m.
    int query(int i, int j) const;

    // One LCS of s[1..i] and t[1..j] as matched (s_pos, t_pos) pairs,
    // ascending. Walks block by block, rebuilding each traversed interior.
    std::vector<std::pair<int, int>> traceback_pairs(int i, int j) const;

    // The LCS string itself.
    IntSeq traceback(int i, int j) const;

    std::size_t boundary_values_stored() const;

private:
    void check_range(int i, int j) const;
    // DP values for the block whose top-left boundary corner is (r0, c0),
    // covering rows r0..r1 and cols c0..c1 inclusive; returned row-major
    // with pitch (c1 - c0 + 1).
    std::vector<int> block_interior(int r0, int c0, int r1, int c1) const;

    IntSeq s_, t_;
    int n_, m_, b_;
    std::vector<std::vector<int>> rows_;  // rows_[k]: DP row i = k*b, length m+1
    std::vector<std::vector<int>> cols_;  // cols_[k]: DP col j = k*b, length n+1
};

}  // namespace ctlcs
