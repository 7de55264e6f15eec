#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ctlcs/core.hpp"

namespace ctlcs {

// Raised when an input exceeds a module's configured size cap.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Result record for any CT-LCS computation: matched positions in each input
// (1-based, ascending) plus the canonical pattern, s restricted to s_indices.
struct CtLcsWitness {
    std::vector<int> s_indices;
    std::vector<int> t_indices;
    IntSeq pattern;

    int length() const { return static_cast<int>(pattern.size()); }
};

// The windowed maxima L(i,j,l1,l2) and R(i,j,r1,r2) of the pivot DP, with a
// backpointer per entry recording the inner pivot that attains the maximum
// (0,0 when the entry is 0). Entries are stored densely over
// [1..n] x [1..m] x [1..n] x [1..m]; only the cells with l1 <= i, l2 <= j
// (resp. r1 >= i, r2 >= j) are meaningful.
class PivotTables {
public:
    PivotTables() = default;
    PivotTables(int n, int m);

    int n() const { return n_; }
    int m() const { return m_; }

    std::uint16_t left(int i, int j, int l1, int l2) const { return L_[idx(i, j, l1, l2)]; }
    std::uint16_t right(int i, int j, int r1, int r2) const { return R_[idx(i, j, r1, r2)]; }
    std::pair<int, int> left_back(int i, int j, int l1, int l2) const {
        std::size_t k = idx(i, j, l1, l2);
        return {backLi_[k], backLj_[k]};
    }
    std::pair<int, int> right_back(int i, int j, int r1, int r2) const {
        std::size_t k = idx(i, j, r1, r2);
        return {backRi_[k], backRj_[k]};
    }

    void set_left(int i, int j, int l1, int l2, std::uint16_t v, int bi, int bj) {
        std::size_t k = idx(i, j, l1, l2);
        L_[k] = v;
        backLi_[k] = static_cast<std::uint16_t>(bi);
        backLj_[k] = static_cast<std::uint16_t>(bj);
    }
    void set_right(int i, int j, int r1, int r2, std::uint16_t v, int bi, int bj) {
        std::size_t k = idx(i, j, r1, r2);
        R_[k] = v;
        backRi_[k] = static_cast<std::uint16_t>(bi);
        backRj_[k] = static_cast<std::uint16_t>(bj);
    }

    // Actual allocation across both tables and their backpointers.
    std::size_t memory_bytes() const;
    // The documented planning estimate: 2 * n^2 * m^2 entries at 6 bytes each
    // (length + pivot pair).
    static std::size_t estimated_bytes(int n, int m);

private:
    std::size_t idx(int i, int j, int a, int b) const {
        return ((static_cast<std::size_t>(i - 1) * m_ + (j - 1)) * n_ + (a - 1)) * m_ + (b - 1);
    }

    int n_ = 0, m_ = 0;
    std::vector<std::uint16_t> L_, R_;
    std::vector<std::uint16_t> backLi_, backLj_, backRi_, backRj_;
};

inline constexpr int kDefaultGeneralCap = 64;

// Positions of s sorted by strictly decreasing value, the processing order
// of the pivot DP. Requires pairwise-distinct values.
std::vector<int> value_order(const IntSeq& s);

// The O(n^6)-time, O(n^4)-space pivot dynamic program with witness
// traceback. Unequal lengths are accepted; the recurrences never use
// length equality.
std::pair<CtLcsWitness, PivotTables> ct_lcs_general(const IntSeq& s, const IntSeq& t,
                                                    int max_n = kDefaultGeneralCap);

// Length of the longest common CT-subsequence of the full windows whose
// minima sit at s[i] and t[j]: L(i,j,1,1) + R(i,j,n,m) + 1.
int f_ct_lcs_length(const PivotTables& tables, int i, int j);

// The six-dimensional reference DP. Differential-testing scale only.
int ct_lcs_reference(const IntSeq& s, const IntSeq& t, int max_n = 16);

// Rebuilds the witness from the backpointers; O(length) table hops.
CtLcsWitness traceback(const PivotTables& tables, const IntSeq& s, const IntSeq& t);

}  // namespace ctlcs
