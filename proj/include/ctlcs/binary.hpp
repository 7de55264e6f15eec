#pragma once

#include <vector>

#include "ctlcs/core.hpp"
#include "ctlcs/general.hpp"
#include "ctlcs/lcs_index.hpp"

namespace ctlcs {

// Suffix statistics of a 0/1 sequence, 1-based with an [n+1] sentinel of 0.
//   ones_suffix[i]    = number of 1s in s[i..n]
//   lnd[i]            = length of the longest subsequence of s[i..n] of the
//                       form 0^a 1^b with a >= 1 (0 when none)
//   last_pos[l]       = max position p with lnd[p] >= l, or 0 (lnd is
//                       non-increasing, so lnd[last_pos[l]] >= l > lnd at
//                       every later position)
struct BinarySuffixStats {
    std::vector<int> ones_suffix;  // size n+2
    std::vector<int> lnd;          // size n+2
    std::vector<int> last_pos;     // size n+1, indexed by l in [1..n]

    int n() const { return static_cast<int>(lnd.size()) - 2; }
};

enum class BinaryOptimum { cand, m1, m2, m3 };

struct BinaryCtLcsResult {
    int length = 0;
    BinaryOptimum source = BinaryOptimum::m3;
    int cand_split = 0;  // the maximizing l when source == cand
    CtLcsWitness witness;
};

// Throws std::invalid_argument on any symbol outside {0, 1}.
BinarySuffixStats binary_suffix_stats(const IntSeq& s);

// max over l of LCS(p_l - 1, q_l - 1) + l, restricted to l with both
// p_l and q_l defined. Second member is the maximizing l (0 when cand = 0).
std::pair<int, int> cand(const BinarySuffixStats& s_stats, const BinarySuffixStats& t_stats,
                         const BlockLcsIndex& lcs_index);

// The O(n^2 / log n) binary solver: max(cand, m1, m2, m3) with witness.
BinaryCtLcsResult ct_lcs_binary(const IntSeq& s, const IntSeq& t);

}  // namespace ctlcs
