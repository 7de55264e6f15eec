#pragma once

#include "ctlcs/core.hpp"
#include "ctlcs/general.hpp"

namespace ctlcs {
namespace oracle {

// Exhaustive CT-LCS: for k from min(|s|,|t|) down to 0, enumerate all
// subscript sequences of both sides and return the first PD-equal pair.
// Exponential; hard-capped.
CtLcsWitness brute_force_ct_lcs(const IntSeq& s, const IntSeq& t, int cap = 12);

// Longest subsequence of s[i..n] of the form 0^a 1^b with a >= 1, by
// enumeration of all subsequences.
int brute_force_lnd(const IntSeq& s, int i, int cap = 18);

// Direct maximization of |w| + i + j over all binary w and i, i' >= 1,
// j, j' >= 0 with the subsequence-membership conditions.
int brute_force_cand(const IntSeq& s, const IntSeq& t, int cap = 9);

}  // namespace oracle
}  // namespace ctlcs
