#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ctlcs {

// A numerical sequence. Positions are 1-based in every public interface;
// the underlying vector is 0-based as usual.
using IntSeq = std::vector<std::int64_t>;

// Positional binary tree over [1..n]. Index 0 means "none".
struct CartesianTree {
    int n = 0;
    int root = 0;
    std::vector<int> left;    // size n+1, [1..n]
    std::vector<int> right;   // size n+1, [1..n]
    std::vector<int> parent;  // size n+1, [1..n]

    bool empty() const { return n == 0; }
};

// PD(S): dist[i-1] is the distance from position i back to the nearest
// earlier position j with S[j] <= S[i], or 0 when no such j exists.
using ParentDistance = std::vector<int>;

// Least index attaining the minimum value. Throws on empty input.
int min_id(const IntSeq& s);

// Cartesian tree of s: rooted at min_id, recursing left/right.
// Left-to-right monotone stack, O(n).
CartesianTree build_cartesian_tree(const IntSeq& s);

// Naive recursive construction, O(n^2) worst case. Differential-test twin
// of build_cartesian_tree.
CartesianTree build_cartesian_tree_naive(const IntSeq& s);

// Parent-distance representation, monotone stack, O(n).
ParentDistance parent_distance(const IntSeq& s);

// Direct evaluation of the PD definition, O(n^2). Differential-test twin.
ParentDistance parent_distance_naive(const IntSeq& s);

// True iff |s| = |t| and PD(s) = PD(t), i.e. CT(s) and CT(t) are isomorphic.
bool ct_match(const IntSeq& s, const IntSeq& t);

// Ordered (left/right-distinguishing) structural comparison.
bool tree_isomorphic(const CartesianTree& a, const CartesianTree& b);

// Replaces s by the ranks of a stable sort by (value, position): pairwise
// distinct, order-equivalent to s with ties broken left-to-right. The
// Cartesian tree is preserved.
IntSeq rank_normalize(const IntSeq& s);

// Subsequence of s selected by ascending 1-based indices.
IntSeq subsequence(const IntSeq& s, const std::vector<int>& indices);

// Serialization consumed by the CLI: one node per position, edges labeled L/R.
std::string tree_to_dot(const CartesianTree& t);
// {"n":..,"root":..,"left":[..],"right":[..]} with 1-based node ids, 0 = none.
std::string tree_to_json(const CartesianTree& t);

}  // namespace ctlcs
