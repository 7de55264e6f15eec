#include "ctlcs/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ctlcs {

int min_id(const IntSeq& s) {
    if (s.empty()) throw std::invalid_argument("empty sequence");
    // leftmost minimum; min_element already keeps the first of ties
    auto it = std::min_element(s.begin(), s.end());
    return static_cast<int>(it - s.begin()) + 1;
}

CartesianTree build_cartesian_tree(const IntSeq& s) {
    const int n = static_cast<int>(s.size());
    CartesianTree t;
    t.n = n;
    t.left.assign(n + 1, 0);
    t.right.assign(n + 1, 0);
    t.parent.assign(n + 1, 0);
    if (n == 0) return t;

    // Rightmost spine as a stack. Strict < pops: on ties the earlier
    // position stays on top, so the leftmost minimum ends up as root.
    std::vector<int> spine;
    for (int i = 1; i <= n; ++i) {
        int last_popped = 0;
        while (!spine.empty() && s[i - 1] < s[spine.back() - 1]) {
            last_popped = spine.back();
            spine.pop_back();
        }
        if (last_popped != 0) {
            t.left[i] = last_popped;
            t.parent[last_popped] = i;
        }
        if (!spine.empty()) {
            t.right[spine.back()] = i;
            t.parent[i] = spine.back();
        }
        spine.push_back(i);
    }
    t.root = spine.front();
    return t;
}

namespace {

int build_naive_rec(const IntSeq& s, int lo, int hi, CartesianTree& t) {
    if (lo > hi) return 0;
    int m = lo;
    for (int i = lo + 1; i <= hi; ++i)
        if (s[i - 1] < s[m - 1]) m = i;
    int l = build_naive_rec(s, lo, m - 1, t);
    int r = build_naive_rec(s, m + 1, hi, t);
    t.left[m] = l;
    t.right[m] = r;
    if (l) t.parent[l] = m;
    if (r) t.parent[r] = m;
    return m;
}

}  // namespace

CartesianTree build_cartesian_tree_naive(const IntSeq& s) {
    const int n = static_cast<int>(s.size());
    CartesianTree t;
    t.n = n;
    t.left.assign(n + 1, 0);
    t.right.assign(n + 1, 0);
    t.parent.assign(n + 1, 0);
    t.root = build_naive_rec(s, 1, n, t);
    return t;
}

ParentDistance parent_distance(const IntSeq& s) {
    const int n = static_cast<int>(s.size());
    ParentDistance pd(n, 0);
    // stack of positions with strictly increasing values from bottom
    // is not what we need; we need the nearest j < i with s[j] <= s[i],
    // so pop while the top is strictly greater.
    std::vector<int> st;
    for (int i = 1; i <= n; ++i) {
        while (!st.empty() && s[st.back() - 1] > s[i - 1]) st.pop_back();
        pd[i - 1] = st.empty() ? 0 : i - st.back();
        st.push_back(i);
    }
    return pd;
}

ParentDistance parent_distance_naive(const IntSeq& s) {
    const int n = static_cast<int>(s.size());
    ParentDistance pd(n, 0);
    for (int i = 1; i <= n; ++i) {
        for (int j = i - 1; j >= 1; --j) {
            if (s[j - 1] <= s[i - 1]) {
                pd[i - 1] = i - j;
                break;
            }
        }
    }
    return pd;
}

bool ct_match(const IntSeq& s, const IntSeq& t) {
    if (s.size() != t.size()) return false;
    return parent_distance(s) == parent_distance(t);
}

namespace {

bool iso_rec(const CartesianTree& a, int na, const CartesianTree& b, int nb) {
    if (na == 0 || nb == 0) return na == nb;
    return iso_rec(a, a.left[na], b, b.left[nb]) &&
           iso_rec(a, a.right[na], b, b.right[nb]);
}

}  // namespace

bool tree_isomorphic(const CartesianTree& a, const CartesianTree& b) {
    if (a.n != b.n) return false;
    return iso_rec(a, a.root, b, b.root);
}

IntSeq rank_normalize(const IntSeq& s) {
    const int n = static_cast<int>(s.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return s[a] < s[b]; });
    IntSeq out(n);
    for (int r = 0; r < n; ++r) out[order[r]] = r + 1;
    return out;
}

IntSeq subsequence(const IntSeq& s, const std::vector<int>& indices) {
    IntSeq out;
    out.reserve(indices.size());
    for (int i : indices) {
        if (i < 1 || i > static_cast<int>(s.size()))
            throw std::out_of_range("subsequence index out of range");
        out.push_back(s[i - 1]);
    }
    return out;
}

std::string tree_to_dot(const CartesianTree& t) {
    std::ostringstream os;
    os << "digraph ct {\n";
    for (int i = 1; i <= t.n; ++i) os << "  n" << i << " [label=\"" << i << "\"];\n";
    for (int i = 1; i <= t.n; ++i) {
        if (t.left[i]) os << "  n" << i << " -> n" << t.left[i] << " [label=\"L\"];\n";
        if (t.right[i]) os << "  n" << i << " -> n" << t.right[i] << " [label=\"R\"];\n";
    }
    os << "}\n";
    return os.str();
}

std::string tree_to_json(const CartesianTree& t) {
    std::ostringstream os;
    auto arr = [&](const std::vector<int>& v) {
        os << "[";
        for (int i = 1; i <= t.n; ++i) os << (i > 1 ? "," : "") << v[i];
        os << "]";
    };
    os << "{\"n\":" << t.n << ",\"root\":" << t.root << ",\"left\":";
    arr(t.left);
    os << ",\"right\":";
    arr(t.right);
    os << "}";
    return os.str();
}

}  // namespace ctlcs
