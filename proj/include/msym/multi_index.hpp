#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace msym {

// Strictly increasing tuple of 0-based coordinate indices. Keys both form
// and multivector terms; the empty tuple keys degree-0 objects.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> indices) : indices_(std::move(indices)) {}

    static MultiIndex single(int i) { return MultiIndex(std::vector<int>{i}); }

    int size() const { return static_cast<int>(indices_.size()); }
    bool empty() const { return indices_.empty(); }
    int operator[](int t) const { return indices_[static_cast<std::size_t>(t)]; }
    const std::vector<int>& indices() const { return indices_; }

    bool strictly_increasing() const
    {
        for (std::size_t t = 1; t < indices_.size(); ++t)
            if (indices_[t - 1] >= indices_[t]) return false;
        return true;
    }

    bool contains(int i) const
    {
        return std::binary_search(indices_.begin(), indices_.end(), i);
    }

    // Number of entries strictly smaller than i.
    int position_of(int i) const
    {
        return static_cast<int>(std::lower_bound(indices_.begin(), indices_.end(), i) - indices_.begin());
    }

    // Removes index i; caller guarantees membership.
    MultiIndex erased(int i) const
    {
        std::vector<int> out;
        out.reserve(indices_.size() - 1);
        for (int v : indices_)
            if (v != i) out.push_back(v);
        return MultiIndex(std::move(out));
    }

    MultiIndex erased_at(int pos) const
    {
        std::vector<int> out = indices_;
        out.erase(out.begin() + pos);
        return MultiIndex(std::move(out));
    }

    auto operator<=>(const MultiIndex&) const = default;

private:
    std::vector<int> indices_;
};

// Sign of inserting i into the increasing tuple: (-1)^(entries before i).
// Returns 0 on collision.
inline int insert_sign(int i, const MultiIndex& w, MultiIndex& out)
{
    if (w.contains(i)) return 0;
    int pos = w.position_of(i);
    std::vector<int> merged = w.indices();
    merged.insert(merged.begin() + pos, i);
    out = MultiIndex(std::move(merged));
    return (pos % 2 == 0) ? 1 : -1;
}

// Sign of sorting the concatenation a.b into increasing order; 0 if the
// tuples intersect. This is the transposition parity of the merge.
inline int merge_sign(const MultiIndex& a, const MultiIndex& b, MultiIndex& out)
{
    std::vector<int> merged;
    merged.reserve(static_cast<std::size_t>(a.size() + b.size()));
    int ia = 0, ib = 0;
    long swaps = 0;
    while (ia < a.size() && ib < b.size()) {
        if (a[ia] == b[ib]) return 0;
        if (a[ia] < b[ib]) {
            merged.push_back(a[ia++]);
        } else {
            // b[ib] jumps over the a-entries still pending
            swaps += a.size() - ia;
            merged.push_back(b[ib++]);
        }
    }
    while (ia < a.size()) merged.push_back(a[ia++]);
    while (ib < b.size()) merged.push_back(b[ib++]);
    out = MultiIndex(std::move(merged));
    return (swaps % 2 == 0) ? 1 : -1;
}

inline long binomial(int n, int k)
{
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int t = 0; t < k; ++t) r = r * (n - t) / (t + 1);
    return r;
}

// All strictly increasing k-tuples in 0..n-1, lexicographic. This ordering
// fixes the row/column bases of every matrix built from forms.
inline std::vector<MultiIndex> lex_multi_indices(int n, int k)
{
    std::vector<MultiIndex> out;
    if (k < 0 || k > n) return out;
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t) c[static_cast<std::size_t>(t)] = t;
    while (true) {
        out.emplace_back(c);
        int t = k - 1;
        while (t >= 0 && c[static_cast<std::size_t>(t)] == n - k + t) --t;
        if (t < 0) break;
        ++c[static_cast<std::size_t>(t)];
        for (int s = t + 1; s < k; ++s) c[static_cast<std::size_t>(s)] = c[static_cast<std::size_t>(s - 1)] + 1;
    }
    return out;
}

} // namespace msym
