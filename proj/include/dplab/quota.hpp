#pragma once

#include <vector>

namespace dplab {

// Vertex -> nonnegative integer; used for f (list sizes), g (colors demanded)
// and h (pre-commitment sizes). Comparisons are pointwise.
using QuotaMap = std::vector<int>;

inline QuotaMap uniform_quota(int n, int k) {
    return QuotaMap(n, k);
}

inline QuotaMap scale_quota(const QuotaMap& q, int m) {
    QuotaMap out(q);
    for (int& x : out)
        x *= m;
    return out;
}

inline bool quota_leq(const QuotaMap& a, const QuotaMap& b) {
    if (a.size() != b.size())
        return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

} // namespace dplab
