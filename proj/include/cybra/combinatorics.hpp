#ifndef CYBRA_COMBINATORICS_HPP
#define CYBRA_COMBINATORICS_HPP

#include <vector>

#include "cybra/diagram.hpp"

namespace cybra {

inline long long factorial(int n) {
    long long f = 1;
    for (int j = 2; j <= n; ++j) f *= j;
    return f;
}

inline long long binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    long long b = 1;
    r = std::min(r, n - r);
    for (int j = 1; j <= r; ++j) b = b * (n - r + j) / j;
    return b;
}

/// Number of partitions of n (n <= 40 is plenty here).
inline long long partition_count(int n) {
    if (n < 0) return 0;
    static const std::vector<long long> table = [] {
        std::vector<long long> p(41, 0);
        p[0] = 1;
        for (int part = 1; part <= 40; ++part)
            for (int total = part; total <= 40; ++total) p[static_cast<size_t>(total)] += p[static_cast<size_t>(total - part)];
        return p;
    }();
    return table[static_cast<size_t>(n)];
}

/// Number of bipartitions (lambda_1, lambda_2) of k - 2l over l = 0..floor(k/2):
/// sum_l sum_{a+b=k-2l} p(a) p(b).
inline long long count_bipartitions(int k) {
    if (k < 0) throw error("count_bipartitions: k < 0");
    long long total = 0;
    for (int l = 0; 2 * l <= k; ++l) {
        int rem = k - 2 * l;
        for (int a = 0; a <= rem; ++a) total += partition_count(a) * partition_count(rem - a);
    }
    return total;
}

struct DimensionIdentity {
    long long lhs = 0;
    long long rhs = 0;
    bool equal = false;
};

/// Checks sum_{s,t: s+t even} C(k,s) C(k,t) Dim(Br_{(s+t)/2}) Dim(Br_{k-(s+t)/2})
/// against (2k)!/k!.
inline DimensionIdentity so_dimension_identity(int k) {
    if (k < 0) throw error("so_dimension_identity: k < 0");
    DimensionIdentity r;
    for (int s = 0; s <= k; ++s)
        for (int t = 0; t <= k; ++t) {
            if ((s + t) % 2 != 0) continue;
            int half = (s + t) / 2;
            r.lhs += binomial(k, s) * binomial(k, t) * count_diagrams(half, 1) *
                     count_diagrams(k - half, 1);
        }
    r.rhs = count_diagrams(k, 2); // (2k)!/k! = (2k-1)!! * 2^k
    r.equal = r.lhs == r.rhs;
    return r;
}

} // namespace cybra

#endif
