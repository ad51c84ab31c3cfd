#ifndef SYZYGY_ORACLES_HPP
#define SYZYGY_ORACLES_HPP

#include <vector>

#include "monomial.hpp"  // binom_i64

namespace syzygy {

// Independent closed-form oracles used to check the rank-based Koszul
// computations.  Nothing here touches matrices or ring presentations.

// Graded Betti number beta_{p,d} of a complete intersection cut out by
// forms of the given degrees: its resolution is the Koszul complex on the
// generators, so beta_{p,d} counts p-subsets with degree sum d.
inline long ci_resolution_betti(const std::vector<int>& degrees, int p, int d) {
    long count = 0;
    int m = static_cast<int>(degrees.size());
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        int bits = 0, sum = 0;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) {
                ++bits;
                sum += degrees[i];
            }
        if (bits == p && sum == d) ++count;
    }
    return count;
}

// dim K_{p,1} of the rational normal curve of degree n (Eagon-Northcott):
// p * C(n, p+1).
inline long eagon_northcott_betti(int n, int p) {
    return static_cast<long>(p) * binom_i64(n, p + 1);
}

} // namespace syzygy

#endif
