#ifndef SYZYGY_BWB_HPP
#define SYZYGY_BWB_HPP

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace syzygy {

using BigInt = boost::multiprecision::cpp_int;

struct AssertionFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline BigInt big_binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact at every step
    }
    return r;
}

// Weight of a homogeneous bundle on G(r,n): the Schur functor Sigma^mu
// applied to the dual tautological subbundle.  The family of interest,
// L^{-q} (x) S^{q'} E, has mu = (q'-q, -q) with r = 2, n = k+2.
struct GrassmannWeight {
    int r = 2;
    int n = 4;
    std::vector<int> mu;  // length r, weakly decreasing

    void validate() const {
        if (r < 1 || r >= n || static_cast<int>(mu.size()) != r)
            throw std::invalid_argument("GrassmannWeight: bad shape");
        for (std::size_t i = 1; i < mu.size(); ++i)
            if (mu[i - 1] < mu[i])
                throw std::invalid_argument("GrassmannWeight: mu not weakly decreasing");
    }
};

// Bott concentration: cohomology lives in at most one degree.
struct CohomologyResult {
    std::optional<int> nonzero_degree;
    BigInt dimension = 0;

    bool zero() const { return !nonzero_degree.has_value(); }
};

// Weyl dimension of the GL(n) representation with highest weight lambda
// (weakly decreasing integers): prod_{i<j} (l_i - l_j + j - i) / (j - i).
inline BigInt weyl_dimension(const std::vector<int>& lambda) {
    int n = static_cast<int>(lambda.size());
    BigInt num = 1, den = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            num *= lambda[i] - lambda[j] + j - i;
            den *= j - i;
        }
    return num / den;  // exact
}

// Bott's algorithm for H^*(G(r,n), Sigma^mu S^*): pad mu with zeros to
// length n, add rho = (n-1, ..., 1, 0); a repeated entry kills all
// cohomology, otherwise the cohomology sits in degree = number of
// inversions, with dimension the Weyl dimension of sort(w + rho) - rho.
inline CohomologyResult bott(const GrassmannWeight& w) {
    w.validate();
    int n = w.n;
    std::vector<int> v(n, 0);
    for (int i = 0; i < w.r; ++i) v[i] = w.mu[i];
    for (int i = 0; i < n; ++i) v[i] += n - 1 - i;

    std::vector<int> sorted = v;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    for (int i = 0; i + 1 < n; ++i)
        if (sorted[i] == sorted[i + 1]) return {};

    int inversions = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (v[i] < v[j]) ++inversions;

    std::vector<int> lambda(n);
    for (int i = 0; i < n; ++i) lambda[i] = sorted[i] - (n - 1 - i);
    return {inversions, weyl_dimension(lambda)};
}

// The appendix family on G(2, k+2): L^{-q} (x) S^{q'} E.
inline GrassmannWeight appendix_weight(int k, int q, int qp) {
    return {2, k + 2, {qp - q, -q}};
}

struct AppendixRow {
    int k, q, qp;
    int degree;      // -1 when all cohomology vanishes
    BigInt dimension;
};

// Sweeps 1 <= q, q' <= 2k+2 for 1 <= k <= k_max and asserts:
//   (a) cohomology concentrates in degree k or 2k (or vanishes);
//   (b) the degree-k part vanishes when -q + q' + 1 < 0;
//   (c) the degree-2k part vanishes when -q + q' >= -k - 1.
inline std::vector<AppendixRow> verify_appendix(int k_max) {
    if (k_max < 1) throw std::invalid_argument("verify_appendix: k_max < 1");
    std::vector<AppendixRow> rows;
    for (int k = 1; k <= k_max; ++k) {
        for (int q = 1; q <= 2 * k + 2; ++q) {
            for (int qp = 1; qp <= 2 * k + 2; ++qp) {
                CohomologyResult c = bott(appendix_weight(k, q, qp));
                auto fail = [&](const std::string& what) {
                    std::ostringstream os;
                    os << what << " at (k,q,q')=(" << k << "," << q << "," << qp << ")";
                    throw AssertionFailure(os.str());
                };
                if (!c.zero()) {
                    int p = *c.nonzero_degree;
                    if (p != k && p != 2 * k) fail("concentration outside {k,2k}");
                    if (p == k && -q + qp + 1 < 0) fail("degree-k part nonzero");
                    if (p == 2 * k && -q + qp >= -k - 1) fail("degree-2k part nonzero");
                }
                rows.push_back({k, q, qp, c.zero() ? -1 : *c.nonzero_degree, c.dimension});
            }
        }
    }
    return rows;
}

// C(2k+1, k+1) = dim S^k of a (k+2)-dimensional space, as exact big integers.
inline bool dimension_identity(int k) {
    if (k < 1) throw std::invalid_argument("dimension_identity: k < 1");
    return big_binomial(2 * k + 1, k + 1) == big_binomial(2 * k + 1, k);
}

inline std::string appendix_csv(const std::vector<AppendixRow>& rows) {
    std::ostringstream os;
    os << "k,q,q',degree,dimension\n";
    for (const auto& r : rows)
        os << r.k << "," << r.q << "," << r.qp << "," << r.degree << "," << r.dimension << "\n";
    return os.str();
}

} // namespace syzygy

#endif
