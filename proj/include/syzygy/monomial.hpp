#ifndef SYZYGY_MONOMIAL_HPP
#define SYZYGY_MONOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "primefield.hpp"

namespace syzygy {

// Exponent vector; length = number of ambient variables.
using Monomial = std::vector<int>;

inline int degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

// Graded reverse lexicographic: a precedes b iff deg a < deg b, or degrees
// are equal and the last nonzero entry of a-b is negative (so x0^d comes
// first within a degree block, read in decreasing order).
inline bool grevlex_precedes(const Monomial& a, const Monomial& b) {
    int da = degree(a), db = degree(b);
    if (da != db) return da < db;
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

// All monomials of total degree d in n_vars variables, in grevlex order.
inline std::vector<Monomial> monomials_of_degree(int n_vars, int d) {
    if (n_vars < 1 || d < 0) throw std::invalid_argument("monomials_of_degree: bad arguments");
    std::vector<Monomial> out;
    Monomial cur(n_vars, 0);
    // enumerate all compositions of d into n_vars parts
    auto rec = [&](auto&& self, int idx, int rem) -> void {
        if (idx == n_vars - 1) {
            cur[idx] = rem;
            out.push_back(cur);
            cur[idx] = 0;
            return;
        }
        for (int e = rem; e >= 0; --e) {
            cur[idx] = e;
            self(self, idx + 1, rem - e);
        }
        cur[idx] = 0;
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(), grevlex_precedes);
    return out;
}

inline Monomial monomial_product(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size()) throw std::invalid_argument("monomial_product: arity mismatch");
    Monomial out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

// Homogeneous polynomial: monomial -> nonzero coefficient.
struct Poly {
    int n_vars = 0;
    int deg = 0;
    std::map<Monomial, std::uint64_t> terms;

    Poly() = default;
    Poly(int n, int d) : n_vars(n), deg(d) {}

    void add_term(const Monomial& m, std::uint64_t c, const PrimeField& F) {
        if (static_cast<int>(m.size()) != n_vars || degree(m) != deg)
            throw std::invalid_argument("Poly: term degree/arity mismatch");
        auto it = terms.find(m);
        std::uint64_t v = F.add(it == terms.end() ? 0 : it->second, c % F.modulus());
        if (v == 0) {
            if (it != terms.end()) terms.erase(it);
        } else {
            terms[m] = v;
        }
    }
};

// Random homogeneous polynomial with all monomials present (coefficients
// drawn uniformly; zero coefficients simply drop out).
inline Poly random_homogeneous(int n_vars, int d, const PrimeField& F, SplitMix64& rng) {
    Poly f(n_vars, d);
    for (const auto& m : monomials_of_degree(n_vars, d)) {
        std::uint64_t c = rng.field_element(F);
        if (c) f.terms[m] = c;
    }
    return f;
}

// Substitute variable `var` by zero and drop it: terms containing the
// variable vanish, the rest lose a coordinate.
inline Poly eliminate_variable(const Poly& f, int var) {
    if (var < 0 || var >= f.n_vars) throw std::out_of_range("eliminate_variable: bad index");
    Poly out(f.n_vars - 1, f.deg);
    for (const auto& [m, c] : f.terms) {
        if (m[var] != 0) continue;
        Monomial mm;
        mm.reserve(m.size() - 1);
        for (int i = 0; i < f.n_vars; ++i)
            if (i != var) mm.push_back(m[i]);
        out.terms[mm] = c;
    }
    return out;
}

inline std::int64_t binom_i64(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace syzygy

#endif
