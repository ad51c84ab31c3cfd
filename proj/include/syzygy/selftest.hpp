#ifndef SYZYGY_SELFTEST_HPP
#define SYZYGY_SELFTEST_HPP

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "bwb.hpp"
#include "koszul.hpp"
#include "numerology.hpp"
#include "oracles.hpp"
#include "primefield.hpp"
#include "varieties.hpp"

namespace syzygy {

struct CriterionResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace selftest_detail {

template <class Fn>
CriterionResult run_criterion(const std::string& name, Fn&& fn) {
    CriterionResult r;
    r.name = name;
    try {
        std::ostringstream detail;
        r.pass = fn(detail);
        r.detail = detail.str();
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = e.what();
    }
    return r;
}

inline VarietySpec spec_of(const std::string& ctor, std::map<std::string, int> params,
                           std::uint64_t seed, std::uint64_t prime) {
    VarietySpec s;
    s.constructor = ctor;
    s.params = std::move(params);
    s.seed = seed;
    s.prime = prime;
    return s;
}

} // namespace selftest_detail

// The full acceptance suite; each entry is one criterion with a pass flag.
inline std::vector<CriterionResult> run_acceptance() {
    using selftest_detail::run_criterion;
    using selftest_detail::spec_of;
    std::vector<CriterionResult> out;

    // 1. K_{2,1}(S, L) = 0 for the (2,3) CI K3 in P^4, 5 seeds x 2 primes.
    out.push_back(run_criterion("k3-ci23-vanishing-K21", [](std::ostringstream& d) {
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            for (std::uint64_t prime : {std::uint64_t{32003}, std::uint64_t{46349}}) {
                GradedRingPresentation S = ci_k3(CiK3Type::ci23_P4, seed, PrimeField(prime));
                int k21 = koszul_dim(S, 2, 1);
                if (k21 != 0) {
                    d << "K_{2,1} = " << k21 << " at seed " << seed << ", prime " << prime;
                    return false;
                }
            }
        }
        d << "K_{2,1} = 0 for 5 seeds x 2 primes";
        return true;
    }));

    // 2. Hyperplane restriction: K_{p,1} of the sliced genus-4 curve equals
    //    K_{p,1} of the K3 for p = 1, 2, three seeds.
    out.push_back(run_criterion("hyperplane-restriction-g4", [](std::ostringstream& d) {
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            GradedRingPresentation S = ci_k3(CiK3Type::ci23_P4, seed);
            GradedRingPresentation C = hyperplane_section(S, S.n_vars() - 1, 4);
            for (int p : {1, 2}) {
                int a = koszul_dim(C, p, 1);
                int b = koszul_dim(S, p, 1);
                if (a != b) {
                    d << "p=" << p << " seed=" << seed << ": curve " << a << " vs K3 " << b;
                    return false;
                }
            }
        }
        d << "curve and K3 agree at p = 1, 2 for 3 seeds";
        return true;
    }));

    // 3. Genus-4 canonical Betti positions against the (2,3) complete
    //    intersection resolution oracle.
    out.push_back(run_criterion("genus4-betti-table", [](std::ostringstream& d) {
        GradedRingPresentation C = canonical_curve(4, 1);
        struct { int p, q; } cells[] = {{0, 2}, {1, 1}, {1, 2}, {2, 1}};
        for (auto [p, q] : cells) {
            int got = koszul_dim(C, p, q);
            int want = static_cast<int>(ci_resolution_betti({2, 3}, p, p + q));
            if (got != want) {
                d << "K_{" << p << "," << q << "} = " << got << ", oracle " << want;
                return false;
            }
        }
        if (koszul_dim(C, 1, 1) == 0) {
            d << "K_{1,1} vanished; nonvanishing expected";
            return false;
        }
        d << "K_{0,2}=0, K_{1,1}=1, K_{1,2}=1, K_{2,1}=0, K_{1,1} nonzero";
        return true;
    }));

    // 4. Rational normal curves vs the Eagon-Northcott formula, n = 2..6.
    out.push_back(run_criterion("rnc-eagon-northcott", [](std::ostringstream& d) {
        for (int n = 2; n <= 6; ++n) {
            GradedRingPresentation R = rational_normal_curve(n);
            for (int p = 0; p <= n; ++p) {
                int got = koszul_dim(R, p, 1);
                long want = eagon_northcott_betti(n, p);
                if (got != want) {
                    d << "n=" << n << " p=" << p << ": " << got << " vs " << want;
                    return false;
                }
            }
        }
        d << "dim K_{p,1} = p C(n, p+1) for n = 2..6, all p";
        return true;
    }));

    // 5. Duality sweep: dim K_{p,2} = dim K_{g-p-2,1} for g = 3..6.
    out.push_back(run_criterion("duality-sweep", [](std::ostringstream& d) {
        for (int g = 3; g <= 6; ++g) {
            VarietySpec s = spec_of("canonical", {{"g", g}}, 1, PrimeField::kDefaultPrime);
            BettiTable t = betti_for_spec(s, g - 2, 2);
            for (const auto& row : duality_check(t, g)) {
                if (!row.equal) {
                    d << "g=" << g << " p=" << row.p << ": K_{p,2}=" << row.dim_p2
                      << " vs K_{g-p-2,1}=" << row.dim_dual;
                    return false;
                }
            }
        }
        d << "duality holds for g = 3, 4, 5, 6, all p";
        return true;
    }));

    // 6. Plane quintic (g = 6, Clifford index 1): K_{3,1} != 0, K_{4,1} = 0.
    out.push_back(run_criterion("plane-quintic-positions", [](std::ostringstream& d) {
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            GradedRingPresentation C = canonical_curve(6, seed);
            int k31 = koszul_dim(C, 3, 1);
            int k41 = koszul_dim(C, 4, 1);
            if (k31 == 0 || k41 != 0) {
                d << "seed " << seed << ": K_{3,1}=" << k31 << " K_{4,1}=" << k41;
                return false;
            }
        }
        d << "K_{3,1} != 0 and K_{4,1} = 0 for 3 seeds";
        return true;
    }));

    // 7. Genus-5 three-quadric curve: K_{2,1} = K_{3,1} = 0.
    out.push_back(run_criterion("genus5-generic-vanishing", [](std::ostringstream& d) {
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            GradedRingPresentation C = canonical_curve(5, seed);
            int k21 = koszul_dim(C, 2, 1);
            int k31 = koszul_dim(C, 3, 1);
            if (k21 != 0 || k31 != 0) {
                d << "seed " << seed << ": K_{2,1}=" << k21 << " K_{3,1}=" << k31;
                return false;
            }
        }
        d << "K_{2,1} = K_{3,1} = 0 for 3 seeds";
        return true;
    }));

    // 8. Grassmannian cohomology sweep, k = 1..6, plus dim H^k = 1 at
    //    (q, q') = (k+1, k).
    out.push_back(run_criterion("grassmannian-sweep", [](std::ostringstream& d) {
        verify_appendix(6);  // throws AssertionFailure on any violation
        for (int k = 1; k <= 6; ++k) {
            CohomologyResult c = bott(appendix_weight(k, k + 1, k));
            if (c.zero() || *c.nonzero_degree != k || c.dimension != 1) {
                d << "k=" << k << ": expected H^k one-dimensional";
                return false;
            }
        }
        d << "sweep k = 1..6 and the H^k = 1 anchors pass";
        return true;
    }));

    // 9. C(2k+1, k+1) = dim S^k of a (k+2)-space, k = 1..100.
    out.push_back(run_criterion("dimension-identity", [](std::ostringstream& d) {
        for (int k = 1; k <= 100; ++k)
            if (!dimension_identity(k)) {
                d << "fails at k = " << k;
                return false;
            }
        d << "exact for k = 1..100";
        return true;
    }));

    // 10. chi of the rank-2 bundle equals k + 2, k = 1..100.
    out.push_back(run_criterion("lm-bundle-chi", [](std::ostringstream& d) {
        for (int k = 1; k <= 100; ++k) {
            LMInvariants inv = lm_chi(k);  // throws if chi != k + 2
            if (inv.chi != k + 2) return false;
        }
        d << "chi = k + 2 for k = 1..100";
        return true;
    }));

    // 11. Genus/gonality range enumeration up to g = 200.
    out.push_back(run_criterion("genus-gonality-range", [](std::ostringstream& d) {
        Cor2Report rep = corollary2_range(200);
        d << rep.pairs_in_range << " pairs in range, all representable";
        return rep.pass;
    }));

    // 12. wedge o delta = +-l id, l = 1..5, v_dim = l..8, 20 random vectors.
    out.push_back(run_criterion("wedge-contraction-identity", [](std::ostringstream& d) {
        PrimeField F;
        for (int l = 1; l <= 5; ++l)
            for (int v = l; v <= 8; ++v)
                if (!wedge_contraction_check(v, l, 20, 1000 + 10 * l + v, F)) {
                    d << "fails at l=" << l << " v=" << v;
                    return false;
                }
        d << "holds for l = 1..5, v = l..8";
        return true;
    }));

    // 13a. delta o delta = 0 on assembled consecutive pairs.
    out.push_back(run_criterion("complex-condition", [](std::ostringstream& d) {
        std::vector<GradedRingPresentation> rings;
        rings.push_back(rational_normal_curve(3));
        rings.push_back(canonical_curve(4, 1));
        rings.push_back(ci_k3(CiK3Type::ci23_P4, 1));
        for (const auto& R : rings) {
            for (int p = 1; p <= 3; ++p) {
                for (int q = 0; q <= 1; ++q) {
                    SparseMatrix a = koszul_differential(R, p + 1, q);
                    SparseMatrix b = koszul_differential(R, p, q + 1);
                    SparseMatrix prod = multiply(b, a, R.field());
                    if (!prod.entries.empty()) {
                        d << "delta o delta != 0 at (p,q)=(" << p << "," << q << ")";
                        return false;
                    }
                }
            }
        }
        d << "delta o delta = 0 on all assembled pairs";
        return true;
    }));

    // 13b. Hilbert oracles for every constructor up to q = 3.
    out.push_back(run_criterion("hilbert-oracles", [](std::ostringstream& d) {
        std::vector<GradedRingPresentation> rings;
        for (int n = 2; n <= 6; ++n) rings.push_back(rational_normal_curve(n));
        for (int g = 3; g <= 6; ++g) rings.push_back(canonical_curve(g, 1));
        for (auto t : {CiK3Type::quartic_P3, CiK3Type::ci23_P4, CiK3Type::ci222_P5})
            rings.push_back(ci_k3(t, 1));
        for (const auto& R : rings)
            for (int q = 0; q <= 3; ++q) R.piece(q);  // throws on mismatch
        d << "all constructors match their Hilbert functions up to q = 3";
        return true;
    }));

    // 13c. Tables agree across two primes on the full menagerie.
    out.push_back(run_criterion("multi-prime-agreement", [](std::ostringstream& d) {
        std::vector<VarietySpec> specs;
        for (int n = 2; n <= 5; ++n)
            specs.push_back(spec_of("rnc", {{"n", n}}, 0, PrimeField::kDefaultPrime));
        for (int g = 3; g <= 6; ++g)
            specs.push_back(spec_of("canonical", {{"g", g}}, 1, PrimeField::kDefaultPrime));
        for (const char* c : {"quartic_P3", "ci23_P4", "ci222_P5"})
            specs.push_back(spec_of(c, {}, 1, PrimeField::kDefaultPrime));
        for (const auto& s : specs)
            betti_crosschecked(s, 3, 2);  // throws BadPrime on unresolved mismatch
        d << "identical tables at two primes for the full menagerie";
        return true;
    }));

    return out;
}

} // namespace syzygy

#endif
