#ifndef SYZYGY_VARIETIES_HPP
#define SYZYGY_VARIETIES_HPP

#include <cstdint>
#include <iterator>
#include <map>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "graded_ring.hpp"
#include "koszul.hpp"
#include "monomial.hpp"
#include "primefield.hpp"

namespace syzygy {

// Tables for the same ring at two primes disagreed; retry with another prime.
struct BadPrime : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Serializable recipe reproducing a graded ring bit-for-bit.
struct VarietySpec {
    std::string constructor;            // rnc | canonical | quartic_P3 | ci23_P4 | ci222_P5
    std::map<std::string, int> params;  // n, g, slice_var as applicable
    std::uint64_t seed = 0;
    std::uint64_t prime = PrimeField::kDefaultPrime;

    std::string id() const {
        std::string s = constructor;
        for (const auto& [k, v] : params) s += "_" + k + std::to_string(v);
        return s;
    }
};

inline nlohmann::ordered_json variety_to_json(const VarietySpec& s) {
    nlohmann::ordered_json j;
    j["constructor"] = s.constructor;
    j["params"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : s.params) j["params"][k] = v;
    j["seed"] = s.seed;
    j["prime"] = s.prime;
    return j;
}

inline VarietySpec variety_from_json(const nlohmann::json& j) {
    VarietySpec s;
    s.constructor = j.at("constructor").get<std::string>();
    for (const auto& [k, v] : j.at("params").items()) s.params[k] = v.get<int>();
    s.seed = j.at("seed").get<std::uint64_t>();
    s.prime = j.at("prime").get<std::uint64_t>();
    return s;
}

// Rational normal curve of degree n in P^n: 2x2 minors of the Hankel matrix
// [x0 .. x_{n-1}; x1 .. x_n].  C(n,2) quadric generators.
inline GradedRingPresentation rational_normal_curve(int n,
                                                    PrimeField F = PrimeField()) {
    if (n < 2 || n > 8) throw std::invalid_argument("rational_normal_curve: n out of range");
    int nv = n + 1;
    QuotientForm form;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            // x_i x_{j+1} - x_{i+1} x_j
            Poly f(nv, 2);
            Monomial a(nv, 0), b(nv, 0);
            a[i] += 1; a[j + 1] += 1;
            b[i + 1] += 1; b[j] += 1;
            f.add_term(a, 1, F);
            f.add_term(b, F.neg(1), F);
            form.generators.push_back(std::move(f));
        }
    }
    return GradedRingPresentation(nv, std::move(form),
                                  F, {HilbertOracle::RationalNormalCurve, n});
}

// Canonical ring of a curve of genus 3..6.  g=3 and g=6 are plane curves
// (quartic, quintic) presented in Veronese-quotient form; g=4 and g=5 are
// the classical complete intersections.
inline GradedRingPresentation canonical_curve(int g, std::uint64_t seed,
                                              PrimeField F = PrimeField()) {
    SplitMix64 rng(seed);
    HilbertOracle oracle{HilbertOracle::CanonicalCurve, g};
    switch (g) {
    case 3: {
        VeroneseQuotientForm v;
        v.step = 1;
        v.relation = random_homogeneous(3, 4, F, rng);
        return GradedRingPresentation(3, std::move(v), F, oracle);
    }
    case 4: {
        QuotientForm form;
        form.generators.push_back(random_homogeneous(4, 2, F, rng));
        form.generators.push_back(random_homogeneous(4, 3, F, rng));
        return GradedRingPresentation(4, std::move(form), F, oracle);
    }
    case 5: {
        QuotientForm form;
        for (int i = 0; i < 3; ++i)
            form.generators.push_back(random_homogeneous(5, 2, F, rng));
        return GradedRingPresentation(5, std::move(form), F, oracle);
    }
    case 6: {
        VeroneseQuotientForm v;
        v.step = 2;  // K = O(d-3) on a plane quintic
        v.relation = random_homogeneous(3, 5, F, rng);
        return GradedRingPresentation(3, std::move(v), F, oracle);
    }
    default:
        throw std::invalid_argument("canonical_curve: g must be 3..6");
    }
}

enum class CiK3Type { quartic_P3, ci23_P4, ci222_P5 };

inline int ci_k3_genus(CiK3Type t) {
    switch (t) {
    case CiK3Type::quartic_P3: return 3;
    case CiK3Type::ci23_P4: return 4;
    case CiK3Type::ci222_P5: return 5;
    }
    throw std::invalid_argument("ci_k3_genus");
}

// Complete-intersection K3 with L = O(1): quartic in P^3 (g=3), (2,3) in P^4
// (g=4), (2,2,2) in P^5 (g=5).
inline GradedRingPresentation ci_k3(CiK3Type type, std::uint64_t seed,
                                    PrimeField F = PrimeField()) {
    SplitMix64 rng(seed);
    int g = ci_k3_genus(type);
    HilbertOracle oracle{HilbertOracle::K3, g};
    QuotientForm form;
    switch (type) {
    case CiK3Type::quartic_P3:
        form.generators.push_back(random_homogeneous(4, 4, F, rng));
        return GradedRingPresentation(4, std::move(form), F, oracle);
    case CiK3Type::ci23_P4:
        form.generators.push_back(random_homogeneous(5, 2, F, rng));
        form.generators.push_back(random_homogeneous(5, 3, F, rng));
        return GradedRingPresentation(5, std::move(form), F, oracle);
    case CiK3Type::ci222_P5:
        for (int i = 0; i < 3; ++i)
            form.generators.push_back(random_homogeneous(6, 2, F, rng));
        return GradedRingPresentation(6, std::move(form), F, oracle);
    }
    throw std::invalid_argument("ci_k3: bad type");
}

// Generic hyperplane section of a CI K3: kill one coordinate.  The section
// ring becomes the canonical ring of a curve of the same genus.
inline GradedRingPresentation hyperplane_section(const GradedRingPresentation& S,
                                                 int which_var, int genus) {
    if (!S.is_quotient())
        throw std::invalid_argument("hyperplane_section: expects Quotient form");
    QuotientForm form;
    for (const Poly& f : S.quotient().generators)
        form.generators.push_back(eliminate_variable(f, which_var));
    return GradedRingPresentation(S.n_vars() - 1, std::move(form), S.field(),
                                  {HilbertOracle::CanonicalCurve, genus});
}

// Reconstruct a presentation from a serialized spec.  `slice_var`, when
// present on a K3 constructor, takes the hyperplane section.
inline GradedRingPresentation make_variety(const VarietySpec& spec) {
    PrimeField F(spec.prime);
    auto param = [&](const std::string& k) -> int {
        auto it = spec.params.find(k);
        if (it == spec.params.end())
            throw std::invalid_argument("VarietySpec: missing param " + k);
        return it->second;
    };
    auto maybe_slice = [&](GradedRingPresentation ring, int genus) {
        auto it = spec.params.find("slice_var");
        if (it == spec.params.end()) return ring;
        return hyperplane_section(ring, it->second, genus);
    };
    if (spec.constructor == "rnc") return rational_normal_curve(param("n"), F);
    if (spec.constructor == "canonical") return canonical_curve(param("g"), spec.seed, F);
    if (spec.constructor == "quartic_P3")
        return maybe_slice(ci_k3(CiK3Type::quartic_P3, spec.seed, F), 3);
    if (spec.constructor == "ci23_P4")
        return maybe_slice(ci_k3(CiK3Type::ci23_P4, spec.seed, F), 4);
    if (spec.constructor == "ci222_P5")
        return maybe_slice(ci_k3(CiK3Type::ci222_P5, spec.seed, F), 5);
    throw std::invalid_argument("VarietySpec: unknown constructor " + spec.constructor);
}

// Betti table for a spec with the spec's metadata filled in.
inline BettiTable betti_for_spec(const VarietySpec& spec, int max_p, int max_q,
                                 std::size_t entry_budget = 50'000'000) {
    GradedRingPresentation R = make_variety(spec);
    BettiTable t = betti_table(R, max_p, max_q, entry_budget);
    t.variety_id = spec.id();
    t.seed = spec.seed;
    t.prime = spec.prime;
    return t;
}

// Compute the table at `extra_primes + 1` distinct primes and require exact
// agreement of every entry; one BadPrime retry with a further prime.
inline BettiTable betti_crosschecked(VarietySpec spec, int max_p, int max_q,
                                     int extra_primes = 1,
                                     std::size_t entry_budget = 50'000'000) {
    constexpr int kAvailable = static_cast<int>(std::size(kCrosscheckPrimes));
    auto compute_at = [&](std::uint64_t p) {
        VarietySpec s = spec;
        s.prime = p;
        return betti_for_spec(s, max_p, max_q, entry_budget);
    };
    BettiTable base = betti_for_spec(spec, max_p, max_q, entry_budget);
    int used = 0;
    for (int i = 0; i < extra_primes && used < kAvailable; ++i) {
        while (used < kAvailable && kCrosscheckPrimes[used] == spec.prime) ++used;
        if (used >= kAvailable) break;
        BettiTable other = compute_at(kCrosscheckPrimes[used++]);
        if (other.entries != base.entries) {
            // one retry with a third prime; trust the majority
            while (used < kAvailable && kCrosscheckPrimes[used] == spec.prime) ++used;
            if (used >= kAvailable) throw BadPrime("cross-prime mismatch, no primes left");
            BettiTable third = compute_at(kCrosscheckPrimes[used++]);
            if (third.entries == base.entries) continue;
            if (third.entries == other.entries) {
                other.variety_id = base.variety_id;
                other.seed = base.seed;
                return other;
            }
            throw BadPrime("cross-prime mismatch unresolved for " + spec.id());
        }
    }
    return base;
}

} // namespace syzygy

#endif
