#include <catch_amalgamated.hpp>

#include "syzygy/graded_ring.hpp"
#include "syzygy/monomial.hpp"
#include "syzygy/varieties.hpp"

using namespace syzygy;

TEST_CASE("monomials of degree") {
    auto m21 = monomials_of_degree(2, 1);
    REQUIRE(m21.size() == 2);
    CHECK(m21[0] == Monomial{1, 0});  // x0 first in grevlex
    CHECK(m21[1] == Monomial{0, 1});

    auto m30 = monomials_of_degree(3, 0);
    REQUIRE(m30.size() == 1);
    CHECK(m30[0] == Monomial{0, 0, 0});

    CHECK(monomials_of_degree(3, 2).size() == 6);  // C(4,2)
}

TEST_CASE("grevlex order is a total order within a degree") {
    auto ms = monomials_of_degree(4, 3);
    CHECK(ms.size() == 20);
    for (std::size_t i = 0; i + 1 < ms.size(); ++i) {
        CHECK(grevlex_precedes(ms[i], ms[i + 1]));
        CHECK_FALSE(grevlex_precedes(ms[i + 1], ms[i]));
    }
}

TEST_CASE("graded pieces of the twisted cubic") {
    GradedRingPresentation R = rational_normal_curve(3);
    CHECK(R.dim(0) == 1);
    CHECK(R.dim(1) == 4);
    CHECK(R.dim(2) == 7);  // h^0(P^1, O(6)); ideal piece has dim 10 - 7 = 3
    CHECK(R.piece(2).relations.rank() == 3);
    CHECK(R.dim(3) == 10);
}

TEST_CASE("graded pieces of a genus-4 canonical curve") {
    GradedRingPresentation R = canonical_curve(4, 1);
    CHECK(R.dim(0) == 1);
    CHECK(R.dim(1) == 4);
    CHECK(R.dim(2) == 9);   // 3g - 3
    CHECK(R.dim(3) == 15);  // (2q-1)(g-1)
}

TEST_CASE("unit multiplication") {
    GradedRingPresentation R = rational_normal_curve(3);
    std::vector<std::uint64_t> one{1};
    std::vector<std::uint64_t> b{0, 3, 0, 5};
    CHECK(R.multiply_reduce(0, one, 1, b) == b);
    CHECK(R.multiply_reduce(1, b, 0, one) == b);
}

TEST_CASE("multiplication is commutative and bilinear on random inputs") {
    GradedRingPresentation R = canonical_curve(4, 2);
    const PrimeField& F = R.field();
    SplitMix64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<std::uint64_t> a(R.dim(1)), b(R.dim(1));
        for (auto& c : a) c = rng.field_element(F);
        for (auto& c : b) c = rng.field_element(F);
        CHECK(R.multiply_reduce(1, a, 1, b) == R.multiply_reduce(1, b, 1, a));

        // (a + b) * a == a*a + b*a
        std::vector<std::uint64_t> s(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) s[i] = F.add(a[i], b[i]);
        auto lhs = R.multiply_reduce(1, s, 1, a);
        auto r1 = R.multiply_reduce(1, a, 1, a);
        auto r2 = R.multiply_reduce(1, b, 1, a);
        for (std::size_t i = 0; i < lhs.size(); ++i)
            CHECK(lhs[i] == F.add(r1[i], r2[i]));
    }
}

TEST_CASE("multiplication is associative up to degree 3") {
    for (auto ring : {rational_normal_curve(3), canonical_curve(5, 1)}) {
        const PrimeField& F = ring.field();
        SplitMix64 rng(9);
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<std::uint64_t> a(ring.dim(1)), b(ring.dim(1)), c(ring.dim(1));
            for (auto& x : a) x = rng.field_element(F);
            for (auto& x : b) x = rng.field_element(F);
            for (auto& x : c) x = rng.field_element(F);
            auto ab_c = ring.multiply_reduce(2, ring.multiply_reduce(1, a, 1, b), 1, c);
            auto a_bc = ring.multiply_reduce(1, a, 2, ring.multiply_reduce(1, b, 1, c));
            CHECK(ab_c == a_bc);
        }
    }
}

TEST_CASE("twisted cubic quadric relations hold in the quotient") {
    // x0 x2 = x1^2 and x1 x3 = x2^2 and x0 x3 = x1 x2 as classes in R_2
    GradedRingPresentation R = rational_normal_curve(3);
    const GradedPiece& P = R.piece(2);
    auto reduce_monomial = [&](Monomial m) {
        return P.reduce({{P.ambient_index.at(m), 1}}, R.field());
    };
    CHECK(reduce_monomial({1, 0, 1, 0}) == reduce_monomial({0, 2, 0, 0}));
    CHECK(reduce_monomial({0, 1, 0, 1}) == reduce_monomial({0, 0, 2, 0}));
    CHECK(reduce_monomial({1, 0, 0, 1}) == reduce_monomial({0, 1, 1, 0}));
}

TEST_CASE("veronese quotient form: plane quintic canonical ring") {
    GradedRingPresentation R = canonical_curve(6, 1);
    CHECK(R.dim(1) == 6);   // conics in 3 variables
    CHECK(R.dim(2) == 15);  // (2q-1)(g-1)
    CHECK(R.dim(3) == 25);
    CHECK(R.ambient_degree(2) == 4);
}

TEST_CASE("hilbert oracle mismatch raises DegenerateSample") {
    // a single quadric cannot present a genus-4 canonical ring
    PrimeField F;
    SplitMix64 rng(3);
    QuotientForm form;
    form.generators.push_back(random_homogeneous(4, 2, F, rng));
    GradedRingPresentation bad(4, std::move(form), F, {HilbertOracle::CanonicalCurve, 4});
    CHECK(bad.dim(1) == 4);  // no degree-1 relations, still fine
    CHECK_THROWS_AS(bad.dim(3), DegenerateSample);
}

TEST_CASE("graded pieces are deterministic for a fixed seed") {
    GradedRingPresentation a = canonical_curve(5, 77);
    GradedRingPresentation b = canonical_curve(5, 77);
    for (int q = 0; q <= 3; ++q) {
        CHECK(a.piece(q).standard == b.piece(q).standard);
        CHECK(a.piece(q).relations.pivots == b.piece(q).relations.pivots);
    }
}
